#include "dlab/io.hpp"

#include <cerrno>
#include <cstdlib>

#include "dlab/error.hpp"

namespace dlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kInvalidDescriptor, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("descriptor is missing \"") + key + "\"");
  return j.at(key);
}

int dim_field(const Json& j) {
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) bad("\"dim\" must be a positive integer");
  return d.get<int>();
}

Exponent exponent_from_json(const Json& p) {
  if (p.is_string() && (p.get<std::string>() == "inf" || p.get<std::string>() == "infinity")) {
    return Exponent::infinity();
  }
  if (!p.is_number()) bad("\"p\" must be a number >= 1 or \"inf\"");
  return Exponent::finite(p.get<double>());
}

Json exponent_to_json(Exponent p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

Json lp_to_json(const LpSpace& s) { return Json{{"type", "lp"}, {"p", exponent_to_json(s.p)}, {"dim", s.dim}}; }

LpSpace lp_from_json(const Json& j) { return LpSpace{exponent_from_json(field(j, "p")), dim_field(j)}; }

int index_key(const std::string& key) {
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(key.c_str(), &end, 10);
  if (key.empty() || *end != '\0' || errno != 0 || v < 1 || v > 1'000'000) {
    throw Error(ErrorCode::kParse, "vector index \"" + key + "\" is not a positive integer");
  }
  return static_cast<int>(v);
}

double number(const Json& j) {
  if (!j.is_number()) throw Error(ErrorCode::kParse, "vector entry " + j.dump() + " is not a number");
  return j.get<double>();
}

}  // namespace

SpacePtr space_from_json(const Json& j) {
  const auto& type = field(j, "type");
  if (!type.is_string()) bad("\"type\" must be a string");
  const auto t = type.get<std::string>();
  if (t == "lp") {
    const auto s = lp_from_json(j);
    return lp_space(s.p, s.dim);
  }
  if (t == "polytope") {
    const int n = dim_field(j);
    const auto& gens = field(j, "generators");
    if (!gens.is_array()) bad("\"generators\" must be an array");
    std::vector<SparseVector> list;
    for (const auto& g : gens) list.push_back(vector_from_json(g));
    return polytope_space(std::move(list), n);
  }
  if (t == "renorm") {
    const auto& base = field(j, "base");
    if (field(base, "type") != "lp") bad("renorm base must be an lp descriptor");
    const auto s = lp_from_json(base);
    return renormed_space(s.p, s.dim);
  }
  if (t == "sum") {
    return absolute_sum(space_from_json(field(j, "norm")), space_from_json(field(j, "left")),
                        space_from_json(field(j, "right")));
  }
  if (t == "tensor") return tensor_space(space_from_json(field(j, "left")), space_from_json(field(j, "right")));
  bad("unknown space type \"" + t + "\"");
}

Json space_to_json(const Space& space) {
  if (const auto* s = std::get_if<LpSpace>(&space.kind)) return lp_to_json(*s);
  if (const auto* s = std::get_if<PolytopeSpace>(&space.kind)) {
    Json gens = Json::array();
    for (const auto& g : s->ball->generators()) gens.push_back(vector_to_json(g));
    return Json{{"type", "polytope"}, {"dim", s->ball->dim()}, {"generators", gens}};
  }
  if (const auto* s = std::get_if<RenormedSpace>(&space.kind)) return Json{{"type", "renorm"}, {"base", lp_to_json(s->base)}};
  if (const auto* s = std::get_if<AbsoluteSumSpace>(&space.kind)) {
    return Json{{"type", "sum"},
                {"norm", space_to_json(*s->norm)},
                {"left", space_to_json(*s->left)},
                {"right", space_to_json(*s->right)}};
  }
  const auto& s = std::get<TensorSpace>(space.kind);
  return Json{{"type", "tensor"}, {"left", space_to_json(*s.left)}, {"right", space_to_json(*s.right)}};
}

SpacePtr parse_space(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("space JSON: ") + e.what());
  }
  return space_from_json(j);
}

SparseVector vector_from_json(const Json& j) {
  SparseVector v;
  if (j.is_array()) {
    int i = 1;
    for (const auto& x : j) v.set(i++, number(x));
  } else if (j.is_object()) {
    for (const auto& [key, x] : j.items()) v.set(index_key(key), number(x));
  } else {
    throw Error(ErrorCode::kParse, "vector must be an array or an index map");
  }
  return v;
}

SparseVector parse_vector(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorCode::kParse, "empty vector");
  if (text[first] == '{' || text[first] == '[') {
    try {
      return vector_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("vector JSON: ") + e.what());
    }
  }
  SparseVector v;
  int index = 1;
  std::string rest(text);
  std::size_t pos = 0;
  while (true) {
    const auto comma = rest.find(',', pos);
    const auto token = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(token.c_str(), &end);
    while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
    if (token.find_first_not_of(" \t") == std::string::npos || *end != '\0' || errno == ERANGE) {
      throw Error(ErrorCode::kParse, "bad vector entry \"" + token + "\"");
    }
    v.set(index++, x);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return v;
}

Json vector_to_json(const SparseVector& v) {
  Json j = Json::object();
  for (const auto& [i, x] : v.entries()) j[std::to_string(i)] = x;
  return j;
}

Json report_to_json(const DiagnosticReport& report) {
  Json j;
  j["property"] = to_string(report.property);
  j["verdict"] = to_string(report.verdict);
  j["deficiency"] = report.deficiency;
  if (report.witness) {
    Json w;
    w["vector"] = vector_to_json(report.witness->vector);
    w["functional"] = vector_to_json(report.witness->functional);
    w["achieved"] = report.witness->achieved;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  Json params;
  params["alpha"] = report.params.alpha ? Json(*report.params.alpha) : Json(nullptr);
  params["eps"] = report.params.eps ? Json(*report.params.eps) : Json(nullptr);
  params["sweep_size"] = report.params.sweep_size;
  params["samples"] = report.params.samples;
  j["params"] = params;
  if (!report.parts.empty()) {
    Json parts = Json::array();
    for (const auto& p : report.parts) parts.push_back(report_to_json(p));
    j["parts"] = parts;
  }
  return j;
}

}  // namespace dlab
