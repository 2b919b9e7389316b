#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dlab/error.hpp"
#include "dlab/io.hpp"
#include "dlab/norm.hpp"
#include "support.hpp"

using namespace dlab;
using testing::e;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  const auto err_path = std::filesystem::temp_directory_path() / "dlab_cli_test_stderr.txt";
  std::string cmd = quote(DLAB_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(err_path.string());
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

const std::string l1_3 = R"({"type":"lp","p":1,"dim":3})";
const std::string l1_2 = R"({"type":"lp","p":1,"dim":2})";
const std::string renorm_l2_4 = R"({"type":"renorm","base":{"type":"lp","p":2,"dim":4}})";

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("space json round-trips") {
  const std::vector<std::string> texts{
      l1_3,
      R"({"type":"lp","p":"inf","dim":2})",
      R"({"type":"lp","p":2.5,"dim":4})",
      renorm_l2_4,
      R"({"type":"polytope","dim":2,"generators":[{"1":1.0},{"1":-1.0},{"1":0.1,"2":0.7},{"1":-0.1,"2":-0.7}]})",
      R"({"type":"sum","norm":{"type":"lp","p":"inf","dim":2},"left":{"type":"lp","p":1,"dim":2},"right":{"type":"lp","p":2,"dim":1}})",
      R"({"type":"tensor","left":{"type":"lp","p":1,"dim":2},"right":{"type":"lp","p":"inf","dim":2}})"};
  for (const auto& t : texts) {
    const auto s = parse_space(t);
    const auto once = space_to_json(*s);
    const auto twice = space_to_json(*space_from_json(once));
    CHECK(once.dump() == twice.dump());
    CHECK(once == Json::parse(t));
  }
}

TEST_CASE("vector formats") {
  CHECK(parse_vector("1,0,2") == e(1) + e(3, 2.0));
  CHECK(parse_vector("[1, 0, 2]") == e(1) + e(3, 2.0));
  CHECK(parse_vector(R"({"1":1,"3":2})") == e(1) + e(3, 2.0));
  CHECK(vector_from_json(vector_to_json(e(2, 0.1) - e(7, 1e-17))) == e(2, 0.1) - e(7, 1e-17));
  for (const auto* bad : {"", "1,,2", "1,x", R"({"0":1})", R"({"a":1})", "[1,"}) {
    try {
      parse_vector(bad);
      FAIL("expected kParse for " << bad);
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::kParse);
    }
  }
}

TEST_CASE("norm command") {
  auto r = run({"norm", l1_3, "--vector", "1,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "2.000000000000\n");
  r = run({"norm", renorm_l2_4, "--vector", "1,0,0,0"});
  CHECK(r.out == "1.000000000000\n");
  r = run({"norm", renorm_l2_4, "--vector", "1,2,0,0"});
  CHECK(r.out == "1.000000000000\n");
  r = run({"norm", renorm_l2_4, "--vector", R"({"3":-2})"});
  CHECK(r.out == "2.000000000000\n");
}

TEST_CASE("space files") {
  const auto path = std::filesystem::temp_directory_path() / "dlab_cli_test_space.json";
  std::ofstream(path) << l1_3;
  const auto r = run({"norm", path.string(), "--vector", "0,-3,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "4.000000000000\n");
}

TEST_CASE("error exits write only to stderr") {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"norm", R"({"type":"lp")", "--vector", "1"}, 2},
      {{"norm", R"({"type":"banana","dim":2})", "--vector", "1"}, 2},
      {{"norm", l1_3, "--vector", "1,zz"}, 2},
      {{"norm", "/nonexistent/space.json", "--vector", "1"}, 2},
      {{"norm", l1_3, "--vector", R"({"4":1})"}, 3},
      {{"norm", l1_3, "--vector", "1,0,0,1"}, 3},
      {{"diag", l1_3, "--check", "nabla", "--point", "0.5,0,0"}, 5},
      {{"diag", renorm_l2_4, "--check", "exposed", "--point", "1,0,0,0"}, 5},
      {{"sweep", "--construction", "renorm-l2", "--dims", "2..17"}, 5},
      {{"diag", l1_3, "--check", "bogus", "--point", "1"}, 2},
      {{"frobnicate"}, 2}};
  for (const auto& [args, code] : cases) {
    const auto r = run(args);
    CAPTURE(args[0]);
    CAPTURE(r.err);
    CHECK(r.code == code);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("diag command") {
  auto r = run({"diag", l1_3, "--check", "nabla", "--point", "1,0,0"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["property"] == "Nabla");
  CHECK(j["verdict"] == "Holds");
  CHECK(j["deficiency"].get<double>() == doctest::Approx(0.0));

  r = run({"diag", l1_2, "--check", "nabla", "--point", "0.5,0.5"});
  CHECK(r.code == 1);
  j = Json::parse(r.out);
  CHECK(j["verdict"] == "Fails");
  CHECK(j["deficiency"].get<double>() == doctest::Approx(1.0));

  r = run({"diag", l1_3, "--check", "dpoint", "--point", "1,0,0", "--alpha", "0.1"});
  CHECK(r.code == 1);
  j = Json::parse(r.out);
  CHECK(j["witness"]["achieved"].get<double>() == doctest::Approx(0.2));
  CHECK(j["params"]["alpha"].get<double>() == 0.1);

  r = run({"diag", l1_3, "--check", "exposed", "--point", "1,0,0"});
  CHECK(r.code == 0);

  r = run({"diag", l1_3, "--check", "daugavet", "--point", "1,0,0"});
  CHECK(r.code == 1);
  j = Json::parse(r.out);
  CHECK(j["parts"].size() == 2);

  r = run({"diag", renorm_l2_4, "--check", "nabla", "--point", "1,0,0,0"});
  CHECK(r.code == 4);
  CHECK(Json::parse(r.out)["verdict"] == "LowerBoundOnly");
}

TEST_CASE("oracle gauge agrees with norm on polyhedral spaces") {
  const auto poly = R"({"type":"renorm","base":{"type":"lp","p":"inf","dim":3}})";
  for (const auto* v : {"1,2,0", "0.3,-0.2,0.9", "-1,1,1"}) {
    const auto a = run({"norm", poly, "--vector", v});
    const auto b = run({"oracle", "gauge", poly, "--vector", v});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(std::stod(a.out) == doctest::Approx(std::stod(b.out)).epsilon(1e-9));
  }
  CHECK(run({"oracle", "gauge", renorm_l2_4, "--vector", "1"}).code == 5);
}

TEST_CASE("verify-paper command") {
  auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  auto all = run({"verify-paper", "--json"});
  CHECK(all.code == 0);
  const auto rows = Json::parse(all.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() > 10);
  r = run({"verify-paper", "--only", "renorm", "--json"});
  const auto subset = Json::parse(r.out);
  CHECK(subset.size() > 0);
  CHECK(subset.size() < rows.size());
  for (const auto& row : subset) CHECK(row["module"] == "renorm");
}

TEST_CASE("sweep command") {
  const auto r = run({"sweep", "--construction", "renorm-l2", "--dims", "2..8"});
  CHECK(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 1 + 7 * 4);
  CHECK(rows[0] == std::vector<std::string>{"n", "alpha", "dpoint_deficiency_proxy", "exposure_margin",
                                            "primal_witness_distance", "dual_witness_distance"});
  double prev_margin = 3.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 6);
    CHECK(rows[i][4] == "2");
    CHECK(rows[i][5] == "2");
    const double margin = std::stod(rows[i][3]);
    CHECK(margin > 0.0);
    if (rows[i][1] == rows[1][1]) {
      CHECK(margin <= prev_margin + 1e-12);
      prev_margin = margin;
    }
  }
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(run({"sweep", "--construction", "renorm-l2", "--dims", "2..8"}).out == r.out);
}

TEST_CASE("outputs are deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"diag", renorm_l2_4, "--check", "nabla", "--point", "1,0,0,0"},
      {"diag", l1_3, "--check", "daugavet", "--point", "0,1,0", "--alpha", "0.25"},
      {"verify-paper", "--json"}};
  for (const auto& c : cmds) CHECK(run(c).out == run(c).out);
}
