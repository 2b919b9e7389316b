#include "dlab/sparse_vector.hpp"

#include <cmath>
#include <cstdio>

#include "dlab/error.hpp"

namespace dlab {

namespace {

void check_index(int index) {
  if (index < 1) {
    throw Error(ErrorCode::kOutOfDimension, "coordinate indices start at 1, got " + std::to_string(index));
  }
}

void accumulate(SparseVector::Entries& into, const SparseVector::Entries& from, double sign) {
  for (const auto& [i, v] : from) {
    auto it = into.find(i);
    if (it == into.end()) {
      into.emplace(i, sign * v);
      continue;
    }
    it->second += sign * v;
    if (it->second == 0.0) into.erase(it);
  }
}

}  // namespace

SparseVector::SparseVector(std::initializer_list<std::pair<const int, double>> entries) {
  for (const auto& [i, v] : entries) set(i, v);
}

SparseVector SparseVector::unit(int index, double value) {
  SparseVector v;
  v.set(index, value);
  return v;
}

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) v.entries_.emplace(static_cast<int>(i) + 1, dense[i]);
  }
  return v;
}

double SparseVector::operator[](int index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? 0.0 : it->second;
}

void SparseVector::set(int index, double value) {
  check_index(index);
  if (value == 0.0) {
    entries_.erase(index);
  } else {
    entries_[index] = value;
  }
}

std::vector<int> SparseVector::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.push_back(i);
  return out;
}

int SparseVector::max_index() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }

std::vector<double> SparseVector::to_dense(int dim) const {
  if (max_index() > dim) {
    throw Error(ErrorCode::kOutOfDimension,
                "index " + std::to_string(max_index()) + " exceeds dimension " + std::to_string(dim));
  }
  std::vector<double> out(static_cast<std::size_t>(dim), 0.0);
  for (const auto& [i, v] : entries_) out[static_cast<std::size_t>(i - 1)] = v;
  return out;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  accumulate(entries_, other.entries_, 1.0);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  accumulate(entries_, other.entries_, -1.0);
  return *this;
}

SparseVector& SparseVector::operator*=(double scalar) {
  if (scalar == 0.0) {
    entries_.clear();
    return *this;
  }
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= scalar;
    // underflow can produce an exact zero
    if (it->second == 0.0) {
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

double pairing(const SparseVector& f, const SparseVector& x) {
  const auto& small = f.size() <= x.size() ? f.entries() : x.entries();
  const auto& large = f.size() <= x.size() ? x : f;
  double sum = 0.0;
  for (const auto& [i, v] : small) sum += v * large[i];
  return sum;
}

double max_abs_diff(const SparseVector& a, const SparseVector& b) {
  double out = 0.0;
  for (const auto& [i, v] : a.entries()) out = std::max(out, std::abs(v - b[i]));
  for (const auto& [i, v] : b.entries()) {
    if (a.entries().count(i) == 0) out = std::max(out, std::abs(v));
  }
  return out;
}

std::string to_string(const SparseVector& v) {
  std::string out = "{";
  bool first = true;
  char buf[64];
  for (const auto& [i, x] : v.entries()) {
    std::snprintf(buf, sizeof(buf), "%s%d: %.12g", first ? "" : ", ", i, x);
    out += buf;
    first = false;
  }
  return out + "}";
}

}  // namespace dlab
