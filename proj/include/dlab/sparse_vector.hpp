#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dlab {

/// Finitely supported real vector indexed by 1-based coordinates.
///
/// Stored entries are never zero, so support() is exactly the key set.
/// The same type carries points and functionals; pairing() is the dual action.
class SparseVector {
 public:
  using Entries = std::map<int, double>;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const int, double>> entries);

  static SparseVector unit(int index, double value = 1.0);
  /// dense[0] becomes coordinate 1.
  static SparseVector from_dense(std::span<const double> dense);

  double operator[](int index) const;
  void set(int index, double value);

  const Entries& entries() const { return entries_; }
  std::vector<int> support() const;
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Largest stored index, 0 for the zero vector.
  int max_index() const;

  std::vector<double> to_dense(int dim) const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(double scalar);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, double s) { return a *= s; }
  friend SparseVector operator*(double s, SparseVector a) { return a *= s; }
  friend SparseVector operator-(SparseVector a) { return a *= -1.0; }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  Entries entries_;
};

/// <f, x> summed over the common support.
double pairing(const SparseVector& f, const SparseVector& x);

/// max_i |a_i - b_i|.
double max_abs_diff(const SparseVector& a, const SparseVector& b);

/// Text form "{1: 0.5, 3: -2}" with %.12g values.
std::string to_string(const SparseVector& v);

}  // namespace dlab
