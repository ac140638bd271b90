#pragma once

#include "superleib/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace superleib {

/// Vector in K^n keyed by basis index. Zero coefficients are never stored.
class SparseVector {
public:
  using Entries = std::map<std::size_t, Scalar>;

  SparseVector() = default;
  explicit SparseVector(std::size_t ambient_dim) : dim_(ambient_dim) {}

  static SparseVector unit(std::size_t ambient_dim, std::size_t index,
                           const Scalar& coeff = Scalar(1));
  static SparseVector from_dense(const std::vector<Scalar>& values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Coefficient at `index` (zero when absent).
  Scalar at(std::size_t index) const;
  const Scalar* find(std::size_t index) const;

  void set(std::size_t index, const Scalar& value);
  void add(std::size_t index, const Scalar& value);
  void add_scaled(const SparseVector& other, const Scalar& factor);

  /// Smallest index with a nonzero coefficient. Requires !is_zero().
  std::size_t leading_index() const { return entries_.begin()->first; }
  const Scalar& leading_coeff() const { return entries_.begin()->second; }

  Entries::const_iterator begin() const { return entries_.begin(); }
  Entries::const_iterator end() const { return entries_.end(); }

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Scalar& factor);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const Scalar& c) { return a *= c; }
  friend SparseVector operator*(const Scalar& c, SparseVector a) { return a *= c; }
  friend SparseVector operator-(SparseVector a) { return a *= Scalar(-1); }

  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  /// Lexicographic order on (index, coefficient) pairs; used only to make
  /// report output deterministic.
  friend bool operator<(const SparseVector& a, const SparseVector& b);

  std::vector<Scalar> to_dense() const;

private:
  void check_index(std::size_t index) const;
  void check_same_dim(const SparseVector& other) const;

  std::size_t dim_ = 0;
  Entries entries_;
};

/// "3*e0 - 1/2*e4" style rendering with caller-supplied basis names.
std::string format_vector(const SparseVector& v, const std::vector<std::string>& labels);

}  // namespace superleib
