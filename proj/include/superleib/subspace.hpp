#pragma once

#include "superleib/sparse_vector.hpp"

#include <map>
#include <vector>

namespace superleib {

/// Subspace of K^n stored as its reduced row-echelon basis. Two subspaces
/// are equal iff their RREF bases are equal.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }

  /// RREF rows ordered by strictly increasing pivot column.
  std::vector<SparseVector> basis() const;
  std::vector<std::size_t> pivots() const;

  /// Adds `v` to the span; returns false when it was already contained.
  bool insert(SparseVector v);

  /// Remainder of `v` after eliminating every pivot column.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Coefficients of `v` against basis(). Throws `not_in_subspace` otherwise.
  std::vector<Scalar> coordinates(const SparseVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot column
};

/// A linearly independent list of vectors with coordinate lookup against
/// exactly that list (not its RREF).
class Frame {
public:
  explicit Frame(std::size_t ambient_dim = 0) : ambient_(ambient_dim), augmented_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<SparseVector>& vectors() const noexcept { return vectors_; }
  /// Appends `v` when it is independent of the current vectors; returns
  /// whether it was added.
  bool add(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  /// c with v = Σ c_k vectors()[k]. Throws `not_in_subspace` otherwise.
  SparseVector coordinates(const SparseVector& v) const;

private:
  std::size_t ambient_;
  std::vector<SparseVector> vectors_;
  std::vector<SparseVector> rows_;
  Subspace augmented_;
};

/// RREF basis of span(vectors). All vectors must share `ambient_dim`.
Subspace row_reduce(const std::vector<SparseVector>& vectors, std::size_t ambient_dim);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace superleib
