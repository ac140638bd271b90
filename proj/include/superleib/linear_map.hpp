#pragma once

#include "superleib/polynomial.hpp"
#include "superleib/sparse_vector.hpp"
#include "superleib/subspace.hpp"

#include <vector>

namespace superleib {

/// K-linear map K^domain -> K^codomain stored by the images of the domain
/// basis vectors.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(std::vector<SparseVector> columns, std::size_t domain_dim, std::size_t codomain_dim);

  static LinearMap zero(std::size_t domain_dim, std::size_t codomain_dim);
  static LinearMap identity(std::size_t dim);

  std::size_t domain_dim() const noexcept { return domain_; }
  std::size_t codomain_dim() const noexcept { return codomain_; }
  const std::vector<SparseVector>& columns() const noexcept { return cols_; }
  const SparseVector& column(std::size_t j) const { return cols_.at(j); }

  SparseVector apply(const SparseVector& v) const;
  Scalar entry(std::size_t row, std::size_t col) const { return cols_.at(col).at(row); }

  /// Rows of the matrix as vectors over the domain.
  std::vector<SparseVector> rows() const;

  /// this - lambda * id. Requires a square map.
  LinearMap shifted(const Scalar& lambda) const;

  friend LinearMap compose(const LinearMap& outer, const LinearMap& inner);
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.cols_ == b.cols_;
  }

private:
  std::size_t domain_ = 0;
  std::size_t codomain_ = 0;
  std::vector<SparseVector> cols_;
};

LinearMap compose(const LinearMap& outer, const LinearMap& inner);

Subspace kernel(const LinearMap& m);
Subspace image(const LinearMap& m);
std::size_t rank(const LinearMap& m);

/// Monic characteristic polynomial det(x*id - M), via reduction to upper
/// Hessenberg form. Throws `non_square` for rectangular maps.
Polynomial char_poly(const LinearMap& m);

}  // namespace superleib
