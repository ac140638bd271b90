#include "superleib/linear_map.hpp"

#include <utility>

namespace superleib {

LinearMap::LinearMap(std::vector<SparseVector> columns, std::size_t domain_dim, std::size_t codomain_dim)
    : domain_(domain_dim), codomain_(codomain_dim), cols_(std::move(columns)) {
  if (cols_.size() != domain_)
    throw Error("dimension_mismatch", "linear map has " + std::to_string(cols_.size()) +
                                          " columns for domain dimension " + std::to_string(domain_));
  for (const auto& c : cols_)
    if (c.dim() != codomain_)
      throw Error("dimension_mismatch", "linear map column has dimension " + std::to_string(c.dim()) +
                                            ", expected " + std::to_string(codomain_));
}

LinearMap LinearMap::zero(std::size_t domain_dim, std::size_t codomain_dim) {
  return LinearMap(std::vector<SparseVector>(domain_dim, SparseVector(codomain_dim)), domain_dim, codomain_dim);
}

LinearMap LinearMap::identity(std::size_t dim) {
  std::vector<SparseVector> cols;
  cols.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) cols.push_back(SparseVector::unit(dim, i));
  return LinearMap(std::move(cols), dim, dim);
}

SparseVector LinearMap::apply(const SparseVector& v) const {
  if (v.dim() != domain_)
    throw Error("dimension_mismatch", "applying map with domain " + std::to_string(domain_) +
                                          " to vector of dimension " + std::to_string(v.dim()));
  SparseVector out(codomain_);
  for (const auto& [j, c] : v) out.add_scaled(cols_[j], c);
  return out;
}

std::vector<SparseVector> LinearMap::rows() const {
  std::vector<SparseVector> out(codomain_, SparseVector(domain_));
  for (std::size_t j = 0; j < domain_; ++j)
    for (const auto& [i, c] : cols_[j]) out[i].set(j, c);
  return out;
}

LinearMap LinearMap::shifted(const Scalar& lambda) const {
  if (domain_ != codomain_) throw Error("non_square", "shift of a non-square map");
  LinearMap out = *this;
  for (std::size_t j = 0; j < domain_; ++j) out.cols_[j].add(j, -lambda);
  return out;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.domain_ != inner.codomain_) throw Error("dimension_mismatch", "composition of incompatible maps");
  std::vector<SparseVector> cols;
  cols.reserve(inner.domain_);
  for (const auto& c : inner.cols_) cols.push_back(outer.apply(c));
  return LinearMap(std::move(cols), inner.domain_, outer.codomain_);
}

Subspace kernel(const LinearMap& m) {
  const std::size_t n = m.domain_dim();
  Subspace row_space = row_reduce(m.rows(), n);
  auto pivots = row_space.pivots();
  auto rows = row_space.basis();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Subspace out(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector x = SparseVector::unit(n, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar* c = rows[r].find(f);
      if (c) x.set(pivots[r], -*c);
    }
    out.insert(std::move(x));
  }
  return out;
}

Subspace image(const LinearMap& m) { return row_reduce(m.columns(), m.codomain_dim()); }

std::size_t rank(const LinearMap& m) { return row_reduce(m.rows(), m.domain_dim()).dim(); }

Polynomial char_poly(const LinearMap& m) {
  if (m.domain_dim() != m.codomain_dim()) throw Error("non_square", "characteristic polynomial of a non-square map");
  const std::size_t n = m.domain_dim();
  std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [i, c] : m.column(j)) h[i][j] = c;

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && sgn(h[piv][col]) == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][col + 1]);
    }
    const Scalar inv = Scalar(1) / h[col + 1][col];
    for (std::size_t r = col + 2; r < n; ++r) {
      if (sgn(h[r][col]) == 0) continue;
      Scalar u = h[r][col] * inv;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(h[col + 1][k]) != 0) h[r][k] -= u * h[col + 1][k];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(h[k][r]) != 0) h[k][col + 1] += u * h[k][r];
    }
  }

  // p_k = char poly of the leading k x k block.
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.emplace_back(std::vector<Scalar>{Scalar(1)});
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = Polynomial({-h[k - 1][k - 1], Scalar(1)}) * p[k - 1];
    Scalar t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h[k - i][k - i - 1];
      if (sgn(t) == 0) break;
      Scalar coef = t * h[k - i - 1][k - 1];
      if (sgn(coef) != 0) next = next - coef * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

}  // namespace superleib
