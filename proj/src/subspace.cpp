#include "superleib/subspace.hpp"

#include "superleib/linear_map.hpp"

namespace superleib {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.rows_.emplace(i, SparseVector::unit(ambient_dim, i));
  return s;
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

SparseVector Subspace::reduce(SparseVector v) const {
  if (v.dim() != ambient_)
    throw Error("dimension_mismatch", "vector of dimension " + std::to_string(v.dim()) +
                                          " reduced against subspace of K^" +
                                          std::to_string(ambient_));
  // A pivot row is zero on every other pivot column, so one pass suffices.
  std::vector<std::pair<std::size_t, Scalar>> hits;
  for (const auto& [i, c] : v)
    if (rows_.count(i)) hits.emplace_back(i, c);
  for (const auto& [pivot, c] : hits) v.add_scaled(rows_.at(pivot), -c);
  return v;
}

bool Subspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  std::size_t pivot = v.leading_index();
  v *= Scalar(1) / v.leading_coeff();
  for (auto& [p, row] : rows_) {
    const Scalar* c = row.find(pivot);
    if (c) row.add_scaled(v, -Scalar(*c));
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("dimension_mismatch", "subspace ambient dimensions differ");
  for (const auto& [p, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const SparseVector& v) const {
  if (!contains(v)) throw Error("not_in_subspace", "vector does not lie in the subspace");
  std::vector<Scalar> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(v.at(pivot));
  return out;
}

Subspace row_reduce(const std::vector<SparseVector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (const auto& v : vectors) {
    if (v.dim() != ambient_dim)
      throw Error("dimension_mismatch", "row_reduce: vector of dimension " + std::to_string(v.dim()) +
                                            ", expected " + std::to_string(ambient_dim));
    s.insert(v);
  }
  return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("dimension_mismatch", "subspace ambient dimensions differ");
  Subspace out = a;
  for (const auto& v : b.basis()) out.insert(v);
  return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("dimension_mismatch", "subspace ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  auto ba = a.basis();
  auto bb = b.basis();
  // Solve sum x_i a_i - sum y_j b_j = 0; the a-part of each solution is in both.
  std::vector<SparseVector> cols;
  cols.reserve(ba.size() + bb.size());
  for (const auto& v : ba) cols.push_back(v);
  for (const auto& v : bb) cols.push_back(-v);
  LinearMap m(std::move(cols), ba.size() + bb.size(), n);
  Subspace out(n);
  for (const auto& sol : kernel(m).basis()) {
    SparseVector w(n);
    for (const auto& [i, c] : sol)
      if (i < ba.size()) w.add_scaled(ba[i], c);
    out.insert(std::move(w));
  }
  return out;
}

// Frame rows live in K^{2n}: the first n columns hold the echelon form,
// the last n record which combination of the added vectors produced it.
bool Frame::add(const SparseVector& v) {
  if (v.dim() != ambient_) throw Error("dimension_mismatch", "Frame::add: wrong ambient dimension");
  const std::size_t k = vectors_.size();
  if (k == ambient_) return false;
  SparseVector r(2 * ambient_);
  for (const auto& [j, c] : v) r.set(j, c);
  r.set(ambient_ + k, Scalar(1));
  for (const auto& row : rows_) {
    Scalar c = r.at(row.leading_index());
    if (sgn(c) != 0) r.add_scaled(row, -c);
  }
  if (r.leading_index() >= ambient_) return false;
  r *= Scalar(1) / r.leading_coeff();
  for (auto& row : rows_) {
    Scalar c = row.at(r.leading_index());
    if (sgn(c) != 0) row.add_scaled(r, -c);
  }
  rows_.push_back(std::move(r));
  vectors_.push_back(v);
  augmented_.insert(v);
  return true;
}

bool Frame::contains(const SparseVector& v) const { return augmented_.contains(v); }

SparseVector Frame::coordinates(const SparseVector& v) const {
  if (v.dim() != ambient_) throw Error("dimension_mismatch", "Frame::coordinates: wrong ambient dimension");
  if (!contains(v)) throw Error("not_in_subspace", "vector does not lie in the span of the frame");
  SparseVector r(2 * ambient_);
  for (const auto& [k, c] : v) r.set(k, c);
  for (const auto& row : rows_) {
    Scalar c = r.at(row.leading_index());
    if (sgn(c) != 0) r.add_scaled(row, -c);
  }
  // r = (0, -c) now.
  SparseVector out(vectors_.size());
  for (const auto& [k, c] : r) out.set(k - ambient_, -c);
  return out;
}

}  // namespace superleib
