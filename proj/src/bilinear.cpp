#include "superleib/bilinear.hpp"

namespace superleib {

BilinearProduct::BilinearProduct(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim),
      constants_(left_dim * right_dim, SparseVector(out_dim)) {}

std::size_t BilinearProduct::index(std::size_t i, std::size_t j) const {
  if (i >= left_ || j >= right_)
    throw Error("dimension_mismatch", "product index (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") out of range");
  return i * right_ + j;
}

void BilinearProduct::set(std::size_t i, std::size_t j, SparseVector v) {
  if (v.dim() != out_)
    throw Error("dimension_mismatch", "product value has dimension " + std::to_string(v.dim()) +
                                          ", expected " + std::to_string(out_));
  constants_[index(i, j)] = std::move(v);
}

void BilinearProduct::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  constants_[index(i, j)].add(k, c);
}

SparseVector BilinearProduct::left_apply(std::size_t i, const SparseVector& v) const {
  SparseVector out(out_);
  for (const auto& [j, c] : v) out.add_scaled(get(i, j), c);
  return out;
}

SparseVector BilinearProduct::right_apply(const SparseVector& u, std::size_t j) const {
  SparseVector out(out_);
  for (const auto& [i, c] : u) out.add_scaled(get(i, j), c);
  return out;
}

SparseVector BilinearProduct::apply(const SparseVector& u, const SparseVector& v) const {
  if (u.dim() != left_ || v.dim() != right_) throw Error("dimension_mismatch", "product arguments have wrong dimension");
  SparseVector out(out_);
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) out.add_scaled(get(i, j), a * b);
  return out;
}

bool BilinearProduct::is_zero() const {
  for (const auto& v : constants_)
    if (!v.is_zero()) return false;
  return true;
}

SuperDialgebra::SuperDialgebra(SuperSpace space_, BilinearProduct left_, BilinearProduct right_,
                               std::optional<SparseVector> bar_unit_)
    : space(std::move(space_)), left(std::move(left_)), right(std::move(right_)), bar_unit(std::move(bar_unit_)) {
  const std::size_t n = space.dim();
  for (const BilinearProduct* p : {&left, &right})
    if (p->left_dim() != n || p->right_dim() != n || p->out_dim() != n)
      throw Error("dimension_mismatch", "dialgebra '" + space.name + "': product dimensions do not match space");
  if (bar_unit) {
    if (bar_unit->dim() != n) throw Error("dimension_mismatch", "bar-unit has wrong dimension");
    auto p = space.parity_of(*bar_unit);
    if (!p || *p != Parity::even) throw Error("odd_bar_unit", "dialgebra '" + space.name + "': bar-unit must be even");
  }
}

LeibnizSuperalgebra::LeibnizSuperalgebra(SuperSpace space_, BilinearProduct bracket_)
    : space(std::move(space_)), bracket(std::move(bracket_)) {
  const std::size_t n = space.dim();
  if (bracket.left_dim() != n || bracket.right_dim() != n || bracket.out_dim() != n)
    throw Error("dimension_mismatch", "algebra '" + space.name + "': bracket dimensions do not match space");
}

SuperDialgebra as_dialgebra(SuperSpace space, const BilinearProduct& product, std::optional<SparseVector> unit) {
  return SuperDialgebra(std::move(space), product, product, std::move(unit));
}

}  // namespace superleib
