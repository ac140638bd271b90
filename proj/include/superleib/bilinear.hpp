#pragma once

#include "superleib/linear_map.hpp"
#include "superleib/super_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superleib {

/// Structure constants of a bilinear map K^l x K^r -> K^o: the product of
/// basis elements i and j is constants[i * r + j].
class BilinearProduct {
public:
  BilinearProduct() = default;
  BilinearProduct(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
  /// Square product on a single space.
  explicit BilinearProduct(std::size_t dim) : BilinearProduct(dim, dim, dim) {}

  std::size_t left_dim() const noexcept { return left_; }
  std::size_t right_dim() const noexcept { return right_; }
  std::size_t out_dim() const noexcept { return out_; }

  const SparseVector& get(std::size_t i, std::size_t j) const { return constants_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, SparseVector v);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  /// e_i * v
  SparseVector left_apply(std::size_t i, const SparseVector& v) const;
  /// u * e_j
  SparseVector right_apply(const SparseVector& u, std::size_t j) const;
  SparseVector apply(const SparseVector& u, const SparseVector& v) const;

  bool is_zero() const;
  friend bool operator==(const BilinearProduct& a, const BilinearProduct& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && a.constants_ == b.constants_;
  }

private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<SparseVector> constants_;
};

/// Two products (left = ⊣, right = ⊢) on one super space, with an optional
/// bar-unit 1 satisfying 1 ⊢ a = a = a ⊣ 1 when present.
struct SuperDialgebra {
  SuperSpace space;
  BilinearProduct left;
  BilinearProduct right;
  std::optional<SparseVector> bar_unit;

  SuperDialgebra() = default;
  SuperDialgebra(SuperSpace space, BilinearProduct left, BilinearProduct right,
                 std::optional<SparseVector> bar_unit = std::nullopt);

  std::size_t dim() const noexcept { return space.dim(); }
  const std::string& name() const noexcept { return space.name; }
};

struct LeibnizSuperalgebra {
  SuperSpace space;
  BilinearProduct bracket;

  LeibnizSuperalgebra() = default;
  LeibnizSuperalgebra(SuperSpace space, BilinearProduct bracket);

  std::size_t dim() const noexcept { return space.dim(); }
  const std::string& name() const noexcept { return space.name; }
  SparseVector operator()(const SparseVector& a, const SparseVector& b) const { return bracket.apply(a, b); }
  SparseVector basis_vector(std::size_t i) const { return SparseVector::unit(dim(), i); }
};

/// Associative superalgebra viewed as a dialgebra with ⊣ = ⊢.
SuperDialgebra as_dialgebra(SuperSpace space, const BilinearProduct& product,
                            std::optional<SparseVector> unit = std::nullopt);

}  // namespace superleib
