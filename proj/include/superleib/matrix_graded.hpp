#pragma once

#include "superleib/bilinear.hpp"
#include "superleib/checks.hpp"

#include <map>
#include <tuple>

namespace superleib {

/// gl(m, n, D) together with its indexing. Matrix indices are 1-based;
/// row/column i is even for i <= m and odd otherwise.
struct MatrixAlgebra {
  LeibnizSuperalgebra algebra;
  std::size_t m = 0;
  std::size_t n = 0;
  SuperDialgebra coefficients;
  /// False when D has no bar-unit; the bracket is still defined.
  bool unital_coefficients = false;

  std::size_t size() const noexcept { return m + n; }
  Parity row_parity(std::size_t i) const noexcept { return i <= m ? Parity::even : Parity::odd; }
  Parity tau(std::size_t i, std::size_t j) const noexcept { return row_parity(i) + row_parity(j); }
  /// Basis index of E_ij(a_k).
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;
  /// E_ij(a) for an arbitrary coefficient vector a.
  SparseVector element(std::size_t i, std::size_t j, const SparseVector& a) const;
  /// Image of a matrix over K (given in gl(m, n, K) coordinates) under
  /// E_ij -> E_ij(1). Requires a bar-unit.
  SparseVector lift(const SparseVector& scalar_matrix) const;
};

/// [X, Y] = δ_jk E_il(a⊢b) - (-1)^{|X||Y|} δ_il E_kj(b⊣a) for X = E_ij(a),
/// Y = E_kl(b), where |E_ij(a)| = |i| + |j| + |a|. With scalar coefficients
/// the sign reduces to the block parities alone.
MatrixAlgebra build_gl(std::size_t m, std::size_t n, const SuperDialgebra& d);

/// Supertrace of an element of gl(m, n, K). Throws `non_scalar_coefficients`
/// when the coefficient algebra is not one-dimensional.
Scalar supertrace(const MatrixAlgebra& gl, const SparseVector& v);

/// Span of all brackets of basis pairs.
Subspace derived_subalgebra(const LeibnizSuperalgebra& l);

/// A subalgebra on the RREF basis of a closed graded subspace.
struct Restriction {
  LeibnizSuperalgebra algebra;
  /// basis[i] is the parent vector of the i-th basis element.
  std::vector<SparseVector> basis;
  Subspace span;

  /// Coordinates of a parent vector lying in the span.
  SparseVector coordinates(const SparseVector& parent) const;
  /// Parent vector of a vector in subalgebra coordinates.
  SparseVector embed(const SparseVector& v) const;
};

/// Throws `empty_subspace`, `not_closed` or `inhomogeneous_subspace`.
Restriction restrict(const LeibnizSuperalgebra& l, const Subspace& s, std::string name);

/// sl(m, n, D) = [gl(m, n, D), gl(m, n, D)].
Restriction build_sl(const MatrixAlgebra& gl);

/// Diagonal Cartan basis of sl(p, q) in gl(p, q, K) coordinates:
/// h_i = E_ii - E_{i+1,i+1} for i != p and h_p = E_pp + E_{p+1,p+1}.
/// Throws `equal_block_sizes` for p = q.
std::vector<SparseVector> cartan_of_sl(std::size_t p, std::size_t q);

/// Images v(i, j, k) of the generators u_ij(a_k), for i != j.
using SteinbergMap = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SparseVector>;

/// The canonical map u_ij(a_k) -> E_ij(a_k) into gl(m, n, D) coordinates.
SteinbergMap matrix_unit_map(const MatrixAlgebra& gl);

/// Checks the Steinberg relations for v inside L, where v is extended
/// linearly in the coefficient. Violation tuples are (i, j, a, k, l, b).
/// Signs use the full parity of u_ij(a), as in build_gl.
/// Throws `steinberg_too_small` when m + n < 3 and `incomplete_map` when
/// an image is missing.
ViolationReport check_steinberg_relations(const LeibnizSuperalgebra& l, const SteinbergMap& v, std::size_t m,
                                          std::size_t n, const SuperDialgebra& d, const CheckOptions& opts = {});

}  // namespace superleib
