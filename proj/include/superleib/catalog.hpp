#pragma once

#include "superleib/bilinear.hpp"

namespace superleib::catalog {

/// The ground field as a one-dimensional even algebra.
SuperDialgebra field();

/// Exterior algebra on n odd generators th1..thn; basis = monomials in
/// (degree, lexicographic) order, labelled "1", "th1", "th1th2", ...
SuperDialgebra exterior(std::size_t n);

/// K[t]/(t^n), all even, basis 1, t, ..., t^{n-1}.
SuperDialgebra truncated_polynomial(std::size_t n);

/// Matrix superalgebra M(p|q): E_ij has parity |i|+|j| with |i| odd for
/// i > p. Index of E_ij (1-based i, j) is (i-1)*(p+q) + (j-1).
SuperDialgebra matrix_superalgebra(std::size_t p, std::size_t q);

/// Upper triangular n x n matrices (even), basis E_ij with i <= j.
SuperDialgebra upper_triangular(std::size_t n);

/// Differential dialgebra on Λ(th1, th2) with d = th2 ∂/∂th1.
SuperDialgebra differential_exterior();
/// The derivation th2 ∂/∂th1 on Λ(th1, th2).
LinearMap exterior_differential();

/// Differential dialgebra on upper triangular 2x2 matrices with d = ad E12.
SuperDialgebra differential_upper_triangular();

/// A ⊕ A' (A' a copy of A as bimodule) with (a,m)⊣(b,n) = (ab, mb),
/// (a,m)⊢(b,n) = (ab, an) and bar-unit (1, 0). Requires a unital A with
/// coinciding products. Labels of the second summand carry a trailing "'".
SuperDialgebra split_extension(const SuperDialgebra& a);

/// Sub-dialgebra spanned by the closure of `generators` under both
/// products, on its RREF basis. Throws `inhomogeneous_subspace` when the
/// closure is not graded.
SuperDialgebra generated_subdialgebra(const SuperDialgebra& d, const std::vector<SparseVector>& generators,
                                      std::optional<SparseVector> unit, const std::string& name);

/// Smallest unital dialgebra containing diff(Λ(th1, th2)): the sub-dialgebra
/// of split_extension(Λ(th1, th2)) generated by (1, 0) and the image of
/// x -> (dx, x), which is an injective dialgebra morphism.
SuperDialgebra unital_differential_exterior();

}  // namespace superleib::catalog
