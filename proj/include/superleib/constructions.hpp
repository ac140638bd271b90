#pragma once

#include "superleib/bilinear.hpp"
#include "superleib/checks.hpp"

#include <variant>

namespace superleib {

/// [x,y] = x⊢y - (-1)^{|x||y|} y⊣x
LeibnizSuperalgebra to_leibniz(const SuperDialgebra& d);
/// [x,y] = x⊣y - (-1)^{|x||y|} y⊢x  (a right Leibniz superalgebra)
LeibnizSuperalgebra to_right_leibniz(const SuperDialgebra& d);

/// D ⊗ D' with (a⊗a')⋆(b⊗b') = (-1)^{|a'||b|} (a⋆b)⊗(a'⋆b'). Basis index
/// of (i, i') is i * dim D' + i'.
SuperDialgebra tensor_dialgebras(const SuperDialgebra& d, const SuperDialgebra& e);

/// x⊣y = x·dy, x⊢y = (dx)·y on an associative superalgebra A (given with
/// coinciding products). `d` must be even, square-zero and a derivation.
SuperDialgebra differential_dialgebra(const SuperDialgebra& a, const LinearMap& d);

/// ad z = [z, -]
LinearMap ad(const LeibnizSuperalgebra& l, const SparseVector& z);

/// Leibniz structure on g⊗g for a Lie superalgebra g:
/// [x⊗y, a⊗b] = [[x,y],a]⊗b + (-1)^{(|x|+|y|)|a|} a⊗[[x,y],b].
LeibnizSuperalgebra leibniz_from_lie_square(const LeibnizSuperalgebra& g);

/// g⊗D with [x⊗a, y⊗b] = (-1)^{|a||y|} [x,y]⊗(a⊢b). Basis index of (x, a)
/// is x * dim D + a.
LeibnizSuperalgebra lie_tensor_dialgebra(const LeibnizSuperalgebra& g, const SuperDialgebra& d);

/// Smallest subspace containing `generators` and stable under left and
/// right multiplication by every basis element, for every product.
Subspace ideal_closure(const LeibnizSuperalgebra& l, const std::vector<SparseVector>& generators);
Subspace ideal_closure(const SuperDialgebra& d, const std::vector<SparseVector>& generators);

/// Quotient by a graded two-sided ideal, realised on the non-pivot basis
/// vectors of the ideal's RREF. Throws `not_an_ideal` or `inhomogeneous_ideal`.
LeibnizSuperalgebra quotient_algebra(const LeibnizSuperalgebra& l, const Subspace& ideal);
SuperDialgebra quotient_algebra(const SuperDialgebra& d, const Subspace& ideal);

/// Quotient by the ideal generated by [x,y] + (-1)^{|x||y|}[y,x].
LeibnizSuperalgebra lie_quotient(const LeibnizSuperalgebra& l);
/// Quotient by the ideal generated by x⊣y - x⊢y.
SuperDialgebra associative_quotient(const SuperDialgebra& d);

/// {z : [z, L] = 0 and [L, z] = 0}
Subspace centre(const LeibnizSuperalgebra& l);

}  // namespace superleib
