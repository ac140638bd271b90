#pragma once

#include "superleib/bilinear.hpp"
#include "superleib/report.hpp"

namespace superleib {

/// Every nonzero coefficient of e_i * e_j must sit on parity |e_i| + |e_j|.
ViolationReport check_graded(const std::vector<Parity>& left, const std::vector<Parity>& right,
                             const std::vector<Parity>& out, const BilinearProduct& product,
                             const CheckOptions& opts = {});
ViolationReport check_graded(const SuperSpace& space, const BilinearProduct& product, const CheckOptions& opts = {});
ViolationReport check_graded(const LeibnizSuperalgebra& l, const CheckOptions& opts = {});
/// Both products; violation tuples are (product, i, j) with 0 = ⊣, 1 = ⊢.
ViolationReport check_graded(const SuperDialgebra& d, const CheckOptions& opts = {});

/// The five associativity axioms of a dialgebra. Tuples are (axiom, a, b, c)
/// with axiom numbered 1..5:
///   1  a⊣(b⊣c) = (a⊣b)⊣c      2  (a⊣b)⊣c = a⊣(b⊢c)
///   3  (a⊢b)⊣c = a⊢(b⊣c)      4  (a⊢b)⊢c = a⊢(b⊢c)
///   5  a⊢(b⊢c) = (a⊣b)⊢c
ViolationReport check_ass(const SuperDialgebra& d, const CheckOptions& opts = {});

/// 1 ⊢ a = a and a ⊣ 1 = a. Tuples are (a, side) with side 0 for ⊢.
/// Throws `missing_bar_unit` when the dialgebra has none.
ViolationReport check_bar_unit(const SuperDialgebra& d, const CheckOptions& opts = {});

/// [[a,b],c] = [a,[b,c]] - (-1)^{|a||b|} [b,[a,c]]
ViolationReport check_leibniz(const LeibnizSuperalgebra& l, const CheckOptions& opts = {});

/// Right Leibniz identity [a,[b,c]] = [[a,b],c] - (-1)^{|b||c|} [[a,c],b].
ViolationReport check_right_leibniz(const LeibnizSuperalgebra& l, const CheckOptions& opts = {});

/// Graded antisymmetry [a,b] + (-1)^{|a||b|}[b,a] = 0.
ViolationReport is_lie(const LeibnizSuperalgebra& l, const CheckOptions& opts = {});

/// mu([a,b]) = [mu a, b] + (-1)^{s|a|}[a, mu b]. Tuples (0, i) flag basis
/// vectors mapped off parity |e_i| + s; tuples (1, a, b) flag the law.
ViolationReport check_superderivation(const LeibnizSuperalgebra& l, const LinearMap& mu, Parity s,
                                      const CheckOptions& opts = {});

}  // namespace superleib
