#pragma once

#include "superleib/bilinear.hpp"
#include "superleib/checks.hpp"
#include "superleib/matrix_graded.hpp"

#include <utility>

namespace superleib {

/// sl(p, q, K) realised inside gl(p, q, K), with the matrix operations the
/// coordinate models need. Basis = RREF basis of the supertrace-free
/// matrices. Throws `equal_block_sizes` for p = q.
class SpecialLinear {
public:
  SpecialLinear(std::size_t p, std::size_t q);

  std::size_t p() const noexcept { return gl_.m; }
  std::size_t q() const noexcept { return gl_.n; }
  std::size_t dim() const noexcept { return sl_.basis.size(); }
  const MatrixAlgebra& gl() const noexcept { return gl_; }
  const Restriction& sl() const noexcept { return sl_; }
  const LeibnizSuperalgebra& algebra() const noexcept { return sl_.algebra; }
  Parity parity(std::size_t i) const { return sl_.algebra.space.parity(i); }
  /// Basis element i as a gl(p, q, K) vector.
  const SparseVector& matrix(std::size_t i) const { return sl_.basis.at(i); }

  /// Matrix product in gl(p, q, K) coordinates.
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  Scalar str(const SparseVector& x) const { return supertrace(gl_, x); }
  /// Cartan basis from cartan_of_sl, in sl coordinates.
  std::vector<SparseVector> cartan() const;

private:
  MatrixAlgebra gl_;
  Restriction sl_;
  SuperDialgebra matrices_;
};

/// x∗y = xy + (-1)^{|x||y|} yx - (2/(p-q)) str(xy) I for homogeneous x, y
/// given in gl(p, q, K) coordinates. Throws `inhomogeneous_element`.
SparseVector star_product(const SpecialLinear& g, const SparseVector& x, const SparseVector& y);

/// a∘b = a⊢b + (-1)^{|a||b|} b⊣a and [a,b] = a⊢b - (-1)^{|a||b|} b⊣a.
struct CircAndBracket {
  BilinearProduct circ;
  BilinearProduct bracket;
};
CircAndBracket circ_and_bracket(const SuperDialgebra& a);

/// The zero Leibniz superalgebra (empty basis), used for D = 0.
LeibnizSuperalgebra zero_leibniz();

/// Data of a model (sl(p,q,K) ⊗ A) ⊕ D:
///   phi  : D × A -> A   (d·a)
///   form : A × A -> D   (⟨a, b⟩)
///   rho  : A × D -> A   ([f⊗a, d] = f⊗rho(a, d))
struct CoordinateDataA {
  std::size_t p = 2;
  std::size_t q = 1;
  SuperDialgebra A;
  LeibnizSuperalgebra D;
  BilinearProduct phi;
  BilinearProduct form;
  BilinearProduct rho;
};

/// Zero phi/form/rho of the right shapes.
CoordinateDataA make_coordinate_data(std::size_t p, std::size_t q, SuperDialgebra a, LeibnizSuperalgebra d);

/// Throws `invalid_block_sizes` unless p > q >= 1, `missing_bar_unit`,
/// `dimension_mismatch`, `inhomogeneous_map` when phi/form/rho do not
/// respect parity, and `unit_not_annihilated` when d·1 != 0.
void validate(const CoordinateDataA& data);

/// [f⊗a, g⊗b] = (-1)^{|a||g|}([f,g]⊗½a∘b + f∗g⊗½[a,b] + str(fg)⟨a,b⟩),
/// [d, f⊗a] = (-1)^{|d||f|} f⊗(d·a), [f⊗a, d] = f⊗rho(a,d) and the bracket
/// of D. Basis: g_i⊗a_k at i * dim A + k, then D.
LeibnizSuperalgebra build_A_graded_model(const CoordinateDataA& data);

/// Named sub-reports; passed iff all pass.
struct ConditionReport {
  std::vector<std::pair<std::string, ViolationReport>> conditions;
  bool passed = true;

  void add(std::string name, ViolationReport report);
  const ViolationReport& at(const std::string& name) const;
};

/// Conditions (1)-(4) for the model to be a Leibniz superalgebra. Sub-report
/// names: associativity, representation, invariance, id_4_7, id_4_8,
/// id_4_14, id_4_15. Multi-part reports prefix each index tuple with the
/// part number.
ConditionReport check_thm41_conditions(const CoordinateDataA& data, const CheckOptions& opts = {});

struct CanonicalModel {
  LeibnizSuperalgebra model;
  CoordinateDataA data;
};

/// (g⊗A) ⊕ ad[A,A] with D spanned by the operators c -> [[a,b],c] (chosen
/// greedily over basis pairs, in order), ⟨a,b⟩ = (1/(p-q)) ad[a,b] and
/// rho(a, ad z) = [a, z]. Throws `not_associative` or `missing_bar_unit`.
CanonicalModel build_canonical_LA(const SuperDialgebra& a, std::size_t p, std::size_t q);

/// Data of a model (g⊗A) ⊕ D over a Lie superalgebra g with an invariant
/// form κ : g × g -> K (out dimension 1).
struct CoordinateDataK {
  LeibnizSuperalgebra g;
  BilinearProduct kappa;
  SuperDialgebra A;
  LeibnizSuperalgebra D;
  BilinearProduct phi;
  BilinearProduct form;
  /// [d, L] = [L, d] = 0 when set.
  bool central = false;
};

/// κ(x, y) = str(xy) on sl(p, q, K).
BilinearProduct supertrace_form(const SpecialLinear& g);

CoordinateDataK make_kappa_data(LeibnizSuperalgebra g, BilinearProduct kappa, SuperDialgebra a, LeibnizSuperalgebra d,
                                bool central);

/// Throws `g_not_lie`, `kappa_not_even`, `kappa_not_supersymmetric`,
/// `kappa_degenerate`, `kappa_not_invariant`, `dimension_mismatch` or
/// `inhomogeneous_map`.
void validate(const CoordinateDataK& data);

/// [f⊗a, g⊗b] = (-1)^{|a||g|}([f,g]⊗(a⊢b) + κ(f,g)⟨a,b⟩),
/// [d, f⊗a] = (-1)^{|d||f|} f⊗(d·a), [f⊗a, d] = 0 and the bracket of D;
/// in the central variant every bracket involving D vanishes.
LeibnizSuperalgebra build_kappa_model(const CoordinateDataK& data);

/// Sub-reports: a (associative, supercommutative, unital), i (D Leibniz,
/// representation by superderivations, ⟨A,A⟩ ⊂ ker phi), ii (invariance),
/// iii (the two form identities).
ConditionReport check_lemma51_conditions(const CoordinateDataK& data, const CheckOptions& opts = {});

/// Recovers (A, D, phi, form, rho) from an sl(p,q)-graded L. `g_embed` is
/// the grading subalgebra and `h` its Cartan basis, in the order of
/// cartan_of_sl. The result rebuilds to L under the identification used
/// (checked; throws `decomposition_mismatch` otherwise).
CoordinateDataA extract_coordinates(const LeibnizSuperalgebra& l, const Subspace& g_embed,
                                    const std::vector<SparseVector>& h);

}  // namespace superleib
