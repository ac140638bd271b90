#pragma once

#include "superleib/bilinear.hpp"
#include "superleib/matrix_graded.hpp"

#include <map>

namespace superleib {

/// Eigenvalues of a weight on the chosen Cartan basis.
using WeightVector = std::vector<Scalar>;

bool is_zero_weight(const WeightVector& w);
WeightVector negate(const WeightVector& w);
std::string format_weight(const WeightVector& w);

struct WeightDecomposition {
  std::map<WeightVector, Subspace> weights;
  std::size_t ambient_dim = 0;
  std::size_t arity = 0;
  /// True when the weight spaces span the whole algebra.
  bool complete = false;
  std::string diagnostic;

  std::size_t nonzero_count() const;
  /// The zero weight space (possibly zero-dimensional).
  Subspace zero_space() const;
};

/// L_α = ∩_h ker(ad h - α(h)) over all rational eigenvalue combinations.
/// Throws `non_commuting_cartan` when some [h_i, h_j] != 0.
WeightDecomposition weight_decomposition(const LeibnizSuperalgebra& l, const std::vector<SparseVector>& h);

struct ConditionFailure {
  int condition = 0;
  std::string message;
  std::vector<std::string> witnesses;
};

struct GradingCertificate {
  bool is_graded = false;
  std::vector<ConditionFailure> failures;
  std::size_t root_count = 0;
  std::size_t zero_space_dim = 0;
  WeightDecomposition decomposition;

  bool failed(int condition) const;
};

/// Conditions of a root-system grading for the subalgebra g (given by its
/// span inside L) with split Cartan basis h:
///   1  g is closed and is a Lie superalgebra
///   2  the decomposition of L is complete and its nonzero weights are
///      weights of g
///   3  L_0 = Σ_{α≠0} [L_α, L_{-α}]
/// Throws `cartan_not_in_subalgebra` when some h is outside g.
GradingCertificate check_delta_graded(const LeibnizSuperalgebra& l, const Subspace& g_embed,
                                      const std::vector<SparseVector>& h, const CheckOptions& opts = {});

}  // namespace superleib
