#include "superleib/weights.hpp"

#include "superleib/constructions.hpp"

namespace superleib {

bool is_zero_weight(const WeightVector& w) {
  for (const auto& x : w)
    if (sgn(x) != 0) return false;
  return true;
}

WeightVector negate(const WeightVector& w) {
  WeightVector out;
  for (const auto& x : w) out.push_back(-x);
  return out;
}

std::string format_weight(const WeightVector& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + to_string(w[i]);
  return s + ")";
}

std::size_t WeightDecomposition::nonzero_count() const {
  std::size_t c = 0;
  for (const auto& [w, s] : weights)
    if (!is_zero_weight(w)) ++c;
  return c;
}

Subspace WeightDecomposition::zero_space() const {
  auto it = weights.find(WeightVector(arity, Scalar(0)));
  return it == weights.end() ? Subspace(ambient_dim) : it->second;
}

WeightDecomposition weight_decomposition(const LeibnizSuperalgebra& l, const std::vector<SparseVector>& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (!l(h[i], h[j]).is_zero())
        throw Error("non_commuting_cartan", "Cartan elements " + std::to_string(i) + " and " + std::to_string(j) +
                                                " do not commute");
  WeightDecomposition out;
  out.ambient_dim = l.dim();
  out.arity = h.size();
  // Refine the partition one Cartan element at a time.
  std::map<WeightVector, Subspace> pieces{{WeightVector{}, Subspace::full(l.dim())}};
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    LinearMap adh = ad(l, h[idx]);
    std::vector<RationalRoot> roots = rational_roots(char_poly(adh));
    std::map<WeightVector, Subspace> next;
    for (const auto& [w, piece] : pieces)
      for (const auto& root : roots) {
        Subspace s = intersect(piece, kernel(adh.shifted(root.value)));
        if (s.is_zero()) continue;
        WeightVector w2 = w;
        w2.push_back(root.value);
        next.emplace(std::move(w2), std::move(s));
      }
    pieces = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& [w, s] : pieces) total += s.dim();
  out.weights = std::move(pieces);
  out.complete = total == l.dim();
  if (!out.complete)
    out.diagnostic = "weight spaces span " + std::to_string(total) + " of " + std::to_string(l.dim()) + " dimensions";
  return out;
}

bool GradingCertificate::failed(int condition) const {
  for (const auto& f : failures)
    if (f.condition == condition) return true;
  return false;
}

GradingCertificate check_delta_graded(const LeibnizSuperalgebra& l, const Subspace& g_embed,
                                      const std::vector<SparseVector>& h, const CheckOptions& opts) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!g_embed.contains(h[i]))
      throw Error("cartan_not_in_subalgebra", "Cartan element " + std::to_string(i) + " is not in the subalgebra");
  GradingCertificate cert;

  // Condition 1: g is a Lie subalgebra.
  try {
    Restriction g = restrict(l, g_embed, "g");
    ViolationReport lz = check_leibniz(g.algebra, opts);
    ViolationReport lie = is_lie(g.algebra, opts);
    if (!lz.passed)
      cert.failures.push_back({1, "subalgebra fails the Leibniz identity", {std::to_string(lz.violation_count) + " triples"}});
    if (!lie.passed)
      cert.failures.push_back({1, "subalgebra is not antisymmetric", {std::to_string(lie.violation_count) + " pairs"}});
  } catch (const Error& e) {
    cert.failures.push_back({1, "subalgebra rejected: " + std::string(e.kind()), {e.what()}});
  }

  // Condition 2: complete decomposition with roots of g.
  cert.decomposition = weight_decomposition(l, h);
  const WeightDecomposition& dec = cert.decomposition;
  cert.root_count = dec.nonzero_count();
  cert.zero_space_dim = dec.zero_space().dim();
  if (!dec.complete) cert.failures.push_back({2, "weight decomposition is incomplete", {dec.diagnostic}});
  for (const auto& [w, s] : dec.weights) {
    if (is_zero_weight(w)) continue;
    if (intersect(s, g_embed).is_zero())
      cert.failures.push_back({2, "weight is not a root of the subalgebra", {format_weight(w)}});
  }

  // Condition 3: L_0 = Σ [L_α, L_{-α}].
  Subspace generated(l.dim());
  for (const auto& [w, s] : dec.weights) {
    if (is_zero_weight(w)) continue;
    auto opp = dec.weights.find(negate(w));
    if (opp == dec.weights.end()) continue;
    for (const auto& x : s.basis())
      for (const auto& y : opp->second.basis()) generated.insert(l(x, y));
  }
  Subspace l0 = dec.zero_space();
  if (!(generated == l0)) {
    ConditionFailure f{3, "zero weight space differs from the sum of opposite root brackets", {}};
    for (const auto& v : l0.basis())
      if (!generated.contains(v)) f.witnesses.push_back(format_vector(v, l.space.labels));
    for (const auto& v : generated.basis())
      if (!l0.contains(v)) f.witnesses.push_back("outside L_0: " + format_vector(v, l.space.labels));
    cert.failures.push_back(std::move(f));
  }
  cert.is_graded = cert.failures.empty();
  return cert;
}

}  // namespace superleib
