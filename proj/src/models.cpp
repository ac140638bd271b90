#include "superleib/models.hpp"

#include "superleib/catalog.hpp"
#include "superleib/constructions.hpp"
#include "tuple_loop.hpp"

namespace superleib {

using detail::run_tuples;
using detail::Sink;

namespace {

const Scalar kHalf(1, 2);

// Prefixes every violation tuple with `tag` so that several identities can
// share one report.
ViolationReport tagged(ViolationReport r, std::size_t tag) {
  for (auto& v : r.violations) v.indices.insert(v.indices.begin(), tag);
  return r;
}

ViolationReport combine(std::string name, std::vector<ViolationReport> parts, const CheckOptions& opts) {
  ViolationReport out;
  out.identity_name = std::move(name);
  for (std::size_t t = 0; t < parts.size(); ++t) out.absorb(tagged(std::move(parts[t]), t), opts.max_violations);
  return out;
}

Parity parity_of_vector(const SuperSpace& s, const SparseVector& v) {
  auto p = s.parity_of(v);
  if (!p) throw Error("inhomogeneous_element", "element of '" + s.name + "' is not homogeneous");
  return *p;
}

std::string tensor_label(const std::string& f, const std::string& a) {
  bool plain = f.find(' ') == std::string::npos;
  return (plain ? f : "[" + f + "]") + "." + a;
}

// Parity lists and a combined space for (g ⊗ A) ⊕ D.
SuperSpace model_space(const std::string& name, const SuperSpace& g, const SuperSpace& a, const LeibnizSuperalgebra& d) {
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      parities.push_back(g.parity(i) + a.parity(k));
      labels.push_back(tensor_label(g.labels[i], a.labels[k]));
    }
  for (std::size_t k = 0; k < d.dim(); ++k) {
    parities.push_back(d.space.parity(k));
    labels.push_back(d.space.labels[k]);
  }
  return SuperSpace(name, std::move(parities), std::move(labels));
}

void require_graded(const std::vector<Parity>& l, const std::vector<Parity>& r, const std::vector<Parity>& o,
                    const BilinearProduct& p, const std::string& what) {
  CheckOptions opts;
  opts.max_violations = 1;
  opts.parallel = 1;
  if (!check_graded(l, r, o, p, opts).passed) throw Error("inhomogeneous_map", what + " does not respect parity");
}

}  // namespace

// ---------------------------------------------------------------- sl(p,q)

SpecialLinear::SpecialLinear(std::size_t p, std::size_t q) {
  if (p == q) throw Error("equal_block_sizes", "sl(p, p) has a centre; the A(n, n) case is not supported");
  gl_ = build_gl(p, q, catalog::field());
  sl_ = build_sl(gl_);
  matrices_ = catalog::matrix_superalgebra(p, q);
}

SparseVector SpecialLinear::multiply(const SparseVector& x, const SparseVector& y) const {
  return matrices_.left.apply(x, y);
}

std::vector<SparseVector> SpecialLinear::cartan() const {
  std::vector<SparseVector> h;
  for (const auto& v : cartan_of_sl(p(), q())) h.push_back(sl_.coordinates(v));
  return h;
}

SparseVector star_product(const SpecialLinear& g, const SparseVector& x, const SparseVector& y) {
  const SuperSpace& space = g.gl().algebra.space;
  Parity px = parity_of_vector(space, x), py = parity_of_vector(space, y);
  SparseVector xy = g.multiply(x, y);
  SparseVector out = xy;
  out.add_scaled(g.multiply(y, x), Scalar(koszul(px, py)));
  Scalar c = Scalar(2) * g.str(xy) / Scalar(static_cast<long>(g.p()) - static_cast<long>(g.q()));
  if (sgn(c) != 0)
    for (std::size_t i = 1; i <= g.p() + g.q(); ++i) out.add(g.gl().index(i, i, 0), -c);
  return out;
}

// ---------------------------------------------------------------- A side

CircAndBracket circ_and_bracket(const SuperDialgebra& a) {
  const std::size_t n = a.dim();
  CircAndBracket out{BilinearProduct(n), BilinearProduct(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s(koszul(a.space.parity(i), a.space.parity(j)));
      SparseVector c = a.right.get(i, j);
      SparseVector b = a.right.get(i, j);
      c.add_scaled(a.left.get(j, i), s);
      b.add_scaled(a.left.get(j, i), -s);
      out.circ.set(i, j, std::move(c));
      out.bracket.set(i, j, std::move(b));
    }
  return out;
}

LeibnizSuperalgebra zero_leibniz() {
  LeibnizSuperalgebra z;
  z.space.name = "0";
  z.bracket = BilinearProduct(0);
  return z;
}

CoordinateDataA make_coordinate_data(std::size_t p, std::size_t q, SuperDialgebra a, LeibnizSuperalgebra d) {
  CoordinateDataA data;
  data.p = p;
  data.q = q;
  const std::size_t na = a.dim(), nd = d.dim();
  data.A = std::move(a);
  data.D = std::move(d);
  data.phi = BilinearProduct(nd, na, na);
  data.form = BilinearProduct(na, na, nd);
  data.rho = BilinearProduct(na, nd, na);
  return data;
}

void validate(const CoordinateDataA& data) {
  if (!(data.p > data.q && data.q >= 1))
    throw Error("invalid_block_sizes", "coordinate data needs p > q >= 1");
  if (!data.A.bar_unit) throw Error("missing_bar_unit", "coordinate algebra '" + data.A.name() + "' has no bar-unit");
  const std::size_t na = data.A.dim(), nd = data.D.dim();
  auto shape = [](const BilinearProduct& b, std::size_t l, std::size_t r, std::size_t o) {
    return b.left_dim() == l && b.right_dim() == r && b.out_dim() == o;
  };
  if (!shape(data.phi, nd, na, na) || !shape(data.form, na, na, nd) || !shape(data.rho, na, nd, na))
    throw Error("dimension_mismatch", "phi/form/rho shapes do not match A and D");
  const auto& pa = data.A.space.parities;
  const auto& pd = data.D.space.parities;
  require_graded(pd, pa, pa, data.phi, "phi");
  require_graded(pa, pa, pd, data.form, "form");
  require_graded(pa, pd, pa, data.rho, "rho");
  for (std::size_t k = 0; k < nd; ++k)
    if (!data.phi.apply(SparseVector::unit(nd, k), *data.A.bar_unit).is_zero())
      throw Error("unit_not_annihilated", "phi(" + data.D.space.labels[k] + ") does not kill the unit");
}

// ---------------------------------------------------------------- sl(p,q)⊗A model

LeibnizSuperalgebra build_A_graded_model(const CoordinateDataA& data) {
  validate(data);
  SpecialLinear g(data.p, data.q);
  const std::size_t ng = g.dim(), na = data.A.dim(), nd = data.D.dim();
  const std::size_t dim = ng * na + nd;
  const Restriction& sl = g.sl();
  CircAndBracket cb = circ_and_bracket(data.A);

  // Pairwise data on g.
  std::vector<SparseVector> br(ng * ng), st(ng * ng);
  std::vector<Scalar> tr(ng * ng);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      br[i * ng + j] = g.algebra().bracket.get(i, j);
      st[i * ng + j] = sl.coordinates(star_product(g, g.matrix(i), g.matrix(j)));
      tr[i * ng + j] = g.str(g.multiply(g.matrix(i), g.matrix(j)));
    }
  auto idx = [na](std::size_t i, std::size_t k) { return i * na + k; };
  const std::size_t off = ng * na;

  BilinearProduct bracket(dim);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t b = 0; b < na; ++b) {
          Scalar s(koszul(data.A.space.parity(a), g.parity(j)));
          SparseVector v(dim);
          const SparseVector& circ = cb.circ.get(a, b);
          const SparseVector& lie = cb.bracket.get(a, b);
          for (const auto& [f, x] : br[i * ng + j])
            for (const auto& [c, y] : circ) v.add(idx(f, c), s * kHalf * x * y);
          for (const auto& [f, x] : st[i * ng + j])
            for (const auto& [c, y] : lie) v.add(idx(f, c), s * kHalf * x * y);
          const Scalar& t = tr[i * ng + j];
          if (sgn(t) != 0)
            for (const auto& [k, y] : data.form.get(a, b)) v.add(off + k, s * t * y);
          if (!v.is_zero()) bracket.set(idx(i, a), idx(j, b), std::move(v));
        }
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t j = 0; j < ng; ++j)
      for (std::size_t a = 0; a < na; ++a) {
        Scalar s(koszul(data.D.space.parity(d), g.parity(j)));
        SparseVector left(dim), right(dim);
        for (const auto& [c, y] : data.phi.get(d, a)) left.add(idx(j, c), s * y);
        for (const auto& [c, y] : data.rho.get(a, d)) right.add(idx(j, c), y);
        bracket.set(off + d, idx(j, a), std::move(left));
        bracket.set(idx(j, a), off + d, std::move(right));
      }
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t e = 0; e < nd; ++e) {
      SparseVector v(dim);
      for (const auto& [k, y] : data.D.bracket.get(d, e)) v.set(off + k, y);
      bracket.set(off + d, off + e, std::move(v));
    }
  std::string name = "L(" + std::to_string(data.p) + "," + std::to_string(data.q) + "," + data.A.name() + ")";
  return LeibnizSuperalgebra(model_space(name, g.algebra().space, data.A.space, data.D), std::move(bracket));
}

void ConditionReport::add(std::string name, ViolationReport report) {
  report.identity_name = name;
  passed = passed && report.passed;
  conditions.emplace_back(std::move(name), std::move(report));
}

const ViolationReport& ConditionReport::at(const std::string& name) const {
  for (const auto& [n, r] : conditions)
    if (n == name) return r;
  throw Error("unknown_condition", "no condition named '" + name + "'");
}

namespace {

// Identities shared by both condition checkers.

// φ([d,d'])a = φ(d)φ(d')a - (-1)^{|d||d'|} φ(d')φ(d)a, tuples (d, d', a).
ViolationReport representation_law(const LeibnizSuperalgebra& D, const BilinearProduct& phi, std::size_t na,
                                   const CheckOptions& opts) {
  const std::size_t nd = D.dim();
  return run_tuples("representation_law", nd, opts, [&](std::size_t d, Sink& sink) {
    for (std::size_t e = 0; e < nd; ++e) {
      Scalar s(koszul(D.space.parity(d), D.space.parity(e)));
      const SparseVector& de = D.bracket.get(d, e);
      for (std::size_t a = 0; a < na; ++a) {
        sink.checked();
        SparseVector lhs = phi.right_apply(de, a);
        SparseVector rhs = phi.left_apply(d, phi.get(e, a));
        rhs.add_scaled(phi.left_apply(e, phi.get(d, a)), -s);
        if (lhs != rhs) sink.violation({{d, e, a}, lhs, rhs});
      }
    }
  });
}

// φ(d)(a⋆b) = (φ(d)a)⋆b + (-1)^{|d||a|} a⋆(φ(d)b), tuples (d, a, b).
ViolationReport derivation_law(const std::string& name, const SuperSpace& dspace, const SuperSpace& aspace,
                               const BilinearProduct& phi, const BilinearProduct& star, const CheckOptions& opts) {
  const std::size_t nd = dspace.dim(), na = aspace.dim();
  return run_tuples(name, nd, opts, [&](std::size_t d, Sink& sink) {
    for (std::size_t a = 0; a < na; ++a) {
      Scalar s(koszul(dspace.parity(d), aspace.parity(a)));
      for (std::size_t b = 0; b < na; ++b) {
        sink.checked();
        SparseVector lhs = phi.left_apply(d, star.get(a, b));
        SparseVector rhs = star.right_apply(phi.get(d, a), b);
        rhs.add_scaled(star.left_apply(a, phi.get(d, b)), s);
        if (lhs != rhs) sink.violation({{d, a, b}, lhs, rhs});
      }
    }
  });
}

// [d, ⟨a,b⟩] = ⟨da, b⟩ + (-1)^{|d||a|}⟨a, db⟩, tuples (d, a, b).
ViolationReport invariance_law(const LeibnizSuperalgebra& D, const SuperSpace& aspace, const BilinearProduct& phi,
                               const BilinearProduct& form, const CheckOptions& opts) {
  const std::size_t nd = D.dim(), na = aspace.dim();
  return run_tuples("invariance", nd, opts, [&](std::size_t d, Sink& sink) {
    for (std::size_t a = 0; a < na; ++a) {
      Scalar s(koszul(D.space.parity(d), aspace.parity(a)));
      for (std::size_t b = 0; b < na; ++b) {
        sink.checked();
        SparseVector lhs = D.bracket.left_apply(d, form.get(a, b));
        SparseVector rhs = form.right_apply(phi.get(d, a), b);
        rhs.add_scaled(form.left_apply(a, phi.get(d, b)), s);
        if (lhs != rhs) sink.violation({{d, a, b}, lhs, rhs});
      }
    }
  });
}

// ⟨a⊢b, c⟩ = ⟨a, b⊢c⟩ + (-1)^{|a|(|b|+|c|)}⟨b, c⊣a⟩, tuples (a, b, c).
ViolationReport form_identity_47(const SuperDialgebra& A, const BilinearProduct& form, const CheckOptions& opts) {
  const std::size_t n = A.dim();
  const auto& p = A.space.parities;
  return run_tuples("id_4_7", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        sink.checked();
        SparseVector lhs = form.right_apply(A.right.get(a, b), c);
        SparseVector rhs = form.left_apply(a, A.right.get(b, c));
        rhs.add_scaled(form.left_apply(b, A.left.get(c, a)), Scalar(koszul(p[a], p[b] + p[c])));
        if (lhs != rhs) sink.violation({{a, b, c}, lhs, rhs});
      }
  });
}

// ⟨a⊢b, c⟩ = ⟨a⊣b, c⟩, tuples (a, b, c).
ViolationReport form_identity_48(const SuperDialgebra& A, const BilinearProduct& form, const CheckOptions& opts) {
  const std::size_t n = A.dim();
  return run_tuples("id_4_8", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        sink.checked();
        SparseVector lhs = form.right_apply(A.right.get(a, b), c);
        SparseVector rhs = form.right_apply(A.left.get(a, b), c);
        if (lhs != rhs) sink.violation({{a, b, c}, lhs, rhs});
      }
  });
}

}  // namespace

ConditionReport check_thm41_conditions(const CoordinateDataA& data, const CheckOptions& opts) {
  validate(data);
  const SuperDialgebra& A = data.A;
  const LeibnizSuperalgebra& D = data.D;
  const std::size_t na = A.dim();
  const Scalar inv(1, static_cast<long>(data.p - data.q));
  CircAndBracket cb = circ_and_bracket(A);
  ConditionReport rep;

  rep.add("associativity", check_ass(A, opts));
  rep.add("representation", combine("representation",
                                    {check_leibniz(D, opts), representation_law(D, data.phi, na, opts),
                                     derivation_law("derivation_circ", D.space, A.space, data.phi, cb.circ, opts),
                                     derivation_law("derivation_bracket", D.space, A.space, data.phi, cb.bracket, opts)},
                                    opts));
  rep.add("invariance", invariance_law(D, A.space, data.phi, data.form, opts));
  rep.add("id_4_7", form_identity_47(A, data.form, opts));
  rep.add("id_4_8", form_identity_48(A, data.form, opts));

  // φ(⟨a,b⟩)c = (1/(p-q)) [[a,b],c]
  rep.add("id_4_14", run_tuples("id_4_14", na, opts, [&](std::size_t a, Sink& sink) {
            for (std::size_t b = 0; b < na; ++b)
              for (std::size_t c = 0; c < na; ++c) {
                sink.checked();
                SparseVector lhs = data.phi.right_apply(data.form.get(a, b), c);
                SparseVector rhs = cb.bracket.right_apply(cb.bracket.get(a, b), c);
                rhs *= inv;
                if (lhs != rhs) sink.violation({{a, b, c}, lhs, rhs});
              }
          }));
  // rho(a, ⟨b,c⟩) = (1/(p-q)) [a,[b,c]]
  rep.add("id_4_15", run_tuples("id_4_15", na, opts, [&](std::size_t a, Sink& sink) {
            for (std::size_t b = 0; b < na; ++b)
              for (std::size_t c = 0; c < na; ++c) {
                sink.checked();
                SparseVector lhs = data.rho.left_apply(a, data.form.get(b, c));
                SparseVector rhs = cb.bracket.left_apply(a, cb.bracket.get(b, c));
                rhs *= inv;
                if (lhs != rhs) sink.violation({{a, b, c}, lhs, rhs});
              }
          }));
  return rep;
}

// ---------------------------------------------------------------- 𝔏(A)

CanonicalModel build_canonical_LA(const SuperDialgebra& a, std::size_t p, std::size_t q) {
  if (!a.bar_unit) throw Error("missing_bar_unit", "canonical model needs a unital dialgebra");
  CheckOptions quick;
  quick.max_violations = 1;
  if (!check_ass(a, quick).passed) throw Error("not_associative", "'" + a.name() + "' fails the dialgebra axioms");
  if (!(p > q && q >= 1)) throw Error("invalid_block_sizes", "canonical model needs p > q >= 1");
  const std::size_t n = a.dim();
  CircAndBracket cb = circ_and_bracket(a);

  // Operators c -> [z, c] flattened column-major into K^{n*n}.
  auto ad_of = [&](const SparseVector& z) {
    SparseVector op(n * n);
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& [r, x] : cb.bracket.right_apply(z, c)) op.set(c * n + r, x);
    return op;
  };
  auto unflatten = [n](const SparseVector& op, std::size_t c) {
    SparseVector col(n);
    for (const auto& [k, x] : op)
      if (k / n == c) col.set(k % n, x);
    return col;
  };
  Frame frame(n * n);
  std::vector<SparseVector> zs;  // z_k = [a_i, a_j] for the chosen pairs
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& z = cb.bracket.get(i, j);
      if (frame.add(ad_of(z))) {
        zs.push_back(z);
        parities.push_back(a.space.parity(i) + a.space.parity(j));
        labels.push_back("ad[" + a.space.labels[i] + "," + a.space.labels[j] + "]");
      }
    }
  const std::size_t nd = zs.size();

  LeibnizSuperalgebra D = zero_leibniz();
  if (nd > 0) {
    // Operator supercommutator on the span.
    BilinearProduct br(nd);
    const auto& ops = frame.vectors();
    auto compose_ops = [&](const SparseVector& x, const SparseVector& y) {
      SparseVector out(n * n);
      for (std::size_t c = 0; c < n; ++c) {
        SparseVector yc = unflatten(y, c);
        SparseVector xyc(n);
        for (const auto& [k, v] : yc) xyc.add_scaled(unflatten(x, k), v);
        for (const auto& [r, v] : xyc) out.set(c * n + r, v);
      }
      return out;
    };
    for (std::size_t k = 0; k < nd; ++k)
      for (std::size_t l = 0; l < nd; ++l) {
        SparseVector c = compose_ops(ops[k], ops[l]);
        c.add_scaled(compose_ops(ops[l], ops[k]), Scalar(-koszul(parities[k], parities[l])));
        br.set(k, l, frame.coordinates(c));
      }
    D = LeibnizSuperalgebra(SuperSpace("ad[" + a.name() + "]", parities, labels), std::move(br));
  }

  CoordinateDataA data = make_coordinate_data(p, q, a, D);
  const Scalar inv(1, static_cast<long>(p - q));
  for (std::size_t k = 0; k < nd; ++k)
    for (std::size_t c = 0; c < n; ++c) {
      data.phi.set(k, c, unflatten(frame.vectors()[k], c));
      data.rho.set(c, k, cb.bracket.left_apply(c, zs[k]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector coords = frame.coordinates(ad_of(cb.bracket.get(i, j)));
      coords *= inv;
      data.form.set(i, j, std::move(coords));
    }
  CanonicalModel out;
  out.model = build_A_graded_model(data);
  out.model.space.name = "LL(" + std::to_string(p) + "," + std::to_string(q) + "," + a.name() + ")";
  out.data = std::move(data);
  return out;
}

// ---------------------------------------------------------------- kappa model

BilinearProduct supertrace_form(const SpecialLinear& g) {
  const std::size_t n = g.dim();
  BilinearProduct k(n, n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar t = g.str(g.multiply(g.matrix(i), g.matrix(j)));
      if (sgn(t) != 0) k.add(i, j, 0, t);
    }
  return k;
}

CoordinateDataK make_kappa_data(LeibnizSuperalgebra g, BilinearProduct kappa, SuperDialgebra a, LeibnizSuperalgebra d,
                                bool central) {
  CoordinateDataK data;
  const std::size_t na = a.dim(), nd = d.dim();
  data.g = std::move(g);
  data.kappa = std::move(kappa);
  data.A = std::move(a);
  data.D = std::move(d);
  data.phi = BilinearProduct(nd, na, na);
  data.form = BilinearProduct(na, na, nd);
  data.central = central;
  return data;
}

void validate(const CoordinateDataK& data) {
  const LeibnizSuperalgebra& g = data.g;
  const std::size_t ng = g.dim(), na = data.A.dim(), nd = data.D.dim();
  if (data.kappa.left_dim() != ng || data.kappa.right_dim() != ng || data.kappa.out_dim() != 1)
    throw Error("dimension_mismatch", "kappa must be a form on g");
  if (data.phi.left_dim() != nd || data.phi.right_dim() != na || data.phi.out_dim() != na ||
      data.form.left_dim() != na || data.form.right_dim() != na || data.form.out_dim() != nd)
    throw Error("dimension_mismatch", "phi/form shapes do not match A and D");
  CheckOptions quick;
  quick.max_violations = 1;
  if (!is_lie(g, quick).passed || !check_leibniz(g, quick).passed)
    throw Error("g_not_lie", "'" + g.name() + "' is not a Lie superalgebra");
  auto k = [&](std::size_t i, std::size_t j) { return data.kappa.get(i, j).at(0); };
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t j = 0; j < ng; ++j) {
      if (sgn(k(i, j)) != 0 && g.space.parity(i) != g.space.parity(j))
        throw Error("kappa_not_even", "kappa pairs elements of different parity");
      if (k(i, j) != koszul(g.space.parity(i), g.space.parity(j)) * k(j, i))
        throw Error("kappa_not_supersymmetric", "kappa is not supersymmetric");
    }
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < ng; ++i) {
    SparseVector r(ng);
    for (std::size_t j = 0; j < ng; ++j) r.set(j, k(i, j));
    rows.push_back(std::move(r));
  }
  if (row_reduce(rows, ng).dim() != ng) throw Error("kappa_degenerate", "kappa is degenerate");
  // κ([x,y],z) = κ(x,[y,z])
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < ng; ++y)
      for (std::size_t z = 0; z < ng; ++z) {
        Scalar lhs = data.kappa.right_apply(g.bracket.get(x, y), z).at(0);
        Scalar rhs = data.kappa.left_apply(x, g.bracket.get(y, z)).at(0);
        if (lhs != rhs) throw Error("kappa_not_invariant", "kappa is not invariant");
      }
  const auto& pa = data.A.space.parities;
  const auto& pd = data.D.space.parities;
  require_graded(pd, pa, pa, data.phi, "phi");
  require_graded(pa, pa, pd, data.form, "form");
}

LeibnizSuperalgebra build_kappa_model(const CoordinateDataK& data) {
  validate(data);
  const LeibnizSuperalgebra& g = data.g;
  const std::size_t ng = g.dim(), na = data.A.dim(), nd = data.D.dim();
  const std::size_t dim = ng * na + nd, off = ng * na;
  auto idx = [na](std::size_t i, std::size_t k) { return i * na + k; };
  BilinearProduct bracket(dim);
  for (std::size_t i = 0; i < ng; ++i)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t b = 0; b < na; ++b) {
          Scalar s(koszul(data.A.space.parity(a), g.space.parity(j)));
          SparseVector v(dim);
          for (const auto& [f, x] : g.bracket.get(i, j))
            for (const auto& [c, y] : data.A.right.get(a, b)) v.add(idx(f, c), s * x * y);
          Scalar kij = data.kappa.get(i, j).at(0);
          if (sgn(kij) != 0)
            for (const auto& [d, y] : data.form.get(a, b)) v.add(off + d, s * kij * y);
          if (!v.is_zero()) bracket.set(idx(i, a), idx(j, b), std::move(v));
        }
  if (!data.central) {
    for (std::size_t d = 0; d < nd; ++d)
      for (std::size_t j = 0; j < ng; ++j)
        for (std::size_t a = 0; a < na; ++a) {
          Scalar s(koszul(data.D.space.parity(d), g.space.parity(j)));
          SparseVector v(dim);
          for (const auto& [c, y] : data.phi.get(d, a)) v.add(idx(j, c), s * y);
          bracket.set(off + d, idx(j, a), std::move(v));
        }
    for (std::size_t d = 0; d < nd; ++d)
      for (std::size_t e = 0; e < nd; ++e) {
        SparseVector v(dim);
        for (const auto& [k, y] : data.D.bracket.get(d, e)) v.set(off + k, y);
        bracket.set(off + d, off + e, std::move(v));
      }
  }
  std::string name = "K(" + g.name() + "," + data.A.name() + (data.central ? ",central)" : ")");
  return LeibnizSuperalgebra(model_space(name, g.space, data.A.space, data.D), std::move(bracket));
}

ConditionReport check_lemma51_conditions(const CoordinateDataK& data, const CheckOptions& opts) {
  validate(data);
  const SuperDialgebra& A = data.A;
  const LeibnizSuperalgebra& D = data.D;
  const std::size_t na = A.dim();
  ConditionReport rep;

  // (a) associative, supercommutative (a⊢b = (-1)^{|a||b|} b⊣a), unital.
  ViolationReport comm = run_tuples("supercommutative", na, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < na; ++b) {
      sink.checked();
      SparseVector lhs = A.right.get(a, b);
      SparseVector rhs = A.left.get(b, a);
      rhs *= Scalar(koszul(A.space.parity(a), A.space.parity(b)));
      if (lhs != rhs) sink.violation({{a, b}, lhs, rhs});
    }
  });
  ViolationReport unit;
  if (A.bar_unit) {
    unit = check_bar_unit(A, opts);
  } else {
    unit.identity_name = "bar_unit";
    unit.checked_count = 1;
    unit.violation_count = 1;
    unit.passed = false;
    unit.violations.push_back({{}, SparseVector(na), SparseVector(na)});
  }
  rep.add("a", combine("a", {check_ass(A, opts), comm, unit}, opts));

  // (i) D Leibniz, φ a representation by superderivations of ⊣ and ⊢,
  // φ(⟨a,b⟩) = 0.
  ViolationReport kills = run_tuples("form_in_kernel", na, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < na; ++b)
      for (std::size_t c = 0; c < na; ++c) {
        sink.checked();
        SparseVector lhs = data.phi.right_apply(data.form.get(a, b), c);
        if (!lhs.is_zero()) sink.violation({{a, b, c}, lhs, SparseVector(na)});
      }
  });
  rep.add("i", combine("i",
                       {check_leibniz(D, opts), representation_law(D, data.phi, na, opts),
                        derivation_law("derivation_right", D.space, A.space, data.phi, A.right, opts),
                        derivation_law("derivation_left", D.space, A.space, data.phi, A.left, opts), kills},
                       opts));
  rep.add("ii", invariance_law(D, A.space, data.phi, data.form, opts));
  rep.add("iii", combine("iii", {form_identity_47(A, data.form, opts), form_identity_48(A, data.form, opts)}, opts));
  return rep;
}

}  // namespace superleib
