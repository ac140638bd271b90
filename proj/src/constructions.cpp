#include "superleib/constructions.hpp"

namespace superleib {

namespace {

LeibnizSuperalgebra bracket_from(const SuperDialgebra& d, const BilinearProduct& first,
                                 const BilinearProduct& second, const std::string& suffix) {
  const std::size_t n = d.dim();
  const auto& p = d.space.parities;
  BilinearProduct br(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector v = first.get(i, j);
      v.add_scaled(second.get(j, i), Scalar(-koszul(p[i], p[j])));
      br.set(i, j, std::move(v));
    }
  SuperSpace space = d.space;
  space.name = d.space.name + suffix;
  return LeibnizSuperalgebra(std::move(space), std::move(br));
}

SparseVector kron(const SparseVector& u, const SparseVector& v) {
  SparseVector out(u.dim() * v.dim());
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) out.set(i * v.dim() + j, a * b);
  return out;
}

}  // namespace

LeibnizSuperalgebra to_leibniz(const SuperDialgebra& d) { return bracket_from(d, d.right, d.left, "_L"); }

LeibnizSuperalgebra to_right_leibniz(const SuperDialgebra& d) { return bracket_from(d, d.left, d.right, "_R"); }

SuperDialgebra tensor_dialgebras(const SuperDialgebra& d, const SuperDialgebra& e) {
  const std::size_t n = d.dim();
  const std::size_t m = e.dim();
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      parities.push_back(d.space.parity(i) + e.space.parity(k));
      labels.push_back(d.space.labels[i] + "." + e.space.labels[k]);
    }
  auto build = [&](const BilinearProduct& p, const BilinearProduct& q) {
    BilinearProduct out(n * m);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t b2 = 0; b2 < m; ++b2) {
            const auto& x = p.get(a, b);
            const auto& y = q.get(a2, b2);
            if (x.is_zero() || y.is_zero()) continue;
            SparseVector v = kron(x, y);
            v *= Scalar(koszul(e.space.parity(a2), d.space.parity(b)));
            out.set(a * m + a2, b * m + b2, std::move(v));
          }
    return out;
  };
  std::optional<SparseVector> unit;
  if (d.bar_unit && e.bar_unit) unit = kron(*d.bar_unit, *e.bar_unit);
  SuperSpace space(d.name() + "(x)" + e.name(), std::move(parities), std::move(labels));
  return SuperDialgebra(std::move(space), build(d.left, e.left), build(d.right, e.right), std::move(unit));
}

SuperDialgebra differential_dialgebra(const SuperDialgebra& a, const LinearMap& d) {
  const std::size_t n = a.dim();
  if (!(a.left == a.right))
    throw Error("not_associative_superalgebra", "differential dialgebra needs coinciding products on '" + a.name() + "'");
  if (d.domain_dim() != n || d.codomain_dim() != n)
    throw Error("dimension_mismatch", "differential does not act on '" + a.name() + "'");
  const auto& p = a.space.parities;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [k, c] : d.column(i))
      if (p[k] != p[i])
        throw Error("odd_differential", "differential maps basis element '" + a.space.labels[i] + "' off its parity");
  LinearMap d2 = compose(d, d);
  for (std::size_t i = 0; i < n; ++i)
    if (!d2.column(i).is_zero())
      throw Error("differential_not_square_zero", "d∘d is nonzero on '" + a.space.labels[i] + "'");
  const auto& mul = a.left;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector lhs = d.apply(mul.get(i, j));
      SparseVector rhs = mul.right_apply(d.column(i), j);
      rhs += mul.left_apply(i, d.column(j));
      if (!(lhs == rhs))
        throw Error("differential_not_derivation", "d(xy) != (dx)y + x(dy) for x = '" + a.space.labels[i] +
                                                       "', y = '" + a.space.labels[j] + "'");
    }
  BilinearProduct left(n), right(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      left.set(i, j, mul.left_apply(i, d.column(j)));
      right.set(i, j, mul.right_apply(d.column(i), j));
    }
  SuperSpace space = a.space;
  space.name = "diff(" + a.name() + ")";
  return SuperDialgebra(std::move(space), std::move(left), std::move(right));
}

LinearMap ad(const LeibnizSuperalgebra& l, const SparseVector& z) {
  const std::size_t n = l.dim();
  std::vector<SparseVector> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(l.bracket.right_apply(z, j));
  return LinearMap(std::move(cols), n, n);
}

LeibnizSuperalgebra leibniz_from_lie_square(const LeibnizSuperalgebra& g) {
  if (!is_lie(g, {1, 1}).passed || !check_leibniz(g, {1, 1}).passed)
    throw Error("not_lie", "'" + g.name() + "' is not a Lie superalgebra");
  const std::size_t n = g.dim();
  const auto& p = g.space.parities;
  const auto& B = g.bracket;
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      parities.push_back(p[x] + p[y]);
      labels.push_back(g.space.labels[x] + "." + g.space.labels[y]);
    }
  BilinearProduct br(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const SparseVector& xy = B.get(x, y);
      if (xy.is_zero()) continue;
      Parity pxy = p[x] + p[y];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          SparseVector v(n * n);
          for (const auto& [k, c] : B.right_apply(xy, a)) v.add(k * n + b, c);
          const int s = koszul(pxy, p[a]);
          for (const auto& [k, c] : B.right_apply(xy, b)) v.add(a * n + k, c * s);
          br.set(x * n + y, a * n + b, std::move(v));
        }
    }
  return LeibnizSuperalgebra(SuperSpace(g.name() + "(x)" + g.name(), std::move(parities), std::move(labels)),
                             std::move(br));
}

LeibnizSuperalgebra lie_tensor_dialgebra(const LeibnizSuperalgebra& g, const SuperDialgebra& d) {
  const std::size_t n = g.dim();
  const std::size_t m = d.dim();
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a) {
      parities.push_back(g.space.parity(x) + d.space.parity(a));
      labels.push_back(g.space.labels[x] + "." + d.space.labels[a]);
    }
  BilinearProduct br(n * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t b = 0; b < m; ++b) {
          const auto& xy = g.bracket.get(x, y);
          const auto& ab = d.right.get(a, b);
          if (xy.is_zero() || ab.is_zero()) continue;
          SparseVector v = kron(xy, ab);
          v *= Scalar(koszul(d.space.parity(a), g.space.parity(y)));
          br.set(x * m + a, y * m + b, std::move(v));
        }
  return LeibnizSuperalgebra(SuperSpace(g.name() + "(x)" + d.name(), std::move(parities), std::move(labels)),
                             std::move(br));
}

namespace {

Subspace close_under(std::size_t n, const std::vector<const BilinearProduct*>& products,
                     const std::vector<SparseVector>& generators) {
  Subspace s(n);
  std::vector<SparseVector> frontier;
  for (const auto& g : generators) {
    if (g.dim() != n) throw Error("dimension_mismatch", "ideal generator has wrong dimension");
    if (s.insert(g)) frontier.push_back(g);
  }
  // Each round adds at least one dimension or stops, so at most n rounds.
  while (!frontier.empty()) {
    std::vector<SparseVector> next;
    for (const auto& v : frontier)
      for (const BilinearProduct* prod : products)
        for (std::size_t i = 0; i < n; ++i) {
          SparseVector w1 = prod->left_apply(i, v);
          if (s.insert(w1)) next.push_back(std::move(w1));
          SparseVector w2 = prod->right_apply(v, i);
          if (s.insert(w2)) next.push_back(std::move(w2));
        }
    frontier = std::move(next);
  }
  return s;
}

struct QuotientShape {
  std::vector<std::size_t> keep;  // surviving basis indices
  std::vector<std::size_t> position;
};

QuotientShape quotient_shape(const SuperSpace& space, const Subspace& ideal) {
  if (ideal.ambient_dim() != space.dim()) throw Error("dimension_mismatch", "ideal lives in a different space");
  if (!is_graded_subspace(space, ideal))
    throw Error("inhomogeneous_ideal", "ideal of '" + space.name + "' is not spanned by homogeneous vectors");
  QuotientShape q;
  q.position.assign(space.dim(), SIZE_MAX);
  std::vector<bool> pivot(space.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (!pivot[i]) {
      q.position[i] = q.keep.size();
      q.keep.push_back(i);
    }
  if (q.keep.empty()) throw Error("invalid_space", "quotient of '" + space.name + "' by itself has dimension 0");
  return q;
}

SparseVector project(const Subspace& ideal, const QuotientShape& q, const SparseVector& v) {
  SparseVector r = ideal.reduce(v);
  SparseVector out(q.keep.size());
  for (const auto& [i, c] : r) out.set(q.position[i], c);
  return out;
}

BilinearProduct induced(const BilinearProduct& prod, const Subspace& ideal, const QuotientShape& q) {
  BilinearProduct out(q.keep.size());
  for (std::size_t a = 0; a < q.keep.size(); ++a)
    for (std::size_t b = 0; b < q.keep.size(); ++b)
      out.set(a, b, project(ideal, q, prod.get(q.keep[a], q.keep[b])));
  return out;
}

SuperSpace quotient_space(const SuperSpace& space, const QuotientShape& q, const std::string& suffix) {
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (auto i : q.keep) {
    parities.push_back(space.parity(i));
    labels.push_back(space.labels[i]);
  }
  return SuperSpace(space.name + suffix, std::move(parities), std::move(labels));
}

}  // namespace

Subspace ideal_closure(const LeibnizSuperalgebra& l, const std::vector<SparseVector>& generators) {
  return close_under(l.dim(), {&l.bracket}, generators);
}

Subspace ideal_closure(const SuperDialgebra& d, const std::vector<SparseVector>& generators) {
  return close_under(d.dim(), {&d.left, &d.right}, generators);
}

LeibnizSuperalgebra quotient_algebra(const LeibnizSuperalgebra& l, const Subspace& ideal) {
  if (!(ideal_closure(l, ideal.basis()) == ideal))
    throw Error("not_an_ideal", "subspace is not an ideal of '" + l.name() + "'");
  auto q = quotient_shape(l.space, ideal);
  return LeibnizSuperalgebra(quotient_space(l.space, q, "/I"), induced(l.bracket, ideal, q));
}

SuperDialgebra quotient_algebra(const SuperDialgebra& d, const Subspace& ideal) {
  if (!(ideal_closure(d, ideal.basis()) == ideal))
    throw Error("not_an_ideal", "subspace is not an ideal of '" + d.name() + "'");
  auto q = quotient_shape(d.space, ideal);
  std::optional<SparseVector> unit;
  if (d.bar_unit) unit = project(ideal, q, *d.bar_unit);
  return SuperDialgebra(quotient_space(d.space, q, "/I"), induced(d.left, ideal, q), induced(d.right, ideal, q),
                        std::move(unit));
}

LeibnizSuperalgebra lie_quotient(const LeibnizSuperalgebra& l) {
  const auto& p = l.space.parities;
  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) {
      SparseVector v = l.bracket.get(i, j);
      v.add_scaled(l.bracket.get(j, i), Scalar(koszul(p[i], p[j])));
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
  auto out = quotient_algebra(l, ideal_closure(l, gens));
  out.space.name = l.name() + "_LS";
  return out;
}

SuperDialgebra associative_quotient(const SuperDialgebra& d) {
  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      SparseVector v = d.left.get(i, j) - d.right.get(i, j);
      if (!v.is_zero()) gens.push_back(std::move(v));
    }
  auto out = quotient_algebra(d, ideal_closure(d, gens));
  out.space.name = d.name() + "_SAss";
  return out;
}

Subspace centre(const LeibnizSuperalgebra& l) {
  const std::size_t n = l.dim();
  // z -> ([z,e_0..e_{n-1}], [e_0..e_{n-1},z]) stacked into K^{2n^2}.
  std::vector<SparseVector> cols;
  cols.reserve(n);
  for (std::size_t z = 0; z < n; ++z) {
    SparseVector col(2 * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [k, c] : l.bracket.get(z, i)) col.set(i * n + k, c);
      for (const auto& [k, c] : l.bracket.get(i, z)) col.set(n * n + i * n + k, c);
    }
    cols.push_back(std::move(col));
  }
  return kernel(LinearMap(std::move(cols), n, 2 * n * n));
}

}  // namespace superleib
