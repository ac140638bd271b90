#include "superleib/constructions.hpp"
#include "superleib/models.hpp"
#include "superleib/weights.hpp"

namespace superleib {

namespace {

[[noreturn]] void mismatch(const std::string& what) { throw Error("decomposition_mismatch", what); }

// Eigenvalue of ad h_k on E_ij for the Cartan basis of cartan_of_sl(p, q).
WeightVector expected_weight(std::size_t p, std::size_t q, std::size_t i, std::size_t j) {
  const std::size_t N = p + q;
  auto diag = [p](std::size_t k, std::size_t r) -> long {
    if (r == k) return 1;
    if (r == k + 1) return k == p ? 1 : -1;
    return 0;
  };
  WeightVector w;
  for (std::size_t k = 1; k < N; ++k) w.push_back(Scalar(diag(k, i) - diag(k, j)));
  return w;
}

// Scalar c with v = c * base; throws when v is not a multiple of base.
Scalar multiple_of(const SparseVector& v, const SparseVector& base) {
  if (base.is_zero()) mismatch("zero reference vector");
  Scalar c = v.at(base.leading_index()) / base.leading_coeff();
  SparseVector check = base;
  check *= c;
  if (check != v) mismatch("bracket of opposite simple root vectors is not a multiple of the coroot");
  return c;
}

std::string strip_prefix(const std::string& label, const std::string& prefix) {
  return label.rfind(prefix, 0) == 0 ? label.substr(prefix.size()) : label;
}

}  // namespace

CoordinateDataA extract_coordinates(const LeibnizSuperalgebra& l, const Subspace& g_embed,
                                    const std::vector<SparseVector>& h) {
  const std::size_t dim = l.dim();
  const std::size_t N = h.size() + 1;
  if (N < 3) mismatch("need at least two Cartan elements (p + q >= 3)");
  WeightDecomposition dec = weight_decomposition(l, h);
  if (!dec.complete) mismatch("weight decomposition is incomplete: " + dec.diagnostic);

  auto root_space = [&](const WeightVector& w) -> Subspace {
    auto it = dec.weights.find(w);
    return it == dec.weights.end() ? Subspace(dim) : it->second;
  };
  auto g_root = [&](const WeightVector& w) { return intersect(root_space(w), g_embed); };

  // Block sizes: the split whose predicted roots and parities match g.
  std::size_t p = 0, q = 0;
  for (std::size_t cand = N - 1; cand > N - cand && p == 0; --cand) {
    bool ok = true;
    for (std::size_t i = 1; i <= N && ok; ++i)
      for (std::size_t j = 1; j <= N && ok; ++j) {
        if (i == j) continue;
        Subspace s = g_root(expected_weight(cand, N - cand, i, j));
        Parity tau = (i <= cand ? Parity::even : Parity::odd) + (j <= cand ? Parity::even : Parity::odd);
        ok = s.dim() == 1 && l.space.parity_of(s.basis()[0]) == tau;
      }
    if (ok) {
      p = cand;
      q = N - cand;
    }
  }
  if (p == 0) mismatch("the grading subalgebra is not sl(p, q) with p > q >= 1 for this Cartan basis");

  // Embedding of sl(p, q) on matrix units.
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> iota;
  for (std::size_t i = 1; i < N; ++i) {
    SparseVector e = g_root(expected_weight(p, q, i, i + 1)).basis()[0];
    SparseVector f = g_root(expected_weight(p, q, i + 1, i)).basis()[0];
    Scalar c = multiple_of(l(e, f), h[i - 1]);
    f *= Scalar(1) / c;
    iota[{i, i + 1}] = e;
    iota[{i + 1, i}] = f;
  }
  for (std::size_t gap = 2; gap < N; ++gap)
    for (std::size_t i = 1; i + gap <= N; ++i) {
      std::size_t j = i + gap;
      iota[{i, j}] = l(iota.at({i, i + 1}), iota.at({i + 1, j}));
      iota[{j, i}] = l(iota.at({j, j - 1}), iota.at({j - 1, i}));
    }
  SpecialLinear g(p, q);
  const MatrixAlgebra& glk = g.gl();
  Frame cartan_frame(N * N);
  for (const auto& v : cartan_of_sl(p, q)) cartan_frame.add(v);
  auto embed = [&](const SparseVector& m) {
    SparseVector out(dim), diagonal(N * N);
    for (const auto& [idx, c] : m) {
      std::size_t i = idx / N + 1, j = idx % N + 1;
      if (i == j)
        diagonal.set(idx, c);
      else
        out.add_scaled(iota.at({i, j}), c);
    }
    for (const auto& [k, c] : cartan_frame.coordinates(diagonal)) out.add_scaled(h[k], c);
    return out;
  };
  std::vector<SparseVector> g_images;
  for (std::size_t i = 0; i < g.dim(); ++i) g_images.push_back(embed(g.matrix(i)));
  if (!(row_reduce(g_images, dim) == g_embed)) mismatch("embedded sl(p, q) does not span the grading subalgebra");

  // A = the E12 root space.
  const SparseVector e12 = SparseVector::unit(N * N, glk.index(1, 2, 0));
  const SparseVector e21 = SparseVector::unit(N * N, glk.index(2, 1, 0));
  Subspace l12 = root_space(expected_weight(p, q, 1, 2));
  const std::vector<SparseVector> a_basis = l12.basis();
  const std::size_t na = a_basis.size();

  // Ψ_k : g -> L, the module map with E12 -> a_basis[k], built by
  // repeatedly applying ad ι(f) to known images.
  Frame reach(N * N);
  std::vector<std::vector<SparseVector>> images(na);
  reach.add(e12);
  for (std::size_t k = 0; k < na; ++k) images[k].push_back(a_basis[k]);
  for (std::size_t t = 0; t < reach.size() && reach.size() < g.dim(); ++t)
    for (std::size_t f = 0; f < g.dim(); ++f) {
      SparseVector y = glk.algebra(g.matrix(f), reach.vectors()[t]);
      if (reach.add(y))
        for (std::size_t k = 0; k < na; ++k) images[k].push_back(l(g_images[f], images[k][t]));
    }
  if (reach.size() != g.dim()) mismatch("E12 does not generate sl(p, q)");
  auto psi = [&](std::size_t k, const SparseVector& m) {
    SparseVector out(dim);
    for (const auto& [t, c] : reach.coordinates(m)) out.add_scaled(images[k][t], c);
    return out;
  };

  // D = centralizer of g (left action).
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < dim; ++j) {
    SparseVector col(dim * g.dim());
    SparseVector ej = SparseVector::unit(dim, j);
    for (std::size_t f = 0; f < g.dim(); ++f)
      for (const auto& [k, c] : l(g_images[f], ej)) col.set(f * dim + k, c);
    cols.push_back(std::move(col));
  }
  const std::vector<SparseVector> d_basis = kernel(LinearMap(std::move(cols), dim, dim * g.dim())).basis();
  const std::size_t nd = d_basis.size();

  // Identification of (g ⊗ A) ⊕ D with L.
  Frame frame(dim);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = 0; k < na; ++k)
      if (!frame.add(psi(k, g.matrix(i)))) mismatch("adjoint copies are not independent");
  for (const auto& d : d_basis)
    if (!frame.add(d)) mismatch("centralizer meets the adjoint copies");
  if (frame.size() != dim) mismatch("L is not the sum of adjoint copies and the centralizer");
  const std::size_t off = g.dim() * na;

  std::size_t i12 = g.dim(), i21 = g.dim();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.matrix(i) == e12) i12 = i;
    if (g.matrix(i) == e21) i21 = i;
  }
  if (i12 == g.dim() || i21 == g.dim()) mismatch("E12/E21 are not basis elements of sl(p, q)");

  // Frame coordinates split into the A-vector on g-index `gi` and the D part.
  auto a_part = [&](const SparseVector& c, std::size_t gi) {
    SparseVector out(na);
    for (const auto& [t, x] : c)
      if (t < off && t / na == gi) out.set(t % na, x);
    return out;
  };
  auto d_part = [&](const SparseVector& c) {
    SparseVector out(nd);
    for (const auto& [t, x] : c)
      if (t >= off) out.set(t - off, x);
    return out;
  };
  auto only_on = [&](const SparseVector& c, std::size_t gi, bool allow_d) {
    for (const auto& [t, x] : c) {
      if (t >= off && !allow_d) return false;
      if (t < off && t / na != gi) return false;
    }
    return true;
  };

  // Spaces and parities.
  std::vector<Parity> pa, pd;
  std::vector<std::string> la, ld;
  for (const auto& v : a_basis) {
    auto par = l.space.parity_of(v);
    if (!par) mismatch("inhomogeneous root vector");
    pa.push_back(*par);
    la.push_back(v.nnz() == 1 && v.leading_coeff() == 1 ? strip_prefix(l.space.labels[v.leading_index()], "E12.")
                                                        : "a" + std::to_string(la.size()));
  }
  for (const auto& v : d_basis) {
    auto par = l.space.parity_of(v);
    if (!par) mismatch("inhomogeneous centralizer vector");
    pd.push_back(*par);
    ld.push_back(v.nnz() == 1 && v.leading_coeff() == 1 ? l.space.labels[v.leading_index()]
                                                        : format_vector(v, l.space.labels));
  }

  // h1 = [E12, E21] and E12∗E21 in sl coordinates.
  Frame split(g.dim());
  split.add(g.sl().coordinates(glk.algebra(e12, e21)));
  split.add(g.sl().coordinates(star_product(g, e12, e21)));

  BilinearProduct left(na), right(na), form(na, na, nd), phi(nd, na, na), rho(na, nd, na), dbr(nd);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) {
      SparseVector c = frame.coordinates(l(psi(a, e12), psi(b, e21)));
      SparseVector x(na), y(na);
      for (std::size_t k = 0; k < na; ++k) {
        SparseVector gk(g.dim());
        for (const auto& [t, v] : c)
          if (t < off && t % na == k) gk.set(t / na, v);
        if (gk.is_zero()) continue;
        SparseVector xy = split.coordinates(gk);
        x.set(k, xy.at(0));
        y.set(k, xy.at(1));
      }
      SparseVector r = x + y;
      SparseVector lft = x - y;
      lft *= Scalar(koszul(pa[a], pa[b]));
      right.set(a, b, std::move(r));
      left.set(b, a, std::move(lft));
      form.set(a, b, d_part(c));
    }
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t a = 0; a < na; ++a) {
      SparseVector c = frame.coordinates(l(d_basis[d], psi(a, e12)));
      if (!only_on(c, i12, false)) mismatch("D does not act on the E12 copy inside it");
      phi.set(d, a, a_part(c, i12));
      c = frame.coordinates(l(psi(a, e12), d_basis[d]));
      if (!only_on(c, i12, false)) mismatch("right action of D leaves the E12 copy");
      rho.set(a, d, a_part(c, i12));
    }
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t e = 0; e < nd; ++e) {
      SparseVector c = frame.coordinates(l(d_basis[d], d_basis[e]));
      for (const auto& [t, x] : c)
        if (t < off) mismatch("D is not a subalgebra");
      dbr.set(d, e, d_part(c));
    }

  SparseVector unit = SparseVector::from_dense(l12.coordinates(g_images[i12]));
  CoordinateDataA data;
  data.p = p;
  data.q = q;
  data.A = SuperDialgebra(SuperSpace("A", pa, la), std::move(left), std::move(right), unit);
  data.D = nd ? LeibnizSuperalgebra(SuperSpace("D", pd, ld), std::move(dbr)) : zero_leibniz();
  data.phi = std::move(phi);
  data.form = std::move(form);
  data.rho = std::move(rho);

  // Rebuild and compare under the identification.
  LeibnizSuperalgebra rebuilt = build_A_graded_model(data);
  const auto& iso = frame.vectors();
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v) {
      SparseVector want(dim);
      for (const auto& [t, x] : rebuilt.bracket.get(u, v)) want.add_scaled(iso[t], x);
      if (l(iso[u], iso[v]) != want)
        mismatch("rebuilt model differs from L at (" + rebuilt.space.labels[u] + ", " + rebuilt.space.labels[v] + ")");
    }
  return data;
}

}  // namespace superleib
