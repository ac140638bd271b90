#include "superleib/matrix_graded.hpp"

#include "tuple_loop.hpp"

namespace superleib {

using detail::run_tuples;
using detail::Sink;

std::size_t MatrixAlgebra::index(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t N = size();
  if (i < 1 || i > N || j < 1 || j > N || k >= coefficients.dim())
    throw Error("index_out_of_range", "matrix index out of range");
  return ((i - 1) * N + (j - 1)) * coefficients.dim() + k;
}

SparseVector MatrixAlgebra::element(std::size_t i, std::size_t j, const SparseVector& a) const {
  SparseVector out(algebra.dim());
  for (const auto& [k, c] : a) out.set(index(i, j, k), c);
  return out;
}

SparseVector MatrixAlgebra::lift(const SparseVector& scalar_matrix) const {
  if (!coefficients.bar_unit) throw Error("missing_bar_unit", "lift needs a unital coefficient algebra");
  const std::size_t N = size();
  if (scalar_matrix.dim() != N * N) throw Error("dimension_mismatch", "lift expects a gl(m, n, K) vector");
  SparseVector out(algebra.dim());
  for (const auto& [idx, c] : scalar_matrix) out.add_scaled(element(idx / N + 1, idx % N + 1, *coefficients.bar_unit), c);
  return out;
}

MatrixAlgebra build_gl(std::size_t m, std::size_t n, const SuperDialgebra& d) {
  const std::size_t N = m + n;
  if (N < 2) throw Error("matrix_too_small", "gl(m, n, D) needs m + n >= 2");
  MatrixAlgebra gl;
  gl.m = m;
  gl.n = n;
  gl.coefficients = d;
  gl.unital_coefficients = d.bar_unit.has_value();
  const std::size_t r = d.dim();
  const bool scalar = r == 1 && d.space.labels[0] == "1";
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        parities.push_back(gl.tau(i, j) + d.space.parity(k));
        std::string cell = (N > 9 ? std::to_string(i) + "_" + std::to_string(j) : std::to_string(i) + std::to_string(j));
        labels.push_back("E" + cell + (scalar ? "" : "(" + d.space.labels[k] + ")"));
      }
  const std::size_t dim = N * N * r;
  BilinearProduct bracket(dim);
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 1; k <= N; ++k)
          for (std::size_t l = 1; l <= N; ++l)
            for (std::size_t b = 0; b < r; ++b) {
              SparseVector v(dim);
              if (j == k)
                for (const auto& [c, x] : d.right.get(a, b)) v.add(gl.index(i, l, c), x);
              if (i == l) {
                Scalar s(-koszul(gl.tau(i, j) + d.space.parity(a), gl.tau(k, l) + d.space.parity(b)));
                for (const auto& [c, x] : d.left.get(b, a)) v.add(gl.index(k, j, c), s * x);
              }
              if (!v.is_zero()) bracket.set(gl.index(i, j, a), gl.index(k, l, b), std::move(v));
            }
  std::string name = "gl(" + std::to_string(m) + "," + std::to_string(n) + "," + d.name() + ")";
  gl.algebra = LeibnizSuperalgebra(SuperSpace(name, std::move(parities), std::move(labels)), std::move(bracket));
  return gl;
}

Scalar supertrace(const MatrixAlgebra& gl, const SparseVector& v) {
  if (gl.coefficients.dim() != 1)
    throw Error("non_scalar_coefficients", "supertrace needs scalar coefficients");
  Scalar s = 0;
  for (std::size_t i = 1; i <= gl.size(); ++i) {
    Scalar c = v.at(gl.index(i, i, 0));
    if (gl.row_parity(i) == Parity::even)
      s += c;
    else
      s -= c;
  }
  return s;
}

Subspace derived_subalgebra(const LeibnizSuperalgebra& l) {
  Subspace s(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j) s.insert(l.bracket.get(i, j));
  // The span of all brackets is itself closed; confirm with one more round.
  Subspace again = s;
  for (const auto& u : s.basis())
    for (const auto& v : s.basis()) again.insert(l(u, v));
  if (!(again == s)) throw Error("internal", "derived subalgebra not stable");
  return s;
}

SparseVector Restriction::coordinates(const SparseVector& parent) const {
  return SparseVector::from_dense(span.coordinates(parent));
}

SparseVector Restriction::embed(const SparseVector& v) const {
  SparseVector out(span.ambient_dim());
  for (const auto& [k, c] : v) out.add_scaled(basis.at(k), c);
  return out;
}

Restriction restrict(const LeibnizSuperalgebra& l, const Subspace& s, std::string name) {
  if (s.ambient_dim() != l.dim()) throw Error("dimension_mismatch", "restrict: subspace of the wrong ambient space");
  if (s.is_zero()) throw Error("empty_subspace", "restrict: the zero subspace is not a valid carrier");
  if (!is_graded_subspace(l.space, s)) throw Error("inhomogeneous_subspace", "restrict: subspace is not graded");
  Restriction r;
  r.span = s;
  r.basis = s.basis();
  const std::size_t m = r.basis.size();
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (const auto& v : r.basis) {
    parities.push_back(*l.space.parity_of(v));
    labels.push_back(v.nnz() == 1 && v.leading_coeff() == 1 ? l.space.labels[v.leading_index()]
                                                            : format_vector(v, l.space.labels));
  }
  BilinearProduct bracket(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      SparseVector w = l(r.basis[i], r.basis[j]);
      if (!s.contains(w))
        throw Error("not_closed", "restrict: [" + labels[i] + ", " + labels[j] + "] leaves the subspace");
      bracket.set(i, j, r.coordinates(w));
    }
  r.algebra = LeibnizSuperalgebra(SuperSpace(std::move(name), std::move(parities), std::move(labels)), std::move(bracket));
  return r;
}

Restriction build_sl(const MatrixAlgebra& gl) {
  std::string name = "sl(" + std::to_string(gl.m) + "," + std::to_string(gl.n) + "," + gl.coefficients.name() + ")";
  return restrict(gl.algebra, derived_subalgebra(gl.algebra), name);
}

std::vector<SparseVector> cartan_of_sl(std::size_t p, std::size_t q) {
  if (p == q) throw Error("equal_block_sizes", "sl(p, p) has a centre; the A(n, n) case is not supported");
  const std::size_t N = p + q;
  if (N < 2) throw Error("matrix_too_small", "sl(p, q) needs p + q >= 2");
  auto diag = [N](std::size_t i) { return (i - 1) * N + (i - 1); };
  std::vector<SparseVector> h;
  for (std::size_t i = 1; i < N; ++i) {
    SparseVector v(N * N);
    v.set(diag(i), Scalar(1));
    v.set(diag(i + 1), Scalar(i == p ? 1 : -1));
    h.push_back(std::move(v));
  }
  return h;
}

SteinbergMap matrix_unit_map(const MatrixAlgebra& gl) {
  SteinbergMap v;
  for (std::size_t i = 1; i <= gl.size(); ++i)
    for (std::size_t j = 1; j <= gl.size(); ++j)
      if (i != j)
        for (std::size_t k = 0; k < gl.coefficients.dim(); ++k)
          v[{i, j, k}] = SparseVector::unit(gl.algebra.dim(), gl.index(i, j, k));
  return v;
}

ViolationReport check_steinberg_relations(const LeibnizSuperalgebra& l, const SteinbergMap& v, std::size_t m,
                                          std::size_t n, const SuperDialgebra& d, const CheckOptions& opts) {
  const std::size_t N = m + n;
  if (N < 3) throw Error("steinberg_too_small", "Steinberg relations need m + n >= 3");
  const std::size_t r = d.dim();
  auto image = [&](std::size_t i, std::size_t j, std::size_t k) -> const SparseVector& {
    auto it = v.find({i, j, k});
    if (it == v.end())
      throw Error("incomplete_map", "Steinberg map misses u" + std::to_string(i) + std::to_string(j) + "(" +
                                        std::to_string(k) + ")");
    if (it->second.dim() != l.dim()) throw Error("dimension_mismatch", "Steinberg image of the wrong dimension");
    return it->second;
  };
  auto linear = [&](std::size_t i, std::size_t j, const SparseVector& a) {
    SparseVector out(l.dim());
    for (const auto& [k, c] : a) out.add_scaled(image(i, j, k), c);
    return out;
  };
  auto par = [m](std::size_t i) { return i <= m ? Parity::even : Parity::odd; };
  // Validate completeness up front so the worker threads never throw.
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (i != j)
        for (std::size_t k = 0; k < r; ++k) image(i, j, k);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> gens;
  for (std::size_t i = 1; i <= N; ++i)
    for (std::size_t j = 1; j <= N; ++j)
      if (i != j)
        for (std::size_t k = 0; k < r; ++k) gens.emplace_back(i, j, k);
  return run_tuples("steinberg", gens.size(), opts, [&](std::size_t o, Sink& sink) {
    auto [i, j, a] = gens[o];
    const SparseVector& x = image(i, j, a);
    for (const auto& [k, l2, b] : gens) {
      sink.checked();
      SparseVector lhs = l(x, image(k, l2, b));
      SparseVector rhs(l.dim());
      if (i != l2 && j == k) {
        rhs = linear(i, l2, d.right.get(a, b));
      } else if (i == l2 && j != k) {
        rhs = linear(k, j, d.left.get(b, a));
        rhs *= Scalar(-koszul(par(i) + par(j) + d.space.parity(a), par(k) + par(l2) + d.space.parity(b)));
      } else if (i == l2 && j == k) {
        continue;  // no relation constrains [v_ij, v_ji]
      }
      if (lhs != rhs) sink.violation({{i, j, a, k, l2, b}, lhs, rhs});
    }
  });
}

}  // namespace superleib
