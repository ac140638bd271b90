#include "superleib/catalog.hpp"

#include <algorithm>

#include "superleib/constructions.hpp"

namespace superleib::catalog {

SuperDialgebra field() {
  BilinearProduct p(1);
  p.add(0, 0, 0, Scalar(1));
  return as_dialgebra(SuperSpace("K", {Parity::even}, {"1"}), p, SparseVector::unit(1, 0));
}

SuperDialgebra exterior(std::size_t n) {
  // Monomials as bitmasks, ordered by degree then lexicographically.
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
  auto lex_key = [n](unsigned m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) idx.push_back(i);
    return idx;
  };
  std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    int da = __builtin_popcount(a), db = __builtin_popcount(b);
    if (da != db) return da < db;
    return lex_key(a) < lex_key(b);
  });
  std::vector<std::size_t> index_of(1u << n);
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    index_of[masks[k]] = k;
    parities.push_back(parity_of(__builtin_popcount(masks[k])));
    std::string label;
    for (std::size_t i = 0; i < n; ++i)
      if (masks[k] & (1u << i)) label += "th" + std::to_string(i + 1);
    labels.push_back(label.empty() ? "1" : label);
  }
  BilinearProduct p(masks.size());
  for (unsigned a : masks)
    for (unsigned b : masks) {
      if (a & b) continue;
      // Sign of sorting the concatenated generator word: count pairs
      // (i in a, j in b) with i > j.
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (a & (1u << i))
          for (std::size_t j = 0; j < i; ++j)
            if (b & (1u << j)) ++inversions;
      p.add(index_of[a], index_of[b], index_of[a | b], Scalar(inversions % 2 ? -1 : 1));
    }
  std::string name = "Lambda" + std::to_string(n);
  return as_dialgebra(SuperSpace(name, std::move(parities), std::move(labels)), p,
                      SparseVector::unit(masks.size(), 0));
}

SuperDialgebra truncated_polynomial(std::size_t n) {
  std::vector<Parity> parities(n, Parity::even);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t" + std::to_string(i)));
  BilinearProduct p(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) p.add(i, j, i + j, Scalar(1));
  return as_dialgebra(SuperSpace("K[t]/t^" + std::to_string(n), std::move(parities), std::move(labels)), p,
                      SparseVector::unit(n, 0));
}

SuperDialgebra matrix_superalgebra(std::size_t p, std::size_t q) {
  const std::size_t N = p + q;
  auto par = [p](std::size_t i) { return i < p ? Parity::even : Parity::odd; };
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      parities.push_back(par(i) + par(j));
      labels.push_back("E" + std::to_string(i + 1) + (N > 9 ? "_" : "") + std::to_string(j + 1));
    }
  BilinearProduct prod(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t l = 0; l < N; ++l) prod.add(i * N + j, j * N + l, i * N + l, Scalar(1));
  SparseVector unit(N * N);
  for (std::size_t i = 0; i < N; ++i) unit.set(i * N + i, Scalar(1));
  std::string name = q == 0 ? "M" + std::to_string(p) : "M(" + std::to_string(p) + "|" + std::to_string(q) + ")";
  return as_dialgebra(SuperSpace(name, std::move(parities), std::move(labels)), prod, unit);
}

SuperDialgebra upper_triangular(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  auto idx = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(cells.begin(), cells.end(), std::make_pair(i, j)) - cells.begin());
  };
  std::vector<std::string> labels;
  for (auto [i, j] : cells) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  BilinearProduct prod(cells.size());
  for (auto [i, j] : cells)
    for (std::size_t l = j; l < n; ++l) prod.add(idx(i, j), idx(j, l), idx(i, l), Scalar(1));
  SparseVector unit(cells.size());
  for (std::size_t i = 0; i < n; ++i) unit.set(idx(i, i), Scalar(1));
  return as_dialgebra(
      SuperSpace("UT" + std::to_string(n), std::vector<Parity>(cells.size(), Parity::even), std::move(labels)), prod,
      unit);
}

LinearMap exterior_differential() {
  // Basis of Λ2: 1, th1, th2, th1th2. d th1 = th2, everything else to 0.
  std::vector<SparseVector> cols(4, SparseVector(4));
  cols[1] = SparseVector::unit(4, 2);
  return LinearMap(std::move(cols), 4, 4);
}

SuperDialgebra differential_exterior() { return differential_dialgebra(exterior(2), exterior_differential()); }

SuperDialgebra differential_upper_triangular() {
  SuperDialgebra a = upper_triangular(2);  // E11, E12, E22
  SparseVector e12 = SparseVector::unit(3, 1);
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < 3; ++j) {
    SparseVector ej = SparseVector::unit(3, j);
    cols.push_back(a.left.apply(e12, ej) - a.left.apply(ej, e12));
  }
  return differential_dialgebra(a, LinearMap(std::move(cols), 3, 3));
}

SuperDialgebra split_extension(const SuperDialgebra& a) {
  if (!(a.left == a.right))
    throw Error("not_associative_superalgebra", "split extension needs coinciding products on '" + a.name() + "'");
  if (!a.bar_unit) throw Error("missing_bar_unit", "split extension needs a unital algebra");
  const std::size_t n = a.dim();
  std::vector<Parity> parities = a.space.parities;
  std::vector<std::string> labels = a.space.labels;
  for (std::size_t i = 0; i < n; ++i) {
    parities.push_back(a.space.parity(i));
    labels.push_back(a.space.labels[i] + "'");
  }
  auto shift = [n](const SparseVector& v, std::size_t offset) {
    SparseVector out(2 * n);
    for (const auto& [k, c] : v) out.set(k + offset, c);
    return out;
  };
  BilinearProduct left(2 * n), right(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVector& ij = a.left.get(i, j);
      left.set(i, j, shift(ij, 0));
      right.set(i, j, shift(ij, 0));
      left.set(n + i, j, shift(ij, n));   // (0,m) ⊣ (b,0) = (0, mb)
      right.set(i, n + j, shift(ij, n));  // (a,0) ⊢ (0,n) = (0, an)
    }
  SuperSpace space(a.name() + "+" + a.name() + "'", std::move(parities), std::move(labels));
  return SuperDialgebra(std::move(space), std::move(left), std::move(right), shift(*a.bar_unit, 0));
}

SuperDialgebra generated_subdialgebra(const SuperDialgebra& d, const std::vector<SparseVector>& generators,
                                      std::optional<SparseVector> unit, const std::string& name) {
  Subspace s = row_reduce(generators, d.dim());
  for (;;) {
    auto basis = s.basis();
    bool grew = false;
    for (const auto& u : basis)
      for (const auto& v : basis) {
        grew |= s.insert(d.left.apply(u, v));
        grew |= s.insert(d.right.apply(u, v));
      }
    if (!grew) break;
  }
  if (!is_graded_subspace(d.space, s))
    throw Error("inhomogeneous_subspace", "generated sub-dialgebra of '" + d.name() + "' is not graded");
  auto basis = s.basis();
  const std::size_t m = basis.size();
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (const auto& v : basis) {
    parities.push_back(*d.space.parity_of(v));
    labels.push_back(v.nnz() == 1 && v.leading_coeff() == 1 ? d.space.labels[v.leading_index()]
                                                            : "(" + format_vector(v, d.space.labels) + ")");
  }
  auto coords = [&](const SparseVector& v) { return SparseVector::from_dense(s.coordinates(v)); };
  BilinearProduct left(m), right(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      left.set(i, j, coords(d.left.apply(basis[i], basis[j])));
      right.set(i, j, coords(d.right.apply(basis[i], basis[j])));
    }
  std::optional<SparseVector> sub_unit;
  if (unit) sub_unit = coords(*unit);
  return SuperDialgebra(SuperSpace(name, std::move(parities), std::move(labels)), std::move(left), std::move(right),
                        std::move(sub_unit));
}

SuperDialgebra unital_differential_exterior() {
  SuperDialgebra lam = exterior(2);
  SuperDialgebra ext = split_extension(lam);
  LinearMap d = exterior_differential();
  const std::size_t n = lam.dim();
  std::vector<SparseVector> gens;
  SparseVector one = SparseVector::unit(2 * n, 0);
  gens.push_back(one);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector v(2 * n);
    for (const auto& [k, c] : d.column(i)) v.set(k, c);
    v.set(n + i, Scalar(1));
    gens.push_back(std::move(v));
  }
  return generated_subdialgebra(ext, gens, one, "diff(Lambda2)+1");
}

}  // namespace superleib::catalog
