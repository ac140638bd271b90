#include "common.hpp"
#include "helpers.hpp"

#include "superleib/checks.hpp"
#include "superleib/io.hpp"
#include "superleib/weights.hpp"

#include <catch_amalgamated.hpp>

using namespace superleib;
using namespace testing_support;

TEST_CASE("gl(m,n,K) matches independently authored constants", "[gl]") {
  for (auto [m, n, file] : {std::tuple{1, 1, "/gl_1_1_K.alg"}, std::tuple{2, 1, "/gl_2_1_K.alg"}}) {
    LeibnizSuperalgebra ref = io::load_leibniz(std::string(FIXTURES_DIR) + file);
    MatrixAlgebra gl = build_gl(m, n, catalog::field());
    CHECK(gl.algebra.space.labels == ref.space.labels);
    CHECK(gl.algebra.space.parities == ref.space.parities);
    CHECK(gl.algebra.bracket == ref.bracket);
  }
}

TEST_CASE("gl(m,n,D) is graded and Leibniz", "[gl]") {
  for (const auto& d : dialgebra_catalog()) {
    if (d.dim() > 6) continue;
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
      INFO(d.name() << " " << m << "," << n);
      MatrixAlgebra gl = build_gl(m, n, d);
      CHECK(gl.algebra.dim() == (m + n) * (m + n) * d.dim());
      CHECK(check_graded(gl.algebra).passed);
      CHECK(check_leibniz(gl.algebra).passed);
      if (d.left == d.right) CHECK(is_lie(gl.algebra).passed);
    }
  }
  CHECK(error_kind([] { build_gl(1, 0, catalog::field()); }) == "matrix_too_small");
  // Non-antisymmetric coefficients give a non-Lie gl.
  CHECK_FALSE(is_lie(build_gl(2, 1, catalog::differential_upper_triangular()).algebra).passed);
}

TEST_CASE("supertrace and sl(p,q,K)", "[sl]") {
  MatrixAlgebra gl = build_gl(2, 1, catalog::field());
  CHECK(supertrace(gl, SparseVector::unit(9, gl.index(1, 1, 0))) == 1);
  CHECK(supertrace(gl, SparseVector::unit(9, gl.index(3, 3, 0))) == -1);
  CHECK(supertrace(gl, SparseVector::unit(9, gl.index(1, 2, 0))) == 0);
  CHECK(error_kind([] {
          MatrixAlgebra g = build_gl(2, 1, catalog::exterior(1));
          supertrace(g, SparseVector(g.algebra.dim()));
        }) == "non_scalar_coefficients");

  SuperSpace s("ab", {Parity::even, Parity::odd}, {"x", "y"});
  CHECK(derived_subalgebra(LeibnizSuperalgebra(s, BilinearProduct(2))).is_zero());
  CHECK(derived_subalgebra(build_gl(2, 0, catalog::field()).algebra).dim() == 3);
  for (auto [p, q] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 1}, std::pair{3, 2}, std::pair{1, 1}}) {
    MatrixAlgebra g = build_gl(p, q, catalog::field());
    Subspace d = derived_subalgebra(g.algebra);
    CHECK(d.dim() == static_cast<std::size_t>((p + q) * (p + q) - 1));
    for (const auto& v : d.basis()) CHECK(supertrace(g, v) == 0);
  }
}

TEST_CASE("restrict", "[sl]") {
  MatrixAlgebra gl2 = build_gl(2, 0, catalog::field());
  Restriction sl2 = build_sl(gl2);
  CHECK(sl2.algebra.dim() == 3);
  CHECK(is_lie(sl2.algebra).passed);
  // [e, f] = h with e = E12, f = E21, h = E11 - E22.
  SparseVector e = sl2.coordinates(SparseVector::unit(4, gl2.index(1, 2, 0)));
  SparseVector f = sl2.coordinates(SparseVector::unit(4, gl2.index(2, 1, 0)));
  SparseVector h = sl2.embed(sl2.algebra(e, f));
  CHECK(h.at(gl2.index(1, 1, 0)) == 1);
  CHECK(h.at(gl2.index(2, 2, 0)) == -1);
  CHECK(error_kind([&] { restrict(gl2.algebra, Subspace(4), "zero"); }) == "empty_subspace");
  CHECK(error_kind([&] {
          restrict(gl2.algebra, row_reduce({SparseVector::unit(4, 1), SparseVector::unit(4, 2)}, 4), "e,f");
        }) == "not_closed");
  MatrixAlgebra gl11 = build_gl(1, 1, catalog::field());
  SparseVector mixed = SparseVector::unit(4, 0) + SparseVector::unit(4, 1);
  CHECK(error_kind([&] { restrict(gl11.algebra, row_reduce({mixed}, 4), "mixed"); }) == "inhomogeneous_subspace");

  for (const auto& d : {catalog::differential_exterior(), catalog::differential_upper_triangular()}) {
    Restriction sl = build_sl(build_gl(2, 1, d));
    CHECK(check_leibniz(sl.algebra).passed);
  }
}

TEST_CASE("cartan_of_sl", "[cartan]") {
  auto h = cartan_of_sl(2, 1);
  REQUIRE(h.size() == 2);
  MatrixAlgebra gl = build_gl(2, 1, catalog::field());
  SparseVector h1(9), h2(9);
  h1.set(gl.index(1, 1, 0), Scalar(1));
  h1.set(gl.index(2, 2, 0), Scalar(-1));
  h2.set(gl.index(2, 2, 0), Scalar(1));
  h2.set(gl.index(3, 3, 0), Scalar(1));
  CHECK(h[0] == h1);
  CHECK(h[1] == h2);
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{1, 2}}) {
    auto hs = cartan_of_sl(p, q);
    MatrixAlgebra g = build_gl(p, q, catalog::field());
    CHECK(hs.size() == static_cast<std::size_t>(p + q - 1));
    for (const auto& x : hs) {
      CHECK(supertrace(g, x) == 0);
      for (const auto& y : hs) CHECK(g.algebra(x, y).is_zero());
    }
  }
  CHECK(error_kind([] { cartan_of_sl(2, 2); }) == "equal_block_sizes");
}

TEST_CASE("weight decompositions", "[weights]") {
  LeibnizSuperalgebra gl = build_gl(2, 1, catalog::field()).algebra;
  auto trivial = weight_decomposition(gl, {SparseVector(9)});
  CHECK(trivial.complete);
  CHECK(trivial.weights.size() == 1);
  CHECK(trivial.zero_space().dim() == 9);

  Restriction sl2 = build_sl(build_gl(2, 0, catalog::field()));
  MatrixAlgebra gl2 = build_gl(2, 0, catalog::field());
  SparseVector h(4);
  h.set(0, Scalar(1));
  h.set(3, Scalar(-1));
  auto d2 = weight_decomposition(sl2.algebra, {sl2.coordinates(h)});
  REQUIRE(d2.weights.size() == 3);
  std::vector<Scalar> values;
  for (const auto& [w, s] : d2.weights) {
    values.push_back(w[0]);
    CHECK(s.dim() == 1);
  }
  CHECK(values == std::vector<Scalar>{-2, 0, 2});

  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    SpecialLinear g(p, q);
    auto d = weight_decomposition(g.algebra(), g.cartan());
    const std::size_t n = p + q;
    CHECK(d.complete);
    CHECK(d.nonzero_count() == n * n - n);
    for (const auto& [w, s] : d.weights)
      if (!is_zero_weight(w)) CHECK(s.dim() == 1);
    CHECK(d.zero_space() == row_reduce(g.cartan(), g.dim()));
  }
  CHECK(error_kind([&] {
          weight_decomposition(gl, {SparseVector::unit(9, 1), SparseVector::unit(9, 3)});
        }) == "non_commuting_cartan");
  // E12 is nilpotent: only weight 0, but its generalized eigenspace is
  // everything while the eigenspace is not.
  auto partial = weight_decomposition(gl, {SparseVector::unit(9, 1)});
  CHECK_FALSE(partial.complete);
  CHECK_FALSE(partial.diagnostic.empty());
}

TEST_CASE("root gradings", "[grading]") {
  Graded k = graded_sl(2, 1, catalog::field());
  auto c = check_delta_graded(k.sl.algebra, k.g, k.h);
  CHECK(c.is_graded);
  CHECK(c.root_count == 6);
  CHECK(c.zero_space_dim == 2);

  for (const auto& d : {catalog::unital_differential_exterior(), catalog::matrix_superalgebra(1, 1)}) {
    Graded s = graded_sl(2, 1, d);
    auto cert = check_delta_graded(s.sl.algebra, s.g, s.h);
    INFO(d.name());
    CHECK(cert.is_graded);
    for (const auto& [w, sp] : cert.decomposition.weights)
      if (!is_zero_weight(w)) CHECK(sp.dim() == d.dim());
  }

  // gl(2,1,K) against sl(2,1,K): only the third condition fails.
  MatrixAlgebra gl = build_gl(2, 1, catalog::field());
  SpecialLinear g(2, 1);
  Subspace span(9);
  for (std::size_t i = 0; i < g.dim(); ++i) span.insert(g.matrix(i));
  auto cert = check_delta_graded(gl.algebra, span, cartan_of_sl(2, 1));
  CHECK_FALSE(cert.is_graded);
  CHECK(cert.failed(3));
  CHECK_FALSE(cert.failed(1));
  CHECK_FALSE(cert.failed(2));
  CHECK(error_kind([&] {
          check_delta_graded(gl.algebra, span, {SparseVector::unit(9, 0)});
        }) == "cartan_not_in_subalgebra");
}

TEST_CASE("Steinberg relations", "[steinberg]") {
  for (const auto& d : {catalog::field(), catalog::exterior(1), catalog::unital_differential_exterior()}) {
    MatrixAlgebra gl = build_gl(2, 1, d);
    Restriction sl = build_sl(gl);
    SteinbergMap v;
    for (const auto& [key, x] : matrix_unit_map(gl)) v[key] = sl.coordinates(x);
    INFO(d.name());
    auto r = check_steinberg_relations(sl.algebra, v, 2, 1, d);
    CHECK(r.passed);
    CHECK(r.checked_count > 0);

    SteinbergMap zero = v;
    for (auto& [key, x] : zero) x = SparseVector(sl.algebra.dim());
    CHECK(check_steinberg_relations(sl.algebra, zero, 2, 1, d).passed);

    SteinbergMap neg = v;
    neg.begin()->second *= Scalar(-1);
    auto bad = check_steinberg_relations(sl.algebra, neg, 2, 1, d);
    CHECK_FALSE(bad.passed);
    CHECK(bad.violation_count >= 1);

    SteinbergMap partial = v;
    partial.erase(partial.begin());
    CHECK(error_kind([&] { check_steinberg_relations(sl.algebra, partial, 2, 1, d); }) == "incomplete_map");
  }
  // Without a unit E_ij(a) need not lie in sl; the relations still hold in gl.
  SuperDialgebra dut = catalog::differential_upper_triangular();
  MatrixAlgebra glut = build_gl(2, 1, dut);
  CHECK_FALSE(build_sl(glut).span.contains(matrix_unit_map(glut).begin()->second));
  CHECK(check_steinberg_relations(glut.algebra, matrix_unit_map(glut), 2, 1, dut).passed);

  MatrixAlgebra gl11 = build_gl(1, 1, catalog::field());
  CHECK(error_kind([&] {
          check_steinberg_relations(gl11.algebra, matrix_unit_map(gl11), 1, 1, catalog::field());
        }) == "steinberg_too_small");
}
