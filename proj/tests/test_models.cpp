#include "common.hpp"
#include "helpers.hpp"
#include "mutations.hpp"

#include "superleib/checks.hpp"
#include "superleib/io.hpp"
#include "superleib/weights.hpp"

#include <catch_amalgamated.hpp>

using namespace superleib;
using namespace testing_support;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

LeibnizSuperalgebra abelian(std::vector<std::string> labels) {
  std::vector<Parity> ps(labels.size(), Parity::even);
  const std::size_t n = labels.size();
  return LeibnizSuperalgebra(SuperSpace("D", std::move(ps), std::move(labels)), BilinearProduct(n));
}

}  // namespace

TEST_CASE("circ and bracket on the coordinate algebra", "[models]") {
  SuperDialgebra lam = catalog::exterior(2);
  CircAndBracket cb = circ_and_bracket(lam);
  for (std::size_t a = 0; a < lam.dim(); ++a) {
    SparseVector e = SparseVector::unit(4, a);
    CHECK(cb.circ.get(0, a) == e * Scalar(2));
    CHECK(cb.bracket.get(0, a).is_zero());
  }
  // a⊢b = (a∘b + [a,b]) / 2 on every catalog algebra
  for (const auto& d : dialgebra_catalog()) {
    CircAndBracket x = circ_and_bracket(d);
    for (std::size_t i = 0; i < d.dim(); ++i)
      for (std::size_t j = 0; j < d.dim(); ++j) {
        SparseVector sum = x.circ.get(i, j) + x.bracket.get(i, j);
        CHECK(sum == d.right.get(i, j) * Scalar(2));
      }
  }
  // supercommutative inputs have a zero bracket, the matrix algebra does not
  CHECK(circ_and_bracket(catalog::exterior(2)).bracket.is_zero());
  CHECK_FALSE(circ_and_bracket(catalog::matrix_superalgebra(2, 0)).bracket.is_zero());
}

TEST_CASE("star product", "[models]") {
  SpecialLinear g(2, 1);
  const MatrixAlgebra& gl = g.gl();
  auto e = [&](std::size_t i, std::size_t j) { return SparseVector::unit(9, gl.index(i, j, 0)); };
  CHECK(star_product(g, e(1, 2), e(1, 2)).is_zero());
  SparseVector expect(9);
  expect.set(gl.index(1, 1, 0), Scalar(-1));
  expect.set(gl.index(2, 2, 0), Scalar(-1));
  expect.set(gl.index(3, 3, 0), Scalar(-2));
  CHECK(star_product(g, e(1, 2), e(2, 1)) == expect);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const SparseVector &x = g.matrix(i), &y = g.matrix(j);
      SparseVector xy = star_product(g, x, y);
      CHECK(g.str(xy) == 0);
      Scalar s(koszul(g.parity(i), g.parity(j)));
      CHECK(xy == star_product(g, y, x) * s);
    }
  SparseVector mixed = e(1, 3) + e(1, 2);
  CHECK(error_kind([&] { star_product(g, mixed, e(1, 2)); }) == "inhomogeneous_element");
}

TEST_CASE("model with A = K and D = 0 is sl(p,q)", "[models]") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}}) {
    SpecialLinear g(p, q);
    LeibnizSuperalgebra m = build_A_graded_model(make_coordinate_data(p, q, catalog::field(), zero_leibniz()));
    CHECK(m.bracket == g.algebra().bracket);
    CHECK(m.space.parities == g.algebra().space.parities);
  }
}

TEST_CASE("canonical models satisfy the conditions", "[models]") {
  for (const auto& a : coordinate_catalog()) {
    INFO(a.name());
    CanonicalModel cm = build_canonical_LA(a, 2, 1);
    ConditionReport rep = check_thm41_conditions(cm.data);
    CHECK(rep.passed);
    CHECK(rep.conditions.size() == 7);
    CHECK(check_leibniz(cm.model).passed);
    CHECK(check_graded(cm.model).passed);
    ModelGrading mg = model_grading(cm.model, 2, 1, a);
    GradingCertificate cert = check_delta_graded(cm.model, mg.g, mg.h);
    CHECK(cert.is_graded);
    CHECK(cert.root_count == 6);
  }
  // D = ad[A,A]: zero for supercommutative A, 3-dim for M2 (sl2 acting on M2)
  CHECK(build_canonical_LA(catalog::exterior(2), 2, 1).data.D.dim() == 0);
  CHECK(build_canonical_LA(catalog::matrix_superalgebra(2, 0), 2, 1).data.D.dim() == 3);
  CHECK(build_canonical_LA(catalog::upper_triangular(2), 2, 1).data.D.dim() == 1);

  CHECK(error_kind([] { build_canonical_LA(catalog::differential_exterior(), 2, 1); }) == "missing_bar_unit");
  CHECK(error_kind([] { build_canonical_LA(catalog::field(), 1, 1); }) == "invalid_block_sizes");
}

TEST_CASE("condition failures track model failures", "[models]") {
  // M2 with a nonzero form but phi = 0: the form identities fail and so does
  // the model.
  CoordinateDataA nophi = io::load_model_a(fixture("model_a_M2_nophi.bundle"));
  ConditionReport rep = check_thm41_conditions(nophi);
  CHECK_FALSE(rep.passed);
  CHECK_FALSE(rep.at("id_4_14").passed);
  CHECK(rep.at("associativity").passed);
  CHECK_FALSE(check_leibniz(build_A_graded_model(nophi)).passed);

  std::mt19937 rng(7);
  CoordinateDataA base = build_canonical_LA(catalog::matrix_superalgebra(2, 0), 2, 1).data;
  for (int t = 0; t < 12; ++t) {
    Mutation m = mutate(base, rng);
    INFO(m.target << " " << m.i << " " << m.j << " " << m.k);
    MutationVerdict v = judge(m.data);
    CHECK(v.model_leibniz == v.conditions);
  }
}

TEST_CASE("validation of coordinate data", "[models]") {
  CoordinateDataA ok = make_coordinate_data(2, 1, catalog::truncated_polynomial(2), abelian({"e"}));
  validate(ok);

  CoordinateDataA bad = ok;
  bad.p = 1;
  CHECK(error_kind([&] { validate(bad); }) == "invalid_block_sizes");
  CHECK(error_kind([] { validate(make_coordinate_data(2, 1, catalog::differential_exterior(), zero_leibniz())); }) ==
        "missing_bar_unit");
  bad = ok;
  bad.phi = BilinearProduct(2, 2, 2);
  CHECK(error_kind([&] { validate(bad); }) == "dimension_mismatch");
  bad = ok;
  bad.phi.add(0, 0, 1, Scalar(1));
  CHECK(error_kind([&] { validate(bad); }) == "unit_not_annihilated");

  CoordinateDataA odd = make_coordinate_data(2, 1, catalog::exterior(1), abelian({"e"}));
  odd.form.add(0, 1, 0, Scalar(1));
  CHECK(error_kind([&] { validate(odd); }) == "inhomogeneous_map");
}

TEST_CASE("kappa models", "[models]") {
  CoordinateDataK base = io::load_model_kappa(fixture("kappa_Lambda1.bundle"));
  CHECK(check_lemma51_conditions(base).passed);
  LeibnizSuperalgebra m = build_kappa_model(base);
  CHECK(m.dim() == 16);
  CHECK(check_leibniz(m).passed);

  for (const char* which : {"i", "ii", "iii"}) {
    INFO(which);
    CoordinateDataK d = io::load_model_kappa(fixture(std::string("kappa_viol_") + which + ".bundle"));
    ConditionReport rep = check_lemma51_conditions(d);
    CHECK_FALSE(rep.passed);
    for (const auto& [name, r] : rep.conditions) CHECK(r.passed == (name != which));
  }

  CoordinateDataK central = io::load_model_kappa(fixture("kappa_central.bundle"));
  CHECK(check_lemma51_conditions(central).passed);
  LeibnizSuperalgebra cm = build_kappa_model(central);
  CHECK(check_leibniz(cm).passed);
  Subspace z = centre(cm);
  CHECK(z.dim() == 1);
  CHECK(z.contains(SparseVector::unit(cm.dim(), cm.dim() - 1)));

  SpecialLinear g(2, 1);
  CoordinateDataK k = make_kappa_data(g.algebra(), BilinearProduct(g.dim(), g.dim(), 1), catalog::exterior(1),
                                      zero_leibniz(), false);
  CHECK(error_kind([&] { validate(k); }) == "kappa_degenerate");
  k.kappa = supertrace_form(g);
  validate(k);
  k.kappa.add(0, 0, 0, Scalar(1));
  CHECK(error_kind([&] { validate(k); }) != "");
  k.g = build_gl(2, 1, catalog::differential_upper_triangular()).algebra;
  k.kappa = BilinearProduct(k.g.dim(), k.g.dim(), 1);
  CHECK(error_kind([&] { validate(k); }) == "g_not_lie");
}

TEST_CASE("extract_coordinates round trip", "[models]") {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}})
    for (const auto& a : coordinate_catalog()) {
      INFO(a.name() << " " << p << "," << q);
      CanonicalModel cm = build_canonical_LA(a, p, q);
      ModelGrading mg = model_grading(cm.model, p, q, a);
      CoordinateDataA back = extract_coordinates(cm.model, mg.g, mg.h);
      CHECK(same_data(back, cm.data));
    }
  // sl(2,1,K) graded by itself: A = K, D = 0
  SpecialLinear g(2, 1);
  CoordinateDataA self = extract_coordinates(g.algebra(), Subspace::full(g.dim()),
                                             g.cartan());
  CHECK(self.A.dim() == 1);
  CHECK(self.D.dim() == 0);
}
