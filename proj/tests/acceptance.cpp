// One line per acceptance criterion; nonzero exit when any fails.

#include "common.hpp"
#include "golden.hpp"
#include "mutations.hpp"

#include "superleib/checks.hpp"
#include "superleib/io.hpp"
#include "superleib/weights.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace superleib;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

void axioms(Outcome& out) {
  std::vector<SuperDialgebra> items = {catalog::matrix_superalgebra(2, 0), catalog::matrix_superalgebra(3, 0),
                                       catalog::exterior(2), catalog::exterior(1), catalog::field(),
                                       catalog::matrix_superalgebra(1, 1), catalog::upper_triangular(2),
                                       catalog::truncated_polynomial(3)};
  const std::size_t plain = items.size();
  SuperDialgebra diff = catalog::differential_exterior();
  items.push_back(diff);
  for (std::size_t i = 0; i < plain; ++i)
    if (items[i].dim() <= 9) items.push_back(tensor_dialgebras(items[i], diff));
  double worst = 0;
  for (const auto& d : items) {
    auto t = Clock::now();
    bool ok = check_ass(d).passed;
    double s = seconds_since(t);
    worst = std::max(worst, s);
    out.require(ok, d.name());
    out.require(s < 1.0, d.name() + " slow");
  }
  out.note << items.size() << " dialgebras, slowest " << worst << " s";
}

void functors(Outcome& out) {
  std::size_t n = 0;
  for (const auto& d : dialgebra_catalog()) {
    if (!check_ass(d).passed) continue;
    ++n;
    out.require(check_leibniz(to_leibniz(d)).passed, d.name() + " left");
    out.require(check_right_leibniz(to_right_leibniz(d)).passed, d.name() + " right");
    if (d.left == d.right) out.require(is_lie(to_leibniz(d)).passed, d.name() + " lie");
  }
  out.note << n << " catalog dialgebras";
}

void matrix_suite(Outcome& out) {
  auto t = Clock::now();
  std::size_t largest = 0;
  for (const auto& d : {catalog::field(), catalog::exterior(2), catalog::differential_exterior()})
    for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
      LeibnizSuperalgebra gl = build_gl(m, n, d).algebra;
      std::string tag = "gl(" + std::to_string(m) + "," + std::to_string(n) + "," + d.name() + ")";
      largest = std::max(largest, gl.dim());
      out.require(check_graded(gl).passed, tag + " graded");
      out.require(check_leibniz(gl).passed, tag + " leibniz");
      if (d.dim() == 1) out.require(is_lie(gl).passed, tag + " lie");
    }
  double s = seconds_since(t);
  out.require(s < 30.0, "over 30 s");
  out.note << "largest dim " << largest << ", " << s << " s";
}

void numerology(Outcome& out) {
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    SpecialLinear g(p, q);
    WeightDecomposition d = weight_decomposition(g.algebra(), g.cartan());
    const std::size_t n = p + q;
    out.require(d.complete, tag + " incomplete");
    out.require(d.nonzero_count() == n * n - n, tag + " root count");
    for (const auto& [w, s] : d.weights)
      if (!is_zero_weight(w)) out.require(s.dim() == 1, tag + " root dim");
    out.require(d.zero_space().dim() == n - 1, tag + " zero space");

    MatrixAlgebra gl = build_gl(p, q, catalog::field());
    Subspace span(gl.algebra.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) span.insert(g.matrix(i));
    GradingCertificate c = check_delta_graded(gl.algebra, span, cartan_of_sl(p, q));
    out.require(!c.is_graded && c.failed(3) && !c.failed(1) && !c.failed(2), tag + " gl not exactly condition 3");
  }
  std::size_t n = 0;
  for (const auto& d : unital_catalog())
    for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}}) {
      if (p == 3 && d.dim() > 4) continue;
      Graded s = graded_sl(p, q, d);
      GradingCertificate c = check_delta_graded(s.sl.algebra, s.g, s.h);
      std::string tag = "sl(" + std::to_string(p) + "," + std::to_string(q) + "," + d.name() + ")";
      out.require(c.is_graded, tag);
      for (const auto& [w, sp] : c.decomposition.weights)
        if (!is_zero_weight(w)) out.require(sp.dim() == d.dim(), tag + " root dim");
      ++n;
    }
  out.note << n << " sl(p,q,D) certificates";
}

void steinberg(Outcome& out) {
  std::size_t n = 0;
  for (const auto& d : dialgebra_catalog())
    for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}}) {
      if (p == 3 && d.dim() > 4) continue;
      std::string tag = d.name() + " " + std::to_string(p) + "," + std::to_string(q);
      MatrixAlgebra gl = build_gl(p, q, d);
      SteinbergMap v = matrix_unit_map(gl);
      const LeibnizSuperalgebra* target = &gl.algebra;
      Restriction sl;
      if (d.bar_unit) {
        sl = build_sl(gl);
        for (auto& [key, x] : v) x = sl.coordinates(x);
        target = &sl.algebra;
      }
      out.require(check_steinberg_relations(*target, v, p, q, d).passed, tag);
      SteinbergMap neg = v;
      neg.begin()->second *= Scalar(-1);
      out.require(check_steinberg_relations(*target, neg, p, q, d).violation_count >= 1, tag + " negation");
      ++n;
    }
  out.note << n << " instances (non-unital D checked in gl)";
}

void theorem(Outcome& out) {
  for (const auto& a : {catalog::unital_differential_exterior(), catalog::exterior(2)}) {
    CanonicalModel cm = build_canonical_LA(a, 2, 1);
    out.require(check_thm41_conditions(cm.data).passed, a.name() + " conditions");
    out.require(check_leibniz(cm.model).passed, a.name() + " leibniz");
    ModelGrading mg = model_grading(cm.model, 2, 1, a);
    out.require(check_delta_graded(cm.model, mg.g, mg.h).is_graded, a.name() + " graded");
  }
  std::mt19937 rng(20261018);
  std::size_t total = 0, agree = 0, both_pass = 0;
  std::size_t bases = 0;
  for (const auto& a : coordinate_catalog()) {
    if (a.dim() == 1) continue;  // every constant of K touches the unit
    ++bases;
    CoordinateDataA base = build_canonical_LA(a, 2, 1).data;
    MutationVerdict v0 = judge(base);
    total += 1;
    agree += v0.model_leibniz == v0.conditions;
    both_pass += v0.conditions;
    for (int t = 0; t < 12; ++t) {
      Mutation m = mutate(base, rng);
      MutationVerdict v = judge(m.data);
      ++total;
      if (v.model_leibniz == v.conditions) ++agree;
      else out.require(false, a.name() + " " + m.target + " mismatch");
      both_pass += v.conditions;
    }
  }
  out.require(total - bases >= 50, "fewer than 50 mutations");
  out.note << agree << "/" << total << " verdicts agree (" << both_pass << " pass both)";
}

void kappa(Outcome& out) {
  CoordinateDataK base = io::load_model_kappa(fixture("kappa_Lambda1.bundle"));
  out.require(check_leibniz(build_kappa_model(base)).passed, "D = 0 model");
  for (std::string which : {"i", "ii", "iii"}) {
    ConditionReport rep = check_lemma51_conditions(io::load_model_kappa(fixture("kappa_viol_" + which + ".bundle")));
    for (const auto& [name, r] : rep.conditions) out.require(r.passed == (name != which), which + " flags " + name);
  }
  CoordinateDataK central = io::load_model_kappa(fixture("kappa_central.bundle"));
  LeibnizSuperalgebra m = build_kappa_model(central);
  Subspace z = centre(m);
  const std::size_t off = m.dim() - central.D.dim();
  for (std::size_t k = 0; k < central.D.dim(); ++k)
    out.require(z.contains(SparseVector::unit(m.dim(), off + k)), "centre misses D");
  out.note << "centre dim " << z.dim();
}

void round_trip(Outcome& out) {
  std::size_t n = 0;
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}})
    for (const auto& a : coordinate_catalog()) {
      CanonicalModel cm = build_canonical_LA(a, p, q);
      ModelGrading mg = model_grading(cm.model, p, q, a);
      out.require(same_data(extract_coordinates(cm.model, mg.g, mg.h), cm.data), a.name());
      ++n;
    }
  CoordinateDataA bundle = io::load_model_a(fixture("model_a_Lambda2.bundle"));
  LeibnizSuperalgebra m = build_A_graded_model(bundle);
  ModelGrading mg = model_grading(m, bundle.p, bundle.q, bundle.A);
  out.require(same_data(extract_coordinates(m, mg.g, mg.h), bundle), "model_a_Lambda2 bundle");
  out.note << n + 1 << " data sets";
}

void quotients(Outcome& out) {
  std::size_t n = 0;
  for (const auto& d : dialgebra_catalog()) {
    LeibnizSuperalgebra q = lie_quotient(to_leibniz(d));
    out.require(is_lie(q).passed && check_leibniz(q).passed, d.name() + " Lie quotient");
    SuperDialgebra s = associative_quotient(d);
    out.require(s.left == s.right, d.name() + " associative quotient");
    ++n;
  }
  out.note << n << " catalog dialgebras";
}

void determinism(Outcome& out) {
  std::size_t ran = 0;
  for (const char* parallel : {"1", "8"})
    for (const auto& name : golden_mismatches(FIXTURES_DIR, parallel, &ran))
      out.require(false, name + " (parallel " + parallel + ")");
  out.note << ran << " golden commands";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"axiom suite", axioms},
      {"functor soundness", functors},
      {"matrix algebra suite", matrix_suite},
      {"root-system numerology", numerology},
      {"Steinberg relations", steinberg},
      {"condition/model equivalence", theorem},
      {"kappa models", kappa},
      {"round trip", round_trip},
      {"quotient functors", quotients},
      {"CLI determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.note.str() << " ["
              << static_cast<long>(seconds_since(t) * 1000) << " ms]" << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
