#pragma once

// Randomized single-constant perturbations of model data.

#include "superleib/checks.hpp"
#include "superleib/models.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing_support {

using namespace superleib;

struct Mutation {
  std::string target;  // left, right, phi or form
  std::size_t i = 0, j = 0, k = 0;
  CoordinateDataA data;
};

struct MutationVerdict {
  bool model_leibniz = false;
  bool conditions = false;
  std::string failed;  // names of failing conditions
};

/// Adds +1 to one parity-compatible structure constant. Draws that break the
/// bar-unit or make phi move the unit are redrawn.
inline Mutation mutate(const CoordinateDataA& base, std::mt19937& rng) {
  const SuperDialgebra& A = base.A;
  const std::size_t na = A.dim(), nd = base.D.dim();
  std::vector<std::string> targets = {"left", "right"};
  if (nd > 0) {
    targets.push_back("phi");
    targets.push_back("form");
  }
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto pa = [&](std::size_t x) { return A.space.parity(x); };
  auto pd = [&](std::size_t x) { return base.D.space.parity(x); };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Mutation m{targets[pick(targets.size())], 0, 0, 0, base};
    if (m.target == "left" || m.target == "right") {
      m.i = pick(na), m.j = pick(na), m.k = pick(na);
      if (pa(m.i) + pa(m.j) != pa(m.k)) continue;
      (m.target == "left" ? m.data.A.left : m.data.A.right).add(m.i, m.j, m.k, Scalar(1));
      CheckOptions one;
      one.max_violations = 1;
      if (!check_bar_unit(m.data.A, one).passed) continue;
    } else if (m.target == "phi") {
      m.i = pick(nd), m.j = pick(na), m.k = pick(na);
      if (pd(m.i) + pa(m.j) != pa(m.k)) continue;
      m.data.phi.add(m.i, m.j, m.k, Scalar(1));
      if (!m.data.phi.apply(SparseVector::unit(nd, m.i), *A.bar_unit).is_zero()) continue;
    } else {
      m.i = pick(na), m.j = pick(na), m.k = pick(nd);
      if (pa(m.i) + pa(m.j) != pd(m.k)) continue;
      m.data.form.add(m.i, m.j, m.k, Scalar(1));
    }
    return m;
  }
  throw std::runtime_error("no admissible mutation of " + A.name());
}

inline MutationVerdict judge(const CoordinateDataA& data, unsigned parallel = 0) {
  CheckOptions opts;
  opts.max_violations = 1;
  opts.parallel = parallel;
  MutationVerdict v;
  v.model_leibniz = check_leibniz(build_A_graded_model(data), opts).passed;
  ConditionReport rep = check_thm41_conditions(data, opts);
  v.conditions = rep.passed;
  for (const auto& [name, r] : rep.conditions)
    if (!r.passed) v.failed += (v.failed.empty() ? "" : ",") + name;
  return v;
}

}  // namespace testing_support
