#pragma once

#include "superleib/catalog.hpp"
#include "superleib/constructions.hpp"
#include "superleib/matrix_graded.hpp"
#include "superleib/models.hpp"

#include <vector>

namespace testing_support {

using namespace superleib;

inline std::vector<SuperDialgebra> associative_catalog() {
  return {catalog::field(),
          catalog::exterior(1),
          catalog::exterior(2),
          catalog::truncated_polynomial(3),
          catalog::matrix_superalgebra(2, 0),
          catalog::matrix_superalgebra(3, 0),
          catalog::matrix_superalgebra(1, 1),
          catalog::upper_triangular(2)};
}

/// Every catalog dialgebra: associative ones, differential ones, the unital
/// hull, a split extension and a tensor product.
inline std::vector<SuperDialgebra> dialgebra_catalog() {
  auto out = associative_catalog();
  out.push_back(catalog::differential_exterior());
  out.push_back(catalog::differential_upper_triangular());
  out.push_back(catalog::unital_differential_exterior());
  out.push_back(catalog::split_extension(catalog::exterior(2)));
  out.push_back(tensor_dialgebras(catalog::matrix_superalgebra(2, 0), catalog::differential_exterior()));
  return out;
}

inline std::vector<SuperDialgebra> unital_catalog() {
  std::vector<SuperDialgebra> out;
  for (auto& d : dialgebra_catalog())
    if (d.bar_unit) out.push_back(std::move(d));
  return out;
}

/// sl(p, q, D) with the grading subalgebra sl(p, q, K)⊗1 and its Cartan
/// basis, all in sl(p, q, D) coordinates.
struct Graded {
  MatrixAlgebra gl;
  Restriction sl;
  Subspace g;
  std::vector<SparseVector> h;
};

inline Graded graded_sl(std::size_t p, std::size_t q, const SuperDialgebra& d) {
  MatrixAlgebra gl = build_gl(p, q, d);
  Restriction sl = build_sl(gl);
  SpecialLinear k(p, q);
  Subspace g(sl.algebra.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) g.insert(sl.coordinates(gl.lift(k.matrix(i))));
  std::vector<SparseVector> h;
  for (const auto& x : cartan_of_sl(p, q)) h.push_back(sl.coordinates(gl.lift(x)));
  return {std::move(gl), std::move(sl), std::move(g), std::move(h)};
}

/// g⊗1 and the Cartan basis of a model built on sl(p, q, K) ⊗ A.
struct ModelGrading {
  Subspace g;
  std::vector<SparseVector> h;
};

inline ModelGrading model_grading(const LeibnizSuperalgebra& model, std::size_t p, std::size_t q,
                                  const SuperDialgebra& a) {
  SpecialLinear k(p, q);
  const std::size_t na = a.dim();
  auto lift = [&](const SparseVector& x) {
    SparseVector v(model.dim());
    for (const auto& [i, c] : x)
      for (const auto& [j, u] : *a.bar_unit) v.add(i * na + j, c * u);
    return v;
  };
  ModelGrading out{Subspace(model.dim()), {}};
  for (std::size_t i = 0; i < k.dim(); ++i) out.g.insert(lift(SparseVector::unit(k.dim(), i)));
  for (const auto& x : k.cartan()) out.h.push_back(lift(x));
  return out;
}

inline bool same_data(const CoordinateDataA& x, const CoordinateDataA& y) {
  return x.p == y.p && x.q == y.q && x.A.space.parities == y.A.space.parities && x.A.left == y.A.left &&
         x.A.right == y.A.right && x.A.bar_unit == y.A.bar_unit && x.D.space.parities == y.D.space.parities &&
         x.D.bracket == y.D.bracket && x.phi == y.phi && x.form == y.form && x.rho == y.rho;
}

inline std::vector<SuperDialgebra> coordinate_catalog() {
  return {catalog::field(),
          catalog::exterior(2),
          catalog::unital_differential_exterior(),
          catalog::matrix_superalgebra(1, 1),
          catalog::matrix_superalgebra(2, 0),
          catalog::upper_triangular(2)};
}

}  // namespace testing_support
