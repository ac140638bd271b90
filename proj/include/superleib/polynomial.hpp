#pragma once

#include "superleib/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superleib {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial monomial(std::size_t degree, const Scalar& coeff = Scalar(1));
  /// (x - root)
  static Polynomial linear(const Scalar& root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  Scalar evaluate(const Scalar& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(const std::string& var = "x") const;

private:
  void trim();
  std::vector<Scalar> coeffs_;
};

struct RationalRoot {
  Scalar value;
  std::size_t multiplicity = 0;
};

/// Every rational root of `p` with its multiplicity, ascending by value.
/// Candidates come from the rational-root theorem on the primitive integer
/// polynomial; integers are factored by trial division, so a leading or
/// constant coefficient carrying two or more prime factors above 10^6 may
/// hide roots (reported roots are always exact).
std::vector<RationalRoot> rational_roots(const Polynomial& p);

}  // namespace superleib
