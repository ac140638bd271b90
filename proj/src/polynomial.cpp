#include "superleib/polynomial.hpp"

#include <algorithm>
#include <set>

namespace superleib {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree, const Scalar& coeff) {
  std::vector<Scalar> c(degree + 1);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Scalar(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  std::vector<Scalar> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Scalar mag = abs(c);
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (k == 0 || mag != 1) out += to_string(mag);
    if (k > 0) out += (k == 0 || mag != 1 ? "*" : "") + var;
    if (k > 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(mpz_class(p), e);
  }
  // Remaining cofactor is prime when it is below 10^12, and treated as one
  // opaque factor otherwise.
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Integer coefficients c_0..c_n; evaluates sum c_i num^i den^(n-i).
mpz_class homogeneous_eval(const std::vector<mpz_class>& c, const mpz_class& num, const mpz_class& den) {
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * num + c[i] * den_pow;
    den_pow *= den;
  }
  return acc;
}

// Divide integer polynomial by (den*x - num); exact when num/den is a root.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& c, const mpz_class& num, const mpz_class& den) {
  // Work over Q then rescale to a primitive integer polynomial.
  std::size_t n = c.size() - 1;
  std::vector<Scalar> q(n);
  Scalar r(num, den);
  r.canonicalize();
  Scalar carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    carry = carry * r + Scalar(c[i + 1]);
    q[i] = carry;
  }
  mpz_class lcm_den = 1;
  for (const auto& x : q) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out(n);
  mpz_class g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar scaled = q[i] * Scalar(lcm_den);
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("zero_polynomial", "rational_roots of the zero polynomial");
  // Primitive integer polynomial with the same roots.
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> c;
  for (const auto& x : p.coeffs()) c.push_back(Scalar(x * Scalar(lcm_den)).get_num());

  std::vector<RationalRoot> roots;
  std::size_t zero_mult = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({Scalar(0), zero_mult});

  while (c.size() > 1) {
    bool found = false;
    auto nums = positive_divisors(c.front());
    auto dens = positive_divisors(c.back());
    std::set<Scalar> candidates;
    for (const auto& d : dens)
      for (const auto& n : nums) {
        Scalar r(n, d);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(-r);
      }
    for (const auto& r : candidates) {
      if (homogeneous_eval(c, r.get_num(), r.get_den()) != 0) continue;
      std::size_t mult = 0;
      while (c.size() > 1 && homogeneous_eval(c, r.get_num(), r.get_den()) == 0) {
        c = deflate(c, r.get_num(), r.get_den());
        ++mult;
      }
      roots.push_back({r, mult});
      found = true;
      break;  // coefficients changed; recompute a smaller candidate set
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return roots;
}

}  // namespace superleib
