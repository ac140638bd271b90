#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superleib {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every constructor path goes through
/// canonicalize(), which parse_scalar() and make_scalar() guarantee.
using Scalar = mpq_class;

/// Base class for every error raised by the library. `kind` is a stable
/// machine-readable tag; what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

Scalar make_scalar(long num, long den = 1);

/// Parses "p/q" or an integer string. Rejects zero denominators, empty
/// strings, whitespace and anything mpz would not accept as base-10.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace superleib
