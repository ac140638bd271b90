#pragma once

#include "superleib/sparse_vector.hpp"
#include "superleib/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superleib {

/// Element of Z/2.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr int bit(Parity p) { return static_cast<int>(p); }
/// (-1)^{|a||b|}
constexpr int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
constexpr Parity parity_of(int v) { return (v & 1) ? Parity::odd : Parity::even; }

/// Finite-dimensional Z/2-graded space with a homogeneous ordered basis.
struct SuperSpace {
  std::string name;
  std::vector<Parity> parities;
  std::vector<std::string> labels;

  SuperSpace() = default;
  SuperSpace(std::string name, std::vector<Parity> parities, std::vector<std::string> labels);

  std::size_t dim() const noexcept { return parities.size(); }
  Parity parity(std::size_t i) const { return parities.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Parity of `v` when all its nonzero coefficients sit on one parity;
  /// nullopt for inhomogeneous vectors. The zero vector counts as even.
  std::optional<Parity> parity_of(const SparseVector& v) const;
};

/// True when every RREF row of `s` is parity-homogeneous, i.e. `s` is a
/// graded subspace.
bool is_graded_subspace(const SuperSpace& space, const Subspace& s);

}  // namespace superleib
