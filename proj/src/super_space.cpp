#include "superleib/super_space.hpp"

#include <set>

namespace superleib {

SuperSpace::SuperSpace(std::string name_, std::vector<Parity> parities_, std::vector<std::string> labels_)
    : name(std::move(name_)), parities(std::move(parities_)), labels(std::move(labels_)) {
  if (parities.size() != labels.size())
    throw Error("invalid_space", "space '" + name + "': parity and label counts differ");
  if (parities.empty()) throw Error("invalid_space", "space '" + name + "' has dimension 0");
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

std::optional<Parity> SuperSpace::parity_of(const SparseVector& v) const {
  std::optional<Parity> p;
  for (const auto& [i, c] : v) {
    Parity q = parities.at(i);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even);
}

bool is_graded_subspace(const SuperSpace& space, const Subspace& s) {
  for (const auto& row : s.basis())
    if (!space.parity_of(row)) return false;
  return true;
}

}  // namespace superleib
