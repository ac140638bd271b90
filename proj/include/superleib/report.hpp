#pragma once

#include "superleib/sparse_vector.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace superleib {

struct Violation {
  std::vector<std::size_t> indices;
  SparseVector lhs;
  SparseVector rhs;

  friend bool operator<(const Violation& a, const Violation& b) { return a.indices < b.indices; }
};

/// Outcome of checking one identity over every basis tuple.
/// `violations` holds at most CheckOptions::max_violations entries (the
/// lexicographically smallest index tuples); `violation_count` is exact.
struct ViolationReport {
  std::string identity_name;
  std::vector<Violation> violations;
  std::size_t checked_count = 0;
  std::size_t violation_count = 0;
  bool passed = true;

  /// Folds another report's results into this one (used to combine
  /// sub-checks under one name).
  void absorb(const ViolationReport& other, std::size_t max_violations);
};

struct CheckOptions {
  std::size_t max_violations = 100;
  /// Worker threads for the tuple loops; 0 means all hardware threads.
  unsigned parallel = 0;
};

}  // namespace superleib
