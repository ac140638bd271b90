#pragma once

#include "superleib/report.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace superleib::detail {

/// Per-worker collector. Keeps the `cap` lexicographically smallest
/// violations seen so far plus exact counts.
class Sink {
public:
  explicit Sink(std::size_t cap) : cap_(cap) {}

  void checked(std::size_t n = 1) { checked_ += n; }
  void violation(Violation v) {
    ++count_;
    if (cap_ == 0) return;
    kept_.push_back(std::move(v));
    if (kept_.size() >= 2 * cap_) shrink();
  }

  void shrink() {
    std::sort(kept_.begin(), kept_.end());
    if (kept_.size() > cap_) kept_.resize(cap_);
  }

  std::size_t cap_;
  std::size_t checked_ = 0;
  std::size_t count_ = 0;
  std::vector<Violation> kept_;
};

inline unsigned worker_count(unsigned requested, std::size_t work) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (work < n) n = static_cast<unsigned>(std::max<std::size_t>(work, 1));
  return n;
}

/// Runs body(outer, sink) for outer in [0, outer_count), split into
/// contiguous chunks over workers, and merges deterministically.
template <class Body>
ViolationReport run_tuples(std::string name, std::size_t outer_count, const CheckOptions& opts, Body&& body) {
  const unsigned workers = worker_count(opts.parallel, outer_count);
  std::vector<Sink> sinks(workers, Sink(opts.max_violations));
  auto run_range = [&](unsigned w) {
    std::size_t lo = outer_count * w / workers;
    std::size_t hi = outer_count * (w + 1) / workers;
    for (std::size_t o = lo; o < hi; ++o) body(o, sinks[w]);
  };
  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_range, w);
    for (auto& t : threads) t.join();
  }
  ViolationReport report;
  report.identity_name = std::move(name);
  for (auto& s : sinks) {
    report.checked_count += s.checked_;
    report.violation_count += s.count_;
    for (auto& v : s.kept_) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > opts.max_violations) report.violations.resize(opts.max_violations);
  report.passed = report.violation_count == 0;
  return report;
}

}  // namespace superleib::detail
