#include "superleib/checks.hpp"

#include "tuple_loop.hpp"

namespace superleib {

using detail::run_tuples;
using detail::Sink;

void ViolationReport::absorb(const ViolationReport& other, std::size_t max_violations) {
  checked_count += other.checked_count;
  violation_count += other.violation_count;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  std::sort(violations.begin(), violations.end());
  if (violations.size() > max_violations) violations.resize(max_violations);
  passed = violation_count == 0;
}

ViolationReport check_graded(const std::vector<Parity>& left, const std::vector<Parity>& right,
                             const std::vector<Parity>& out, const BilinearProduct& product,
                             const CheckOptions& opts) {
  if (left.size() != product.left_dim() || right.size() != product.right_dim() || out.size() != product.out_dim())
    throw Error("dimension_mismatch", "check_graded: parity lists do not match product dimensions");
  return run_tuples("graded", left.size(), opts, [&](std::size_t i, Sink& sink) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      sink.checked();
      const SparseVector& v = product.get(i, j);
      Parity want = left[i] + right[j];
      SparseVector good(v.dim());
      for (const auto& [k, c] : v)
        if (out[k] == want) good.set(k, c);
      if (good.nnz() != v.nnz()) sink.violation({{i, j}, v, good});
    }
  });
}

ViolationReport check_graded(const SuperSpace& space, const BilinearProduct& product, const CheckOptions& opts) {
  return check_graded(space.parities, space.parities, space.parities, product, opts);
}

ViolationReport check_graded(const LeibnizSuperalgebra& l, const CheckOptions& opts) {
  return check_graded(l.space, l.bracket, opts);
}

ViolationReport check_graded(const SuperDialgebra& d, const CheckOptions& opts) {
  const auto& p = d.space.parities;
  return run_tuples("graded", 2 * d.dim(), opts, [&](std::size_t o, Sink& sink) {
    const BilinearProduct& prod = o < d.dim() ? d.left : d.right;
    std::size_t which = o < d.dim() ? 0 : 1;
    std::size_t i = o % d.dim();
    for (std::size_t j = 0; j < d.dim(); ++j) {
      sink.checked();
      const SparseVector& v = prod.get(i, j);
      SparseVector good(v.dim());
      for (const auto& [k, c] : v)
        if (p[k] == p[i] + p[j]) good.set(k, c);
      if (good.nnz() != v.nnz()) sink.violation({{which, i, j}, v, good});
    }
  });
}

ViolationReport check_ass(const SuperDialgebra& d, const CheckOptions& opts) {
  const std::size_t n = d.dim();
  const auto& L = d.left;   // ⊣
  const auto& R = d.right;  // ⊢
  return run_tuples("ass", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b) {
      const SparseVector& ab_l = L.get(a, b);
      const SparseVector& ab_r = R.get(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const SparseVector& bc_l = L.get(b, c);
        const SparseVector& bc_r = R.get(b, c);
        SparseVector a_l_bc_l = L.left_apply(a, bc_l);   // a⊣(b⊣c)
        SparseVector ab_l_l_c = L.right_apply(ab_l, c);  // (a⊣b)⊣c
        SparseVector a_l_bc_r = L.left_apply(a, bc_r);   // a⊣(b⊢c)
        SparseVector ab_r_l_c = L.right_apply(ab_r, c);  // (a⊢b)⊣c
        SparseVector a_r_bc_l = R.left_apply(a, bc_l);   // a⊢(b⊣c)
        SparseVector ab_r_r_c = R.right_apply(ab_r, c);  // (a⊢b)⊢c
        SparseVector a_r_bc_r = R.left_apply(a, bc_r);   // a⊢(b⊢c)
        SparseVector ab_l_r_c = R.right_apply(ab_l, c);  // (a⊣b)⊢c
        sink.checked(5);
        if (!(a_l_bc_l == ab_l_l_c)) sink.violation({{1, a, b, c}, a_l_bc_l, ab_l_l_c});
        if (!(ab_l_l_c == a_l_bc_r)) sink.violation({{2, a, b, c}, ab_l_l_c, a_l_bc_r});
        if (!(ab_r_l_c == a_r_bc_l)) sink.violation({{3, a, b, c}, ab_r_l_c, a_r_bc_l});
        if (!(ab_r_r_c == a_r_bc_r)) sink.violation({{4, a, b, c}, ab_r_r_c, a_r_bc_r});
        if (!(a_r_bc_r == ab_l_r_c)) sink.violation({{5, a, b, c}, a_r_bc_r, ab_l_r_c});
      }
    }
  });
}

ViolationReport check_bar_unit(const SuperDialgebra& d, const CheckOptions& opts) {
  if (!d.bar_unit) throw Error("missing_bar_unit", "dialgebra '" + d.name() + "' has no bar-unit");
  const SparseVector& one = *d.bar_unit;
  const std::size_t n = d.dim();
  return run_tuples("bar_unit", n, opts, [&](std::size_t a, Sink& sink) {
    SparseVector ea = SparseVector::unit(n, a);
    SparseVector left = d.right.right_apply(one, a);  // 1 ⊢ a
    SparseVector right = d.left.left_apply(a, one);   // a ⊣ 1
    sink.checked(2);
    if (!(left == ea)) sink.violation({{a, 0}, left, ea});
    if (!(right == ea)) sink.violation({{a, 1}, right, ea});
  });
}

ViolationReport check_leibniz(const LeibnizSuperalgebra& l, const CheckOptions& opts) {
  const std::size_t n = l.dim();
  const auto& B = l.bracket;
  const auto& p = l.space.parities;
  return run_tuples("leibniz", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b) {
      const SparseVector& ab = B.get(a, b);
      const int s = koszul(p[a], p[b]);
      for (std::size_t c = 0; c < n; ++c) {
        sink.checked();
        SparseVector lhs = B.right_apply(ab, c);
        SparseVector rhs = B.left_apply(a, B.get(b, c));
        rhs.add_scaled(B.left_apply(b, B.get(a, c)), Scalar(-s));
        if (!(lhs == rhs)) sink.violation({{a, b, c}, std::move(lhs), std::move(rhs)});
      }
    }
  });
}

ViolationReport check_right_leibniz(const LeibnizSuperalgebra& l, const CheckOptions& opts) {
  const std::size_t n = l.dim();
  const auto& B = l.bracket;
  const auto& p = l.space.parities;
  return run_tuples("right_leibniz", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        sink.checked();
        const int s = koszul(p[b], p[c]);
        SparseVector lhs = B.left_apply(a, B.get(b, c));
        SparseVector rhs = B.right_apply(B.get(a, b), c);
        rhs.add_scaled(B.right_apply(B.get(a, c), b), Scalar(-s));
        if (!(lhs == rhs)) sink.violation({{a, b, c}, std::move(lhs), std::move(rhs)});
      }
    }
  });
}

ViolationReport is_lie(const LeibnizSuperalgebra& l, const CheckOptions& opts) {
  const std::size_t n = l.dim();
  const auto& B = l.bracket;
  const auto& p = l.space.parities;
  return run_tuples("lie", n, opts, [&](std::size_t a, Sink& sink) {
    for (std::size_t b = 0; b < n; ++b) {
      sink.checked();
      const SparseVector& lhs = B.get(a, b);
      SparseVector rhs = B.get(b, a) * Scalar(-koszul(p[a], p[b]));
      if (!(lhs == rhs)) sink.violation({{a, b}, lhs, std::move(rhs)});
    }
  });
}

ViolationReport check_superderivation(const LeibnizSuperalgebra& l, const LinearMap& mu, Parity s,
                                      const CheckOptions& opts) {
  const std::size_t n = l.dim();
  if (mu.domain_dim() != n || mu.codomain_dim() != n)
    throw Error("dimension_mismatch", "superderivation map does not act on the algebra");
  const auto& B = l.bracket;
  const auto& p = l.space.parities;
  return run_tuples("superderivation", n, opts, [&](std::size_t a, Sink& sink) {
    sink.checked();
    const SparseVector& img = mu.column(a);
    SparseVector good(n);
    for (const auto& [k, c] : img)
      if (p[k] == p[a] + s) good.set(k, c);
    if (good.nnz() != img.nnz()) sink.violation({{0, a}, img, std::move(good)});
    for (std::size_t b = 0; b < n; ++b) {
      sink.checked();
      SparseVector lhs = mu.apply(B.get(a, b));
      SparseVector rhs = B.right_apply(mu.column(a), b);
      rhs.add_scaled(B.left_apply(a, mu.column(b)), Scalar(koszul(s, p[a])));
      if (!(lhs == rhs)) sink.violation({{1, a, b}, std::move(lhs), std::move(rhs)});
    }
  });
}

}  // namespace superleib
