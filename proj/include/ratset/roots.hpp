#pragma once

#include <utility>
#include <vector>

#include "ratset/bpoly.hpp"

namespace ratset {

/// Resultant with respect to y; a univariate polynomial in x.
template <class F>
UPoly<F> resultant_y(const BPoly<F>& f, const BPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) fail(errc::invalid_input, "resultant of zero polynomial");
  F zero = f.terms().begin()->second.zero_like();
  F one = zero.one_like();
  auto fc = f.y_coeffs(zero), gc = g.y_coeffs(zero);
  int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
  UPoly<F> uone = UPoly<F>::constant(one);
  if (m == 0 && n == 0) return uone;
  auto upow = [](UPoly<F> base, int e) {
    UPoly<F> r = UPoly<F>::constant(base.is_zero() ? base.lc() : base.lc().one_like());
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };
  if (m == 0) return upow(fc[0], n);
  if (n == 0) return upow(gc[0], m);
  size_t sz = static_cast<size_t>(m + n);
  std::vector<std::vector<UPoly<F>>> mat(sz, std::vector<UPoly<F>>(sz, UPoly<F>()));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) mat[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = fc[static_cast<size_t>(m - i)];
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) mat[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = gc[static_cast<size_t>(n - i)];
  return det_bareiss<UPoly<F>>(std::move(mat), uone, [](const UPoly<F>& a, const UPoly<F>& b) {
    return exact_divide(a, b);
  });
}

/// All common zeros in Q^2 of a finite system of bivariate polynomials over Q.
/// Throws locus_not_finite when the common zero locus cannot be confined.
std::vector<std::pair<Rat, Rat>> common_rational_zeros(std::vector<BPoly<Rat>> polys);

/// All roots of p that lie in Q(sqrt(k)), where k is the radicand of p's
/// coefficients. Complete for any degree at desk scale.
std::vector<QF> qf_roots(const UPoly<QF>& p);

} // namespace ratset
