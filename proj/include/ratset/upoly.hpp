#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ratset/quadfield.hpp"
#include "ratset/rational.hpp"

namespace ratset {

/// Dense univariate polynomial over an exact field F (Rat, QF or GQF).
/// Coefficient i is the coefficient of x^i; trailing zeros are never stored,
/// so the zero polynomial has an empty list and degree() == -1.
template <class F>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

  static UPoly constant(const F& v) { return UPoly(std::vector<F>{v}); }
  static UPoly monomial(const F& coeff, int deg) {
    if (coeff.is_zero()) return UPoly();
    std::vector<F> c(static_cast<size_t>(deg) + 1, coeff.zero_like());
    c.back() = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }

  const F& lc() const {
    if (is_zero()) fail(errc::invalid_input, "leading coefficient of zero polynomial");
    return c_.back();
  }

  F coeff_or(int i, const F& zero) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
  }

  UPoly operator-() const {
    std::vector<F> c = c_;
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<F> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    for (size_t i = 0; i < s.size(); ++i) c[i] += s[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    F zero = a.c_[0].zero_like();
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, zero);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }

  friend UPoly operator*(const UPoly& a, const F& s) {
    if (a.is_zero() || s.is_zero()) return UPoly();
    std::vector<F> c = a.c_;
    for (auto& v : c) v = v * s;
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const F& s, const UPoly& a) { return a * s; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Multiplies by x^n.
  UPoly shifted(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<F> c(c_.size() + static_cast<size_t>(n), c_[0].zero_like());
    for (size_t i = 0; i < c_.size(); ++i) c[i + static_cast<size_t>(n)] = c_[i];
    return UPoly(std::move(c));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<F> c(c_.size() - 1, c_[0].zero_like());
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(c));
  }

  template <class G>
  G eval(const G& x, const std::function<G(const F&)>& lift) const {
    G acc = x.zero_like();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + lift(c_[i]);
    return acc;
  }

  F eval(const F& x) const {
    return eval<F>(x, [](const F& c) { return c; });
  }

  /// Substitutes another polynomial for the variable (Horner).
  UPoly compose(const UPoly& g) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
  }

  template <class G>
  UPoly<G> map_coeffs(const std::function<G(const F&)>& fn) const {
    std::vector<G> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(fn(v));
    return UPoly<G>(std::move(c));
  }

  /// Field division with remainder; g must be nonzero.
  std::pair<UPoly, UPoly> divrem(const UPoly& g) const {
    if (g.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    if (is_zero() || degree() < g.degree()) return {UPoly(), *this};
    F zero = g.lc().zero_like();
    std::vector<F> q(static_cast<size_t>(degree() - g.degree()) + 1, zero);
    UPoly r = *this;
    while (!r.is_zero() && r.degree() >= g.degree()) {
      F f = r.lc() / g.lc();
      int sh = r.degree() - g.degree();
      q[static_cast<size_t>(sh)] = f;
      r = r - g.shifted(sh) * f;
    }
    return {UPoly(std::move(q)), r};
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * lc().inv();
  }

  /// Strips the common rational scalar of all coefficient components.
  UPoly primitive() const {
    if (is_zero()) return *this;
    std::vector<Rat> parts;
    for (const auto& c : c_) c.collect_parts(parts);
    Int g(0), l(1);
    for (const auto& p : parts) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.den().get_mpz_t());
    }
    if (g == 0) return *this;
    Rat scale(l, g);
    return *this * scale;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].str() + ")";
      if (i >= 1) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Pseudo-remainder: the remainder of lc(g)^e * f under division by g, with no
/// coefficient division performed.
template <class F>
UPoly<F> pseudo_rem(const UPoly<F>& f, const UPoly<F>& g) {
  if (g.is_zero()) fail(errc::division_by_zero, "pseudo-remainder by zero");
  UPoly<F> r = f;
  const F& d = g.lc();
  while (!r.is_zero() && r.degree() >= g.degree()) {
    UPoly<F> t = g.shifted(r.degree() - g.degree()) * r.lc();
    r = r * d - t;
  }
  return r;
}

/// Monic gcd via a fraction-free remainder sequence (pseudo-remainders with
/// rational-content stripping to control coefficient growth).
template <class F>
UPoly<F> poly_gcd(const UPoly<F>& f, const UPoly<F>& g) {
  if (f.is_zero() && g.is_zero()) return UPoly<F>();
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  UPoly<F> a = f.primitive(), b = g.primitive();
  while (!b.is_zero()) {
    UPoly<F> r = pseudo_rem(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient; throws remainder_nonzero (carrying the remainder) otherwise.
template <class F>
UPoly<F> exact_divide(const UPoly<F>& f, const UPoly<F>& g) {
  if (g.is_zero()) fail(errc::invalid_input, "exact division by zero polynomial");
  auto [q, r] = f.divrem(g);
  if (!r.is_zero())
    fail(errc::remainder_nonzero, "division not exact, remainder " + r.str());
  return q;
}

/// Product of the distinct irreducible factors, monic: f / gcd(f, f').
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  if (f.is_zero()) fail(errc::invalid_input, "squarefree part of zero polynomial");
  if (f.degree() == 0) return UPoly<F>::constant(f.lc().one_like());
  return exact_divide(f, poly_gcd(f, f.derivative())).monic();
}

/// Fraction-free determinant (Bareiss). Works over any integral domain given
/// an exact-division hook; over a field the divisions are plain divisions.
template <class R>
R det_bareiss(std::vector<std::vector<R>> m, const R& one,
              const std::function<R(const R&, const R&)>& exact_div) {
  size_t n = m.size();
  if (n == 0) return one;
  R prev = one;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k;
      for (size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv == k) {
        bool all_zero = true;
        for (size_t i = k; i < n && all_zero; ++i) all_zero = m[i][k].is_zero();
        if (all_zero) return one - one; // singular: zero column
      }
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = one - one;
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return sign < 0 ? (one - one) - det : det;
}

/// Sylvester-matrix resultant with the convention
/// Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
template <class F>
F resultant(const UPoly<F>& f, const UPoly<F>& g) {
  if (f.is_zero() || g.is_zero()) fail(errc::invalid_input, "resultant of zero polynomial");
  int m = f.degree(), n = g.degree();
  F one = f.lc().one_like(), zero = f.lc().zero_like();
  if (m == 0 && n == 0) return one;
  if (m == 0) {
    F r = one;
    for (int i = 0; i < n; ++i) r = r * f.lc();
    return r;
  }
  if (n == 0) {
    F r = one;
    for (int i = 0; i < m; ++i) r = r * g.lc();
    return r;
  }
  size_t sz = static_cast<size_t>(m + n);
  std::vector<std::vector<F>> mat(sz, std::vector<F>(sz, zero));
  for (int row = 0; row < n; ++row)
    for (int i = 0; i <= m; ++i) mat[row][row + i] = f.coeff_or(m - i, zero);
  for (int row = 0; row < m; ++row)
    for (int i = 0; i <= n; ++i) mat[n + row][row + i] = g.coeff_or(n - i, zero);
  return det_bareiss<F>(std::move(mat), one,
                        [](const F& a, const F& b) { return a / b; });
}

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); zero iff f has a multiple root.
template <class F>
F discriminant(const UPoly<F>& f) {
  if (f.is_zero() || f.degree() < 1)
    fail(errc::invalid_input, "discriminant requires degree >= 1");
  int d = f.degree();
  F r = resultant(f, f.derivative()) / f.lc();
  return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

/// Lagrange interpolation through distinct nodes.
template <class F>
UPoly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  if (xs.size() != ys.size() || xs.empty()) fail(errc::invalid_input, "bad interpolation data");
  F one = xs[0].one_like();
  UPoly<F> acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UPoly<F> li = UPoly<F>::constant(one);
    F denom = one;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      li = li * UPoly<F>(std::vector<F>{-xs[j], one});
      denom = denom * (xs[i] - xs[j]);
    }
    acc = acc + li * (ys[i] / denom);
  }
  return acc;
}

/// Exactly the rational roots of a nonzero polynomial over Q, each once.
std::vector<Rat> rational_roots(const UPoly<Rat>& f);

} // namespace ratset
