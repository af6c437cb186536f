#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ratset/upoly.hpp"

namespace ratset {

/// Sparse bivariate polynomial over an exact field; key (i, j) is x^i y^j.
/// Zero coefficients are never stored.
template <class F>
class BPoly {
public:
  using Key = std::pair<int, int>;

  BPoly() = default;

  static BPoly constant(const F& v) {
    BPoly p;
    p.add_term(0, 0, v);
    return p;
  }
  static BPoly var_x(const F& one) { return monomial(one, 1, 0); }
  static BPoly var_y(const F& one) { return monomial(one, 0, 1); }
  static BPoly monomial(const F& coeff, int i, int j) {
    BPoly p;
    p.add_term(i, j, coeff);
    return p;
  }

  const std::map<Key, F>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
    return d;
  }
  int deg_x() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.first);
    return d;
  }
  int deg_y() const {
    int d = -1;
    for (const auto& [k, v] : t_) d = std::max(d, k.second);
    return d;
  }
  int lowest_degree() const {
    int d = -1;
    for (const auto& [k, v] : t_)
      d = d < 0 ? k.first + k.second : std::min(d, k.first + k.second);
    return d;
  }

  F coeff_or(int i, int j, const F& zero) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? zero : it->second;
  }

  void add_term(int i, int j, const F& c) {
    if (c.is_zero()) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
      t_.emplace(Key{i, j}, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  BPoly operator-() const {
    BPoly p;
    for (const auto& [k, v] : t_) p.t_.emplace(k, -v);
    return p;
  }
  friend BPoly operator+(BPoly a, const BPoly& b) {
    for (const auto& [k, v] : b.t_) a.add_term(k.first, k.second, v);
    return a;
  }
  friend BPoly operator-(BPoly a, const BPoly& b) {
    for (const auto& [k, v] : b.t_) a.add_term(k.first, k.second, -v);
    return a;
  }
  friend BPoly operator*(const BPoly& a, const BPoly& b) {
    BPoly p;
    for (const auto& [ka, va] : a.t_)
      for (const auto& [kb, vb] : b.t_)
        p.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return p;
  }
  friend BPoly operator*(BPoly a, const F& s) {
    if (s.is_zero()) return BPoly();
    for (auto& [k, v] : a.t_) v = v * s;
    return a;
  }
  friend BPoly operator*(const F& s, const BPoly& a) { return a * s; }

  friend bool operator==(const BPoly& a, const BPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin(), ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

  BPoly derivative_x() const {
    BPoly p;
    for (const auto& [k, v] : t_)
      if (k.first > 0) p.add_term(k.first - 1, k.second, v * Rat(k.first));
    return p;
  }
  BPoly derivative_y() const {
    BPoly p;
    for (const auto& [k, v] : t_)
      if (k.second > 0) p.add_term(k.first, k.second - 1, v * Rat(k.second));
    return p;
  }

  BPoly homogeneous_part(int m) const {
    BPoly p;
    for (const auto& [k, v] : t_)
      if (k.first + k.second == m) p.add_term(k.first, k.second, v);
    return p;
  }

  template <class G>
  G eval(const G& x, const G& y, const std::function<G(const F&)>& lift) const {
    G acc = x.zero_like();
    for (const auto& [k, v] : t_) {
      G term = lift(v);
      for (int i = 0; i < k.first; ++i) term = term * x;
      for (int j = 0; j < k.second; ++j) term = term * y;
      acc = acc + term;
    }
    return acc;
  }
  F eval(const F& x, const F& y) const {
    return eval<F>(x, y, [](const F& c) { return c; });
  }

  /// Exact composed polynomial f(xe, ye) (the shared substitution engine).
  BPoly substitute(const BPoly& xe, const BPoly& ye) const {
    int dx = deg_x(), dy = deg_y();
    std::vector<BPoly> xp(static_cast<size_t>(std::max(dx, 0)) + 1);
    std::vector<BPoly> yp(static_cast<size_t>(std::max(dy, 0)) + 1);
    if (!t_.empty()) {
      F one = t_.begin()->second.one_like();
      xp[0] = constant(one);
      yp[0] = constant(one);
      for (int i = 1; i <= dx; ++i) xp[static_cast<size_t>(i)] = xp[static_cast<size_t>(i - 1)] * xe;
      for (int j = 1; j <= dy; ++j) yp[static_cast<size_t>(j)] = yp[static_cast<size_t>(j - 1)] * ye;
    }
    BPoly acc;
    for (const auto& [k, v] : t_)
      acc = acc + xp[static_cast<size_t>(k.first)] * yp[static_cast<size_t>(k.second)] * v;
    return acc;
  }

  template <class G>
  BPoly<G> map_coeffs(const std::function<G(const F&)>& fn) const {
    BPoly<G> p;
    for (const auto& [k, v] : t_) p.add_term(k.first, k.second, fn(v));
    return p;
  }

  /// Coefficients as polynomials in x, indexed by the power of y.
  std::vector<UPoly<F>> y_coeffs(const F& zero) const {
    int dy = deg_y(), dx = deg_x();
    std::vector<UPoly<F>> out;
    for (int j = 0; j <= std::max(dy, 0); ++j) {
      std::vector<F> c(static_cast<size_t>(std::max(dx, 0)) + 1, zero);
      for (const auto& [k, v] : t_)
        if (k.second == j) c[static_cast<size_t>(k.first)] = v;
      out.push_back(UPoly<F>(std::move(c)));
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
  }

  static BPoly from_y_coeffs(const std::vector<UPoly<F>>& cs) {
    BPoly p;
    for (size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i <= cs[j].degree(); ++i)
        p.add_term(i, static_cast<int>(j), cs[j].coeffs()[static_cast<size_t>(i)]);
    return p;
  }

  BPoly swap_xy() const {
    BPoly p;
    for (const auto& [k, v] : t_) p.add_term(k.second, k.first, v);
    return p;
  }

  /// f as a univariate polynomial; requires the other variable to be absent.
  UPoly<F> to_upoly_x(const F& zero) const {
    if (deg_y() > 0) fail(errc::invalid_input, "polynomial involves y");
    std::vector<F> c(static_cast<size_t>(std::max(deg_x(), 0)) + 1, zero);
    for (const auto& [k, v] : t_) c[static_cast<size_t>(k.first)] = v;
    return UPoly<F>(std::move(c));
  }

  static BPoly from_upoly_x(const UPoly<F>& f) {
    BPoly p;
    for (int i = 0; i <= f.degree(); ++i) p.add_term(i, 0, f.coeffs()[static_cast<size_t>(i)]);
    return p;
  }
  static BPoly from_upoly_y(const UPoly<F>& f) {
    BPoly p;
    for (int i = 0; i <= f.degree(); ++i) p.add_term(0, i, f.coeffs()[static_cast<size_t>(i)]);
    return p;
  }

  /// The line slice f(x, a x) as a univariate polynomial over the field of a.
  template <class G>
  UPoly<G> slice(const G& a, const std::function<G(const F&)>& lift) const {
    int d = total_degree();
    std::vector<G> c(static_cast<size_t>(std::max(d, 0)) + 1, a.zero_like());
    std::vector<G> apow(c.size(), a.zero_like());
    apow[0] = a.one_like();
    for (size_t j = 1; j < apow.size(); ++j) apow[j] = apow[j - 1] * a;
    for (const auto& [k, v] : t_)
      c[static_cast<size_t>(k.first + k.second)] += lift(v) * apow[static_cast<size_t>(k.second)];
    return UPoly<G>(std::move(c));
  }

  /// The x^m coefficient of f(x, a x) as a polynomial in a, for m = 0..deg.
  std::vector<UPoly<F>> slice_coeff_polys(const F& zero) const {
    int d = total_degree();
    std::vector<std::vector<F>> cs(static_cast<size_t>(std::max(d, 0)) + 1);
    for (auto& row : cs) row.assign(static_cast<size_t>(std::max(d, 0)) + 1, zero);
    for (const auto& [k, v] : t_) cs[static_cast<size_t>(k.first + k.second)][static_cast<size_t>(k.second)] += v;
    std::vector<UPoly<F>> out;
    out.reserve(cs.size());
    for (auto& row : cs) out.push_back(UPoly<F>(std::move(row)));
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [k, v] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.str() + ")";
      if (k.first) s += "*x" + (k.first > 1 ? "^" + std::to_string(k.first) : std::string());
      if (k.second) s += "*y" + (k.second > 1 ? "^" + std::to_string(k.second) : std::string());
    }
    return s;
  }

private:
  std::map<Key, F> t_;
};

/// Division in y by a divisor whose leading y-coefficient is a constant in x.
template <class F>
std::pair<BPoly<F>, BPoly<F>> divrem_in_y(const BPoly<F>& f, const BPoly<F>& g) {
  if (g.is_zero()) fail(errc::division_by_zero, "bivariate division by zero");
  int dg = g.deg_y();
  F zero = g.terms().begin()->second.zero_like();
  auto gc = g.y_coeffs(zero);
  const UPoly<F>& glead = gc.back();
  if (glead.degree() != 0)
    fail(errc::invalid_input, "divisor leading y-coefficient must be constant");
  F lead_inv = glead.lc().inv();
  auto fc = f.y_coeffs(zero);
  std::vector<UPoly<F>> q(fc.size(), UPoly<F>());
  while (true) {
    int df = static_cast<int>(fc.size()) - 1;
    while (df >= 0 && fc[static_cast<size_t>(df)].is_zero()) --df;
    if (df < dg) break;
    UPoly<F> t = fc[static_cast<size_t>(df)] * lead_inv;
    q[static_cast<size_t>(df - dg)] = q[static_cast<size_t>(df - dg)] + t;
    for (int j = 0; j <= dg; ++j)
      fc[static_cast<size_t>(df - dg + j)] =
          fc[static_cast<size_t>(df - dg + j)] - t * gc[static_cast<size_t>(j)];
  }
  return {BPoly<F>::from_y_coeffs(q), BPoly<F>::from_y_coeffs(fc)};
}

/// Exact bivariate quotient (divisor monic-in-y up to constant); throws when
/// not divisible.
template <class F>
BPoly<F> exact_divide_y(const BPoly<F>& f, const BPoly<F>& g) {
  auto [q, r] = divrem_in_y(f, g);
  if (!r.is_zero()) fail(errc::remainder_nonzero, "bivariate division not exact");
  return q;
}

/// Monomials of total degree <= d in the fixed order: total degree ascending,
/// then x-exponent ascending.
inline std::vector<std::pair<int, int>> monomials_up_to(int d) {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= d; ++m)
    for (int i = 0; i <= m; ++i) out.push_back({i, m - i});
  return out;
}

} // namespace ratset
