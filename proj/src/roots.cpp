#include "ratset/roots.hpp"

#include <algorithm>

namespace ratset {

std::vector<Rat> rational_roots(const UPoly<Rat>& f) {
  if (f.is_zero()) fail(errc::invalid_input, "rational roots of zero polynomial");
  std::vector<Rat> roots;
  UPoly<Rat> g = f;
  // strip the x^m factor
  size_t low = 0;
  while (low < g.coeffs().size() && g.coeffs()[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(Rat(0));
    std::vector<Rat> c(g.coeffs().begin() + static_cast<long>(low), g.coeffs().end());
    g = UPoly<Rat>(std::move(c));
  }
  if (g.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // integer model: clear denominators, strip numerator content
  Int dl(1), ng(0);
  for (const auto& c : g.coeffs()) mpz_lcm(dl.get_mpz_t(), dl.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Int> ic;
  ic.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) {
    Rat s = c * Rat(dl);
    ic.push_back(s.num());
    mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), s.num().get_mpz_t());
  }
  if (ng > 1)
    for (auto& c : ic) c /= ng;
  const Int& a0 = ic.front();
  const Int& ad = ic.back();
  for (const Int& p : divisors(a0)) {
    for (const Int& q : divisors(ad)) {
      Int gg;
      mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (gg != 1) continue;
      for (int s : {1, -1}) {
        Rat cand(s < 0 ? Int(-p) : p, q);
        if (g.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// x-candidates from one nonzero elimination polynomial; nullopt when every
// pair eliminates to zero (shared positive-degree factor in y).
std::optional<std::vector<Rat>> eliminate_x_candidates(const std::vector<BPoly<Rat>>& polys) {
  std::vector<const BPoly<Rat>*> xonly, mixed;
  for (const auto& p : polys) (p.deg_y() <= 0 ? xonly : mixed).push_back(&p);
  Rat zero(0);
  if (!xonly.empty()) {
    UPoly<Rat> g;
    for (const auto* p : xonly) g = poly_gcd(g, p->to_upoly_x(zero));
    if (g.degree() == 0) return std::vector<Rat>{};
    return rational_roots(g);
  }
  for (size_t i = 0; i < mixed.size(); ++i)
    for (size_t j = i + 1; j < mixed.size(); ++j) {
      UPoly<Rat> r = resultant_y(*mixed[i], *mixed[j]);
      if (!r.is_zero()) {
        if (r.degree() == 0) return std::vector<Rat>{};
        return rational_roots(r);
      }
    }
  return std::nullopt;
}

} // namespace

std::vector<std::pair<Rat, Rat>> common_rational_zeros(std::vector<BPoly<Rat>> polys) {
  polys.erase(std::remove_if(polys.begin(), polys.end(),
                             [](const BPoly<Rat>& p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty()) fail(errc::locus_not_finite, "no nonzero constraint");
  Rat zero(0);
  for (const auto& p : polys)
    if (p.total_degree() == 0) return {};

  bool swapped = false;
  auto cand = eliminate_x_candidates(polys);
  if (!cand) {
    for (auto& p : polys) p = p.swap_xy();
    swapped = true;
    cand = eliminate_x_candidates(polys);
    if (!cand) fail(errc::locus_not_finite, "system has a common curve component");
  }

  std::vector<std::pair<Rat, Rat>> out;
  for (const Rat& x0 : *cand) {
    UPoly<Rat> g;
    bool impossible = false, all_vanish = true;
    for (const auto& p : polys) {
      // substitute x = x0
      std::vector<Rat> ys(static_cast<size_t>(std::max(p.deg_y(), 0)) + 1, zero);
      for (const auto& [k, v] : p.terms())
        ys[static_cast<size_t>(k.second)] += v * x0.pow(k.first);
      UPoly<Rat> py(std::move(ys));
      if (py.is_zero()) continue;
      all_vanish = false;
      if (py.degree() == 0) {
        impossible = true;
        break;
      }
      g = poly_gcd(g, py);
    }
    if (impossible) continue;
    if (all_vanish) fail(errc::locus_not_finite, "a full line satisfies the system");
    if (g.is_zero() || g.degree() == 0) continue;
    for (const Rat& y0 : rational_roots(g)) {
      bool ok = true;
      for (const auto& p : polys)
        if (!p.eval(x0, y0).is_zero()) {
          ok = false;
          break;
        }
      if (ok) out.push_back(swapped ? std::make_pair(y0, x0) : std::make_pair(x0, y0));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QF> qf_roots(const UPoly<QF>& p) {
  if (p.is_zero()) fail(errc::invalid_input, "roots of zero polynomial");
  std::vector<QF> out;
  if (p.degree() < 1) return out;
  const Int k = p.lc().k();
  if (k == 1) {
    UPoly<Rat> pr = p.map_coeffs<Rat>([](const QF& c) { return c.rat(); });
    for (const Rat& r : rational_roots(pr)) out.push_back(QF(k, r, Rat(0)));
    return out;
  }
  // expand p(u + v sqrt k) = A(u,v) + B(u,v) sqrt(k) by Horner over (u, v)
  BPoly<Rat> A, B;
  BPoly<Rat> one = BPoly<Rat>::constant(Rat(1));
  BPoly<Rat> U = BPoly<Rat>::var_x(Rat(1)), V = BPoly<Rat>::var_y(Rat(1));
  Rat rk(k);
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    // (A + B s)(u + v s) = (A u + k B v) + (A v + B u) s, then add coefficient
    BPoly<Rat> nA = A * U + (B * V) * rk;
    BPoly<Rat> nB = A * V + B * U;
    const QF& c = p.coeffs()[i];
    nA.add_term(0, 0, c.a());
    nB.add_term(0, 0, c.b());
    A = std::move(nA);
    B = std::move(nB);
  }
  for (const auto& [u, v] : common_rational_zeros({A, B})) {
    QF root(k, u, v);
    if (p.eval(root).is_zero()) out.push_back(root);
  }
  return out;
}

} // namespace ratset
