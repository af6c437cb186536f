#include "ratset/quadfield.hpp"

namespace ratset {

std::string QF::str() const {
  if (b_.is_zero()) return a_.str();
  std::string bs = b_.is_one() ? "r" : (b_ == Rat(-1) ? "-r" : b_.str() + "*r");
  if (a_.is_zero()) return bs;
  if (b_.sign() > 0) return a_.str() + "+" + bs;
  return a_.str() + "-" + (b_ == Rat(-1) ? "r" : (-b_).str() + "*r");
}

std::string GQF::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = "(" + re_.str() + ")+(" + im_.str() + ")*i";
  return s;
}

std::optional<QF> qf_sqrt(const QF& z) {
  if (z.is_zero()) return z.zero_like();
  if (z.sign() < 0) return std::nullopt;
  const Int& k = z.k();
  if (z.is_rational()) {
    // u^2 = a (rational branch) or k v^2 = a (pure-sqrt branch)
    if (auto u = rational_sqrt(z.a())) return QF(k, *u, Rat(0));
    if (k != 1) {
      if (auto v = rational_sqrt(z.a() / Rat(k))) return QF(k, Rat(0), *v);
    }
    return std::nullopt;
  }
  // (u + v sqrt k)^2 = a + b sqrt k: u^2 + k v^2 = a, 2uv = b.
  // Eliminating v: 4u^4 - 4au^2 + k b^2 = 0, so u^2 = (a +- sqrt(a^2 - k b^2))/2.
  Rat n = z.norm();
  if (n.sign() < 0) return std::nullopt;
  auto rn = rational_sqrt(n);
  if (!rn) return std::nullopt;
  for (const Rat& root : {*rn, -*rn}) {
    Rat u2 = (z.a() + root) / Rat(2);
    if (u2.sign() <= 0) continue;
    if (auto u = rational_sqrt(u2)) {
      Rat v = z.b() / (Rat(2) * *u);
      QF cand(k, *u, v);
      if (cand * cand == z) return cand.sign() >= 0 ? cand : -cand;
    }
  }
  return std::nullopt;
}

} // namespace ratset
