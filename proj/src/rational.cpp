#include "ratset/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ratset {

std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

Rat Rat::parse(const std::string& text) {
  auto bad = [&](const char* why) {
    fail(errc::parse_error, std::string("bad rational '") + text + "': " + why);
  };
  if (text.empty()) bad("empty");
  auto slash = text.find('/');
  std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(ns, true)) bad("numerator");
  if (!is_int(ds, false)) bad("denominator");
  Int n(ns), d(ds);
  if (sgn(d) == 0) bad("zero denominator");
  return Rat(n, d);
}

namespace {

// trial division cutoff; beyond it only square/prime cofactors are resolved
const unsigned long kTrialLimit = 1ul << 21;

void factor_into(Int n, std::map<Int, int>& out, int mult) {
  if (n == 1) return;
  for (unsigned long p = 2; p <= kTrialLimit; p = (p == 2 ? 3 : p + 2)) {
    if (Int(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Int(p)] += mult;
      n /= p;
    }
  }
  if (n == 1) return;
  if (Int(kTrialLimit) * kTrialLimit > n || mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n] += mult;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    factor_into(r, out, 2 * mult);
    return;
  }
  fail(errc::bound_exceeded, "cannot factor " + n.get_str() + " at desk scale");
}

} // namespace

std::map<Int, int> factorize(Int n) {
  if (sgn(n) <= 0) fail(errc::invalid_input, "factorize requires n >= 1");
  std::map<Int, int> out;
  factor_into(std::move(n), out, 1);
  return out;
}

std::vector<Int> divisors(const Int& n) {
  if (sgn(n) == 0) fail(errc::invalid_input, "divisors of zero");
  auto f = factorize(abs(n));
  std::vector<Int> out{1};
  for (const auto& [p, e] : f) {
    size_t base = out.size();
    Int pk(1);
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SqfInt::SqfInt(const Int& v) {
  if (sgn(v) <= 0) fail(errc::invalid_input, "squarefree integer must be positive");
  auto [s, m] = squarefree_decompose(v);
  if (m != 1) fail(errc::invalid_input, v.get_str() + " is not squarefree");
  v_ = v;
}

std::pair<SqfInt, Int> squarefree_decompose(const Int& n) {
  if (sgn(n) <= 0) fail(errc::invalid_input, "squarefree_decompose requires n >= 1");
  Int s(1), m(1);
  for (const auto& [p, e] : factorize(n)) {
    if (e & 1) s *= p;
    for (int i = 0; i < e / 2; ++i) m *= p;
  }
  return {SqfInt(std::move(s), SqfInt::trusted_tag{}), m};
}

std::optional<Rat> rational_sqrt(const Rat& q) {
  if (q.sign() < 0) fail(errc::invalid_input, "rational_sqrt of negative value");
  if (q.is_zero()) return Rat(0);
  const Int &n = q.num(), &d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rat(rn, rd);
}

} // namespace ratset
