#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratset/errors.hpp"

namespace ratset {

using Int = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1 and den > 0.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(long n, long d) : Rat(Int(n), Int(d)) {}
  Rat(const Int& n, const Int& d) {
    if (sgn(d) == 0) fail(errc::division_by_zero, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  const Int& num() const { return v_.get_num(); }
  const Int& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    return Rat(mpq_class(1) / v_);
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rat r(1), x = *this;
    while (e) {
      if (e & 1) r *= x;
      x *= x;
      e >>= 1;
    }
    return r;
  }

  // field-generic hooks used by the polynomial templates
  Rat zero_like() const { return Rat(); }
  Rat one_like() const { return Rat(1); }
  void collect_parts(std::vector<Rat>& out) const { out.push_back(*this); }

  /// "p/q" with negative sign on the numerator, or plain "p" for integers.
  std::string str() const;

  /// Parses "p/q" or "p". Throws parse_error on malformed input.
  static Rat parse(const std::string& text);

private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Rat operator*(const Rat& a, long b) { return a * Rat(b); }
inline Rat operator*(long a, const Rat& b) { return Rat(a) * b; }

/// Positive squarefree integer; value 1 denotes the degenerate field Q.
class SqfInt {
public:
  SqfInt() : v_(1) {}
  explicit SqfInt(const Int& v);
  const Int& value() const { return v_; }
  friend bool operator==(const SqfInt& a, const SqfInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const SqfInt& a, const SqfInt& b) { return a.v_ != b.v_; }

private:
  struct trusted_tag {};
  SqfInt(Int v, trusted_tag) : v_(std::move(v)) {}
  friend std::pair<SqfInt, Int> squarefree_decompose(const Int& n);
  Int v_;
};

/// Factors n >= 1 as s * m^2 with s squarefree.
std::pair<SqfInt, Int> squarefree_decompose(const Int& n);

/// Nonnegative square root when q is the square of a rational, else empty.
std::optional<Rat> rational_sqrt(const Rat& q);

/// Prime factorization by guarded trial division; throws bound_exceeded when a
/// cofactor cannot be resolved at desk scale.
std::map<Int, int> factorize(Int n);

/// All positive divisors of n != 0, ascending.
std::vector<Int> divisors(const Int& n);

} // namespace ratset
