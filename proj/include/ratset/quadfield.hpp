#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratset/rational.hpp"

namespace ratset {

/// Element a + b*sqrt(k) of the real quadratic field Q(sqrt(k)), k squarefree.
/// k = 1 denotes plain Q and forces b = 0 (normalized on construction).
/// Arithmetic between different k is an error; embed() lifts rational values.
class QF {
public:
  QF() : k_(1), a_(0), b_(0) {}
  QF(const Int& k, Rat a, Rat b) : k_(k), a_(std::move(a)), b_(std::move(b)) {
    if (sgn(k_) <= 0) fail(errc::invalid_input, "field radicand must be positive");
    if (k_ == 1 && !b_.is_zero()) {
      a_ += b_;
      b_ = Rat(0);
    }
  }
  explicit QF(Rat a) : k_(1), a_(std::move(a)), b_(0) {}

  static QF sqrt_k(const Int& k) { return QF(k, Rat(0), Rat(1)); }

  const Int& k() const { return k_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// The rational value; requires b = 0.
  const Rat& rat() const {
    if (!b_.is_zero()) fail(errc::invalid_input, "element is not rational");
    return a_;
  }

  /// Lifts a rational element into Q(sqrt(k)).
  QF embed(const Int& k) const {
    if (!is_rational()) fail(errc::field_mismatch, "embed requires a rational element");
    return QF(k, a_, Rat(0));
  }

  QF conj() const { return QF(k_, a_, -b_); }

  /// Field norm a^2 - k b^2; zero iff the element is zero.
  Rat norm() const { return a_ * a_ - Rat(k_) * b_ * b_; }

  /// Sign under the real embedding with sqrt(k) > 0.
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = norm().sign();
    return c > 0 ? sa : sb;
  }

  QF operator-() const { return QF(k_, -a_, -b_); }

  QF& operator+=(const QF& o) { check(o); a_ += o.a_; b_ += o.b_; return *this; }
  QF& operator-=(const QF& o) { check(o); a_ -= o.a_; b_ -= o.b_; return *this; }
  QF& operator*=(const QF& o) {
    check(o);
    Rat na = a_ * o.a_ + Rat(k_) * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QF& operator/=(const QF& o) { return *this *= o.inv(); }

  friend QF operator+(QF x, const QF& y) { return x += y; }
  friend QF operator-(QF x, const QF& y) { return x -= y; }
  friend QF operator*(QF x, const QF& y) { return x *= y; }
  friend QF operator/(QF x, const QF& y) { return x /= y; }

  QF& operator*=(const Rat& r) { a_ *= r; b_ *= r; return *this; }
  friend QF operator*(QF x, const Rat& r) { return x *= r; }
  friend QF operator*(const Rat& r, QF x) { return x *= r; }

  /// Conjugate-over-norm inverse; exact.
  QF inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero field element");
    Rat n = norm();
    return QF(k_, a_ / n, -b_ / n);
  }

  friend bool operator==(const QF& a, const QF& b) {
    a.check(b);
    return a.a_ == b.a_ && a.b_ == b.b_;
  }
  friend bool operator!=(const QF& a, const QF& b) { return !(a == b); }

  QF zero_like() const { return QF(k_, Rat(0), Rat(0)); }
  QF one_like() const { return QF(k_, Rat(1), Rat(0)); }
  void collect_parts(std::vector<Rat>& out) const {
    out.push_back(a_);
    out.push_back(b_);
  }

  std::string str() const;

private:
  void check(const QF& o) const {
    if (k_ != o.k_)
      fail(errc::field_mismatch,
           "mixed radicands " + k_.get_str() + " and " + o.k_.get_str());
  }

  Int k_;
  Rat a_, b_;
};

inline QF qf_invert(const QF& x) { return x.inv(); }

/// Square root within Q(sqrt(k)) when one exists (nonnegative embedding).
std::optional<QF> qf_sqrt(const QF& z);

/// Element re + im*i over Q(sqrt(k)), i^2 = -1. Used for isotropic slices.
class GQF {
public:
  GQF() = default;
  GQF(QF re, QF im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.k() != im_.k()) fail(errc::field_mismatch, "mixed radicands in complex parts");
  }
  explicit GQF(const QF& re) : re_(re), im_(re.zero_like()) {}

  static GQF i_like(const QF& sample) { return GQF(sample.zero_like(), sample.one_like()); }

  const QF& re() const { return re_; }
  const QF& im() const { return im_; }
  const Int& k() const { return re_.k(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GQF conj() const { return GQF(re_, -im_); }

  /// re^2 + im^2; zero iff the element is zero (the field is formally real).
  QF norm2() const { return re_ * re_ + im_ * im_; }

  GQF operator-() const { return GQF(-re_, -im_); }
  GQF& operator+=(const GQF& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GQF& operator-=(const GQF& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GQF& operator*=(const GQF& o) {
    QF nr = re_ * o.re_ - im_ * o.im_;
    QF ni = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(nr);
    im_ = std::move(ni);
    return *this;
  }
  GQF& operator/=(const GQF& o) { return *this *= o.inv(); }

  friend GQF operator+(GQF x, const GQF& y) { return x += y; }
  friend GQF operator-(GQF x, const GQF& y) { return x -= y; }
  friend GQF operator*(GQF x, const GQF& y) { return x *= y; }
  friend GQF operator/(GQF x, const GQF& y) { return x /= y; }

  GQF inv() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
    QF n = norm2();
    return GQF(re_ / n, -(im_ / n));
  }

  friend bool operator==(const GQF& a, const GQF& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GQF& a, const GQF& b) { return !(a == b); }

  GQF zero_like() const { return GQF(re_.zero_like(), re_.zero_like()); }
  GQF one_like() const { return GQF(re_.one_like(), re_.zero_like()); }
  void collect_parts(std::vector<Rat>& out) const {
    re_.collect_parts(out);
    im_.collect_parts(out);
  }

  std::string str() const;

private:
  QF re_, im_;
};

inline GQF operator*(GQF x, const Rat& r) { return x *= GQF(QF(x.k(), r, Rat(0)), QF(x.k(), Rat(0), Rat(0))); }

} // namespace ratset
