#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ratset/bpoly.hpp"
#include "ratset/quadfield.hpp"

namespace ratset {

/// Normalized-coordinate pair (r1, r2) representing the point (r1, r2*sqrt(k)).
using NPt = std::pair<Rat, Rat>;

/// Plane curve f(x, y) = 0 over Q(sqrt(k)); f nonzero with cached degree.
class Curve {
public:
  explicit Curve(BPoly<QF> f) : f_(std::move(f)) {
    if (f_.is_zero()) fail(errc::invalid_input, "zero polynomial is not a curve");
    d_ = f_.total_degree();
    k_ = f_.terms().begin()->second.k();
  }

  const BPoly<QF>& f() const { return f_; }
  int degree() const { return d_; }
  const Int& k() const { return k_; }

  QF zero() const { return QF(k_, Rat(0), Rat(0)); }
  QF one() const { return QF(k_, Rat(1), Rat(0)); }

  /// Evaluation at the normalized point (r1, r2*sqrt(k)).
  QF eval_npt(const Rat& r1, const Rat& r2) const {
    return f_.eval(QF(k_, r1, Rat(0)), QF(k_, Rat(0), r2));
  }

  bool origin_on_curve() const { return f_.coeff_or(0, 0, zero()).is_zero(); }

  friend bool operator==(const Curve& a, const Curve& b) { return a.f_ == b.f_; }

private:
  BPoly<QF> f_;
  int d_;
  Int k_;
};

/// True iff the linear part of f is nonzero; requires f(0,0) = 0.
bool origin_nonsingular(const Curve& c);

/// p_a(x) = f(x, a x).
UPoly<QF> line_slice(const Curve& c, const QF& a);
UPoly<GQF> line_slice(const Curve& c, const GQF& a);

struct Rotation {
  QF c, s; // x -> c x - s y, y -> s x + c y maps the target point to (|p|, 0)
};

/// Rotates the normalized point p = (r1, r2*sqrt(k)) onto the positive x-axis;
/// requires |p|^2 to be a nonzero rational square.
std::pair<Curve, Rotation> rotate_to_axis(const Curve& c, const NPt& p);

/// The discriminant of p_a(x) as a polynomial in the slope a, computed as a
/// symbolic resultant; its roots cover every slope with a multiple root.
UPoly<QF> bad_slope_discriminant(const Curve& c);

struct RamificationSlices {
  UPoly<GQF> plus, minus; // f(x, ix) and f(x, -ix)
  int count_plus = 0, count_minus = 0;
  int total() const { return count_plus + count_minus; }
  bool full_simple = false; // both slices squarefree of full degree
};

/// Counts simple nonzero roots of the two isotropic slices; each is a
/// transversal cone intersection contributing e_P - 1 = 1.
RamificationSlices cone_ramification(const Curve& c);
int cone_ramification_count(const Curve& c);

/// (x^2+y^2)^kappa f(x/(x^2+y^2), y/(x^2+y^2)) with minimal kappa,
/// content-normalized.
std::pair<Curve, int> invert_curve(const Curve& c);

/// All common rational zeros of f, df/dx, df/dy (degree <= 3 only).
std::vector<std::pair<Rat, Rat>> find_singular_points(const Curve& c);

struct LineFactor {
  QF a, b, c; // a x + b y + c = 0
};
struct CircleFactor {
  QF alpha, beta, gamma; // x^2 + y^2 + alpha x + beta y + gamma = 0
  bool degenerate;       // squared radius <= 0
};
struct FactorReport {
  std::vector<LineFactor> lines;
  std::vector<CircleFactor> circles;
  BPoly<QF> cofactor;
  bool has_line() const { return !lines.empty(); }
  bool has_real_circle() const {
    for (const auto& c : circles)
      if (!c.degenerate) return true;
    return false;
  }
};

/// Detects line and circle factors with coefficients in Q(sqrt(k)) for
/// curves of degree <= 4; complete over that field.
FactorReport line_circle_factor(const Curve& c);

} // namespace ratset
