#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ratset/curve.hpp"
#include "ratset/quadfield.hpp"

namespace ratset {

/// Plane point with coordinates in a common Q(sqrt(k)).
struct Pt {
  QF x, y;
  Pt(QF px, QF py) : x(std::move(px)), y(std::move(py)) {
    if (x.k() != y.k()) fail(errc::field_mismatch, "point coordinates over different fields");
  }
  const Int& k() const { return x.k(); }
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
};

/// A rational set in canonical form: squarefree k plus pairs (r1, r2) for
/// (r1, r2*sqrt(k)). When produced by normalization the first two entries are
/// (0,0) and (1,0).
struct NormalizedSet {
  Int k{1};
  std::vector<NPt> pts;
  bool verified = false;

  Pt point(size_t i) const {
    return Pt(QF(k, pts[i].first, Rat(0)), QF(k, Rat(0), pts[i].second));
  }
};

/// Plane similarity in the complex model: z -> multiplier * (z - translation).
struct Similarity {
  GQF translation;
  GQF multiplier; // nonzero
  GQF apply(const GQF& z) const { return multiplier * (z - translation); }
};

/// Squared distance (dr1)^2 + k*(dr2)^2 between normalized points.
Rat dist2(const NPt& p, const NPt& q, const Int& k);

struct VerifyResult {
  bool ok;
  std::optional<std::pair<size_t, size_t>> witness;
};

/// True iff every pairwise squared distance is the square of a rational.
VerifyResult verify_rational_set(const NormalizedSet& s);

/// Canonicalizes a raw rational set: anchors map to (0,0) and (1,0), every
/// image point takes the (r1, r2*sqrt(k)) form, and k is discovered from the
/// first point off the axis. Throws not_rational_set when the input is not a
/// rational set.
std::pair<NormalizedSet, Similarity> normalize_set(const std::vector<Pt>& raw,
                                                   size_t anchor0, size_t anchor1);

/// Image of s minus its center under p -> c + radius^2 (p - c)/|p - c|^2.
NormalizedSet invert_set(const NormalizedSet& s, size_t center, const Rat& radius);

bool collinear(const NPt& p, const NPt& q, const NPt& r, const Int& k);

struct ConcyclicResult {
  bool concyclic;
  bool degenerate; // repeated points or a collinear triple among the four
};
ConcyclicResult concyclic(const NPt& p, const NPt& q, const NPt& r, const NPt& s, const Int& k);

struct GeneralPositionResult {
  bool ok;
  std::vector<size_t> witness; // 3 collinear or 4 concyclic indices
};
GeneralPositionResult verify_general_position(const NormalizedSet& s);

/// Basis of degree-<=d curves through the given points; requires exactly
/// d(d+3)/2 points. A unique curve comes back canonicalized (first nonzero
/// coefficient 1 in the fixed monomial order); a larger basis flags a
/// degenerate configuration.
std::vector<Curve> fit_curve(const std::vector<NPt>& points, const Int& k, int d);

/// Indices of the points of s lying exactly on c.
std::vector<size_t> points_on_curve(const NormalizedSet& s, const Curve& c);

/// Greedy curve-general-position extraction: processes points in order,
/// excluding every point that lands on a fitted curve through already-chosen
/// points. Requires general position.
NormalizedSet extract_curve_general(const NormalizedSet& s, int max_d);

/// Curve image under the inverse similarity z -> p0 + w z, i.e. the curve
/// whose points are the forward images T(z) = (z - p0)/w of points of c.
Curve transform_curve_affine(const Curve& c, const GQF& p0, const GQF& w);

} // namespace ratset
