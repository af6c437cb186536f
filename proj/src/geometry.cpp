#include "ratset/geometry.hpp"

#include <algorithm>
#include <functional>

namespace ratset {

Rat dist2(const NPt& p, const NPt& q, const Int& k) {
  Rat dx = p.first - q.first, dy = p.second - q.second;
  return dx * dx + Rat(k) * dy * dy;
}

VerifyResult verify_rational_set(const NormalizedSet& s) {
  for (size_t i = 0; i < s.pts.size(); ++i)
    for (size_t j = i + 1; j < s.pts.size(); ++j) {
      Rat d2 = dist2(s.pts[i], s.pts[j], s.k);
      if (!rational_sqrt(d2)) return {false, std::make_pair(i, j)};
    }
  return {true, std::nullopt};
}

namespace {

GQF to_gqf(const Pt& p) { return GQF(p.x, p.y); }

// classifies a coordinate of the image under the Lemma-2 normal form
struct AlmostRational {
  Rat r2;       // coefficient of sqrt(k_cand)
  Int k_cand;   // 1 for rational values
  bool is_zero;
};

AlmostRational classify_off_axis(const QF& im, size_t idx) {
  if (im.is_zero()) return {Rat(0), Int(1), true};
  if (im.b().is_zero()) return {im.a(), Int(1), false};
  if (im.a().is_zero()) return {im.b(), im.k(), false};
  fail(errc::not_rational_set,
       "image point " + std::to_string(idx) + " is not of the form (r1, r2*sqrt(k))");
}

} // namespace

std::pair<NormalizedSet, Similarity> normalize_set(const std::vector<Pt>& raw,
                                                   size_t anchor0, size_t anchor1) {
  if (anchor0 >= raw.size() || anchor1 >= raw.size() || anchor0 == anchor1)
    fail(errc::invalid_input, "bad anchor indices");
  for (const auto& p : raw)
    if (p.k() != raw[0].k()) fail(errc::field_mismatch, "points over different fields");
  if (raw[anchor0] == raw[anchor1]) fail(errc::invalid_input, "anchors are equal points");

  // distance-rationality check on the raw set
  for (size_t i = 0; i < raw.size(); ++i)
    for (size_t j = i + 1; j < raw.size(); ++j) {
      QF dx = raw[i].x - raw[j].x, dy = raw[i].y - raw[j].y;
      QF d2 = dx * dx + dy * dy;
      if (!d2.is_rational() || !rational_sqrt(d2.rat()))
        fail(errc::not_rational_set,
             "distance between points " + std::to_string(i) + " and " + std::to_string(j) +
                 " is irrational");
    }

  GQF p0 = to_gqf(raw[anchor0]);
  GQF w = to_gqf(raw[anchor1]) - p0;
  Similarity sim{p0, w.inv()};

  std::vector<size_t> order;
  order.push_back(anchor0);
  order.push_back(anchor1);
  for (size_t i = 0; i < raw.size(); ++i)
    if (i != anchor0 && i != anchor1) order.push_back(i);

  Int k_out(0);
  std::vector<std::pair<Rat, AlmostRational>> images;
  for (size_t i : order) {
    GQF img = sim.apply(to_gqf(raw[i]));
    if (!img.re().is_rational())
      fail(errc::not_rational_set,
           "image point " + std::to_string(i) + " has irrational first coordinate");
    AlmostRational ar = classify_off_axis(img.im(), i);
    if (!ar.is_zero) {
      if (k_out == 0)
        k_out = ar.k_cand;
      else if (k_out != ar.k_cand)
        fail(errc::not_rational_set, "image points mix radicands " + k_out.get_str() +
                                         " and " + ar.k_cand.get_str());
    }
    images.push_back({img.re().rat(), ar});
  }
  if (k_out == 0) k_out = 1;

  NormalizedSet out;
  out.k = k_out;
  for (auto& [r1, ar] : images) out.pts.push_back({r1, ar.r2});
  out.verified = true;
  return {out, sim};
}

NormalizedSet invert_set(const NormalizedSet& s, size_t center, const Rat& radius) {
  if (center >= s.pts.size()) fail(errc::invalid_input, "center index out of range");
  if (radius.sign() <= 0) fail(errc::invalid_input, "inversion radius must be positive");
  const NPt& c = s.pts[center];
  Rat r2 = radius * radius;
  NormalizedSet out;
  out.k = s.k;
  for (size_t i = 0; i < s.pts.size(); ++i) {
    if (i == center) continue;
    Rat d2 = dist2(s.pts[i], c, s.k);
    if (d2.is_zero()) fail(errc::invalid_input, "set contains a duplicate of the center");
    Rat f = r2 / d2;
    out.pts.push_back({c.first + f * (s.pts[i].first - c.first),
                       c.second + f * (s.pts[i].second - c.second)});
  }
  out.verified = verify_rational_set(out).ok;
  return out;
}

bool collinear(const NPt& p, const NPt& q, const NPt& r, const Int&) {
  // orientation determinant has a common sqrt(k) factor; the bracket is rational
  Rat d = (q.first - p.first) * (r.second - p.second) -
          (q.second - p.second) * (r.first - p.first);
  return d.is_zero();
}

ConcyclicResult concyclic(const NPt& p, const NPt& q, const NPt& r, const NPt& s,
                          const Int& k) {
  const NPt* pts[4] = {&p, &q, &r, &s};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) return {false, true};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c2 = b + 1; c2 < 4; ++c2)
        if (collinear(*pts[a], *pts[b], *pts[c2], k)) return {false, true};
  QF zero(k, Rat(0), Rat(0)), one(k, Rat(1), Rat(0));
  std::vector<std::vector<QF>> m;
  for (int i = 0; i < 4; ++i) {
    Rat sq = pts[i]->first * pts[i]->first + Rat(k) * pts[i]->second * pts[i]->second;
    m.push_back({QF(k, sq, Rat(0)), QF(k, pts[i]->first, Rat(0)),
                 QF(k, Rat(0), pts[i]->second), one});
  }
  QF det = det_bareiss<QF>(std::move(m), one, [](const QF& a, const QF& b) { return a / b; });
  return {det.is_zero(), false};
}

GeneralPositionResult verify_general_position(const NormalizedSet& s) {
  size_t n = s.pts.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        if (collinear(s.pts[a], s.pts[b], s.pts[c], s.k)) return {false, {a, b, c}};
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          auto r = concyclic(s.pts[a], s.pts[b], s.pts[c], s.pts[d], s.k);
          if (r.concyclic) return {false, {a, b, c, d}};
        }
  return {true, {}};
}

std::vector<Curve> fit_curve(const std::vector<NPt>& points, const Int& k, int d) {
  if (d < 1) fail(errc::invalid_input, "degree must be positive");
  size_t need = static_cast<size_t>(d * (d + 3) / 2);
  if (points.size() != need)
    fail(errc::invalid_input, "fit_curve needs exactly " + std::to_string(need) + " points");
  auto mons = monomials_up_to(d);
  size_t cols = mons.size();
  QF zero(k, Rat(0), Rat(0)), one(k, Rat(1), Rat(0));
  std::vector<std::vector<QF>> m(points.size(), std::vector<QF>(cols, zero));
  for (size_t r = 0; r < points.size(); ++r) {
    QF x(k, points[r].first, Rat(0)), y(k, Rat(0), points[r].second);
    for (size_t c = 0; c < cols; ++c) {
      QF v = one;
      for (int i = 0; i < mons[c].first; ++i) v *= x;
      for (int j = 0; j < mons[c].second; ++j) v *= y;
      m[r][c] = v;
    }
  }
  // row echelon with column pivot bookkeeping
  std::vector<int> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    QF inv = m[row][col].inv();
    for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (size_t r2 = 0; r2 < m.size(); ++r2) {
      if (r2 == row || m[r2][col].is_zero()) continue;
      QF f = m[r2][col];
      for (size_t c = col; c < cols; ++c) m[r2][c] -= f * m[row][c];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Curve> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<QF> vec(cols, zero);
    vec[free_col] = one;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      vec[static_cast<size_t>(pivot_col[r])] = -m[r][free_col];
    // canonical scale: first nonzero coefficient in monomial order is 1
    size_t lead = 0;
    while (vec[lead].is_zero()) ++lead;
    QF scale = vec[lead].inv();
    BPoly<QF> poly;
    for (size_t c = 0; c < cols; ++c)
      poly.add_term(mons[c].first, mons[c].second, vec[c] * scale);
    basis.push_back(Curve(std::move(poly)));
  }
  return basis;
}

std::vector<size_t> points_on_curve(const NormalizedSet& s, const Curve& c) {
  BPoly<QF> f = c.f();
  if (c.k() != s.k) {
    if (c.k() != 1) fail(errc::field_mismatch, "curve and set over different fields");
    Int k = s.k;
    f = f.map_coeffs<QF>([&k](const QF& q) { return q.rat().is_zero() ? QF(k, Rat(0), Rat(0))
                                                                      : QF(k, q.rat(), Rat(0)); });
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < s.pts.size(); ++i) {
    QF v = f.eval(QF(s.k, s.pts[i].first, Rat(0)), QF(s.k, Rat(0), s.pts[i].second));
    if (v.is_zero()) out.push_back(i);
  }
  return out;
}

namespace {

void combinations(size_t n, size_t m, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(m);
  std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
    if (depth == m) {
      fn(idx);
      return;
    }
    for (size_t i = start; i + (m - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

} // namespace

NormalizedSet extract_curve_general(const NormalizedSet& s, int max_d) {
  if (max_d < 1) fail(errc::invalid_input, "max degree must be positive");
  auto gp = verify_general_position(s);
  if (!gp.ok) {
    std::string w;
    for (size_t i : gp.witness) w += " " + std::to_string(i);
    fail(errc::general_position_violated, "input not in general position; witness" + w);
  }
  size_t n = s.pts.size();
  std::vector<bool> excluded(n, false);
  std::vector<size_t> chosen;
  for (size_t idx = 0; idx < n; ++idx) {
    if (excluded[idx]) continue;
    chosen.push_back(idx);
    for (int d = 1; d <= max_d; ++d) {
      size_t m = static_cast<size_t>(d * (d + 3) / 2);
      if (m > chosen.size()) continue;
      // only subsets containing the new point; older subsets were processed
      combinations(chosen.size() - 1, m - 1, [&](const std::vector<size_t>& sub) {
        std::vector<NPt> pts;
        pts.reserve(m);
        for (size_t j : sub) pts.push_back(s.pts[chosen[j]]);
        pts.push_back(s.pts[idx]);
        auto basis = fit_curve(pts, s.k, d);
        if (basis.empty()) return;
        std::vector<size_t> on = points_on_curve(s, basis[0]);
        for (size_t b = 1; b < basis.size(); ++b) {
          std::vector<size_t> on2 = points_on_curve(s, basis[b]), merged;
          std::set_intersection(on.begin(), on.end(), on2.begin(), on2.end(),
                                std::back_inserter(merged));
          on = std::move(merged);
        }
        for (size_t p : on) excluded[p] = true;
      });
    }
  }
  NormalizedSet out;
  out.k = s.k;
  for (size_t i : chosen) out.pts.push_back(s.pts[i]);
  out.verified = s.verified;
  return out;
}

Curve transform_curve_affine(const Curve& c, const GQF& p0, const GQF& w) {
  if (p0.k() != c.k() || w.k() != c.k())
    fail(errc::field_mismatch, "transform over a different field");
  if (w.is_zero()) fail(errc::invalid_input, "degenerate similarity");
  QF one = c.one();
  BPoly<QF> X = BPoly<QF>::var_x(one), Y = BPoly<QF>::var_y(one);
  BPoly<QF> xe = BPoly<QF>::constant(p0.re()) + X * w.re() - Y * w.im();
  BPoly<QF> ye = BPoly<QF>::constant(p0.im()) + X * w.im() + Y * w.re();
  return Curve(c.f().substitute(xe, ye));
}

} // namespace ratset
