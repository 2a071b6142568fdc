#include "subsum/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace subsum {

Vec& Vec::operator+=(const Vec& o) {
  if (dim() != o.dim()) fail(Errc::InvalidArgument, "dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (dim() != o.dim()) fail(Errc::InvalidArgument, "dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vec Vec::operator-() const {
  Vec r(dim());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
  return r;
}

Scalar Vec::sup_norm() const {
  Scalar m(0);
  for (const auto& x : c_) m = max(m, x.abs());
  return m;
}

bool Vec::is_zero() const {
  for (const auto& x : c_)
    if (x.sign() != 0) return false;
  return true;
}

std::vector<double> Vec::to_doubles() const {
  std::vector<double> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].to_double();
  return r;
}

int compare(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Vec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) fail(Errc::InvalidArgument, "dimension mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

bool Box::contains(const Vec& p) const { return contains(p, Scalar(0)); }

bool Box::contains(const Vec& p, const Scalar& slack) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
  }
  return true;
}

bool Box::intersects(const Box& o) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (hi[i] < o.lo[i] || o.hi[i] < lo[i]) return false;
  }
  return true;
}

bool Box::inside_of(const Box& o, const Scalar& slack) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lo[i] < o.lo[i] - slack || hi[i] > o.hi[i] + slack) return false;
  }
  return true;
}

Box Box::around(const Vec& center, const Vec& halfwidth) {
  return Box{center - halfwidth, center + halfwidth};
}

Vec Box::center() const {
  Vec c = lo + hi;
  c *= Scalar::ratio(1, 2);
  return c;
}

Vec Box::halfwidth() const {
  Vec h = hi - lo;
  h *= Scalar::ratio(1, 2);
  return h;
}

std::vector<Vec> orthogonalize(const std::vector<Vec>& rows,
                               std::vector<std::vector<Scalar>>* combo) {
  std::vector<Vec> out;
  std::vector<std::vector<Scalar>> outc;
  std::vector<bool> used(rows.size(), false);
  const std::size_t n = rows.size();

  for (;;) {
    // residual of every unused row against current output
    std::vector<Vec> resid(n);
    std::vector<std::vector<Scalar>> residc(n);
    long best = -1;
    Scalar best_norm(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      Vec r = rows[i];
      std::vector<Scalar> coef(n, Scalar(0));
      coef[i] = Scalar(1);
      for (std::size_t j = 0; j < out.size(); ++j) {
        Scalar denom = dot(out[j], out[j]);
        Scalar t = dot(r, out[j]) / denom;
        Vec proj = out[j];
        proj *= t;
        r -= proj;
        for (std::size_t k = 0; k < n; ++k) coef[k] -= outc[j][k] * t;
      }
      Scalar nrm = dot(r, r);
      if (nrm.sign() != 0 && (best < 0 || nrm > best_norm)) {
        best = static_cast<long>(i);
        best_norm = nrm;
      }
      resid[i] = std::move(r);
      residc[i] = std::move(coef);
    }
    if (best < 0) break;
    used[best] = true;
    out.push_back(resid[best]);
    outc.push_back(residc[best]);
  }
  if (combo) *combo = std::move(outc);
  return out;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& rows, std::size_t m) {
  std::vector<Vec> basis = orthogonalize(rows);
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < m; ++i) {
    Vec e(m);
    e[i] = Scalar(1);
    for (const auto& b : basis) {
      Scalar t = dot(e, b) / dot(b, b);
      Vec proj = b;
      proj *= t;
      e -= proj;
    }
    for (const auto& b : comp) {
      Scalar t = dot(e, b) / dot(b, b);
      Vec proj = b;
      proj *= t;
      e -= proj;
    }
    if (!e.is_zero()) comp.push_back(e);
  }
  return comp;
}

int rank(const std::vector<Vec>& rows, std::size_t m) {
  (void)m;
  return static_cast<int>(orthogonalize(rows).size());
}

namespace {

// sign of the cross product (b - a) x (c - a)
int orient(const Vec& a, const Vec& b, const Vec& c) {
  Scalar v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return v.sign();
}

}  // namespace

std::vector<std::size_t> hull_vertices(const std::vector<Vec>& pts) {
  if (pts.empty()) return {};
  const std::size_t m = pts[0].dim();
  if (m == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i] < pts[lo]) lo = i;
      if (pts[hi] < pts[i]) hi = i;
    }
    if (lo == hi) return {lo};
    return {lo, hi};
  }
  if (m != 2) fail(Errc::InvalidArgument, "hull supports dimensions 1 and 2");

  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return compare(pts[a], pts[b]) < 0; });

  if (pts.size() == 1) return {idx[0]};
  if (pts.size() == 2) return {idx[0], idx[1]};

  // Monotone chain; popping on orient <= 0 keeps only strict corners.
  std::vector<std::size_t> h;
  auto build = [&](auto begin, auto end) {
    std::size_t base = h.size();
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= base + 2 &&
             orient(pts[h[h.size() - 2]], pts[h[h.size() - 1]], pts[*it]) <= 0)
        h.pop_back();
      h.push_back(*it);
    }
    h.pop_back();  // endpoint re-added by the next chain
  };
  build(idx.begin(), idx.end());
  build(idx.rbegin(), idx.rend());

  if (h.empty()) {
    // all points collinear: extremes only
    return {idx.front(), idx.back()};
  }
  return h;
}

}  // namespace subsum
