#pragma once

#include <initializer_list>
#include <vector>

#include "subsum/scalar.hpp"

namespace subsum {

// Point / direction / functional in R^m with dual-mode coordinates.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t m) : c_(m) {}
  Vec(std::initializer_list<Scalar> xs) : c_(xs) {}
  explicit Vec(std::vector<Scalar> xs) : c_(std::move(xs)) {}

  static Vec zero(std::size_t m) { return Vec(m); }

  std::size_t dim() const { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, const Scalar& s) { return a *= s; }
  Vec operator-() const;

  Scalar sup_norm() const;
  bool is_zero() const;

  std::vector<double> to_doubles() const;

  // Lexicographic exact order; used for canonical sorting and dedup.
  friend int compare(const Vec& a, const Vec& b);
  friend bool operator==(const Vec& a, const Vec& b) { return compare(a, b) == 0; }
  friend bool operator<(const Vec& a, const Vec& b) { return compare(a, b) < 0; }

  std::string str() const;

private:
  std::vector<Scalar> c_;
};

Scalar dot(const Vec& a, const Vec& b);

// Closed axis-aligned box [lo, hi].
struct Box {
  Vec lo, hi;

  std::size_t dim() const { return lo.dim(); }
  bool contains(const Vec& p) const;
  bool contains(const Vec& p, const Scalar& slack) const;
  bool intersects(const Box& o) const;
  // Containment of this box in o inflated by slack on every side.
  bool inside_of(const Box& o, const Scalar& slack) const;

  static Box around(const Vec& center, const Vec& halfwidth);
  Vec center() const;
  Vec halfwidth() const;
};

// --- exact rational linear algebra on small m ---------------------------

// Orthogonalizes rows (Gram-Schmidt without normalization, largest remaining
// norm-square first, ties by lowest index). Drops zero rows. Exact when all
// inputs are exact. combo[i] gives the input-row coefficients of output i.
std::vector<Vec> orthogonalize(const std::vector<Vec>& rows,
                               std::vector<std::vector<Scalar>>* combo = nullptr);

// Basis of the orthogonal complement of span(rows) in R^m.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& rows, std::size_t m);

int rank(const std::vector<Vec>& rows, std::size_t m);

// --- exact convex hull for dimensions 1 and 2 ---------------------------

// Indices into pts of the hull vertices (strict extreme points of the point
// set; collinear non-corner points are excluded). pts must contain no
// duplicates. For m == 1 the result is the argmin/argmax pair.
std::vector<std::size_t> hull_vertices(const std::vector<Vec>& pts);

}  // namespace subsum
