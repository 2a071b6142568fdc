#include "subsum/catalog.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace subsum {

namespace {

Scalar geom_tail_half(Index N) {  // sum_{k>N} 2^-k
  return Scalar::pow_int(BigRational(1, 2), N);
}
Scalar geom_tail_two_thirds(Index N) {  // sum_{k>N} 2*3^-k
  return Scalar::pow_int(BigRational(1, 3), N);
}
Scalar geom_tail_third(Index N) {  // sum_{k>N} 3^-k
  return Scalar::pow_int(BigRational(1, 3), N) / Scalar(2);
}

Scalar alt_harmonic(Index k) {
  return (k % 2 == 1) ? Scalar::ratio(1, k) : Scalar::ratio(-1, k);
}
double alt_harmonic_f64(Index k) {
  double v = 1.0 / static_cast<double>(k);
  return (k % 2 == 1) ? v : -v;
}

DirectionTag abs_tag(Vec f, std::function<Scalar(Index)> bound,
                     std::function<Scalar(Index)> remainder = nullptr) {
  DirectionTag t;
  t.functional = std::move(f);
  t.tag = ConvergenceTag::AbsolutelyConvergent;
  t.abs_tail_bound = std::move(bound);
  t.exact_remainder = std::move(remainder);
  return t;
}

DirectionTag cond_tag(Vec f) {
  DirectionTag t;
  t.functional = std::move(f);
  t.tag = ConvergenceTag::ConditionallyConvergent;
  return t;
}

CatalogEntry geometric_half() {
  CatalogEntry e;
  e.name = "geometric-half";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 1;
  s.term = [](Index n) { return Vec{Scalar::pow_int(BigRational(1, 2), n)}; };
  s.term_f64 = [](Index n) { return std::vector<double>{std::pow(0.5, double(n))}; };
  s.tail_norm_bound = geom_tail_half;
  s.selection_tail_bound = geom_tail_half;
  s.exact_abs_tail = geom_tail_half;
  s.direction_tags = {abs_tag(Vec{Scalar(1)}, geom_tail_half, geom_tail_half)};
  s.monotone_nonincreasing_abs = true;
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true};
  s.kakeya_regime = KakeyaRegime{1, KakeyaBeyond::AlwaysAtMost};
  e.documented_facts = {{"kakeya-class", "FiniteUnionOfIntervals"},
                        {"achievement-set", "[0,1]"},
                        {"sum", "1"}};
  return e;
}

CatalogEntry cantor_ternary() {
  CatalogEntry e;
  e.name = "cantor-ternary";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 1;
  s.term = [](Index n) { return Vec{Scalar(2) * Scalar::pow_int(BigRational(1, 3), n)}; };
  s.term_f64 = [](Index n) { return std::vector<double>{2.0 * std::pow(3.0, -double(n))}; };
  s.tail_norm_bound = geom_tail_two_thirds;
  s.selection_tail_bound = geom_tail_two_thirds;
  s.exact_abs_tail = geom_tail_two_thirds;
  s.direction_tags = {abs_tag(Vec{Scalar(1)}, geom_tail_two_thirds, geom_tail_two_thirds)};
  s.monotone_nonincreasing_abs = true;
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true};
  s.kakeya_regime = KakeyaRegime{1, KakeyaBeyond::AlwaysGreater};
  e.documented_facts = {{"kakeya-class", "CantorLike"},
                        {"achievement-set", "ternary Cantor set"},
                        {"sum", "1"}};
  return e;
}

CatalogEntry alt_harmonic_entry() {
  CatalogEntry e;
  e.name = "alt-harmonic";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 1;
  s.term = [](Index n) { return Vec{alt_harmonic(n)}; };
  s.term_f64 = [](Index n) { return std::vector<double>{alt_harmonic_f64(n)}; };
  s.direction_tags = {cond_tag(Vec{Scalar(1)})};
  s.monotone_nonincreasing_abs = true;
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {false};
  e.documented_facts = {{"sum", "log 2"},
                        {"achievement-set", "R"},
                        {"selection-class(all)", "Conditional"}};
  return e;
}

CatalogEntry guthrie_nymann() {
  CatalogEntry e;
  e.name = "guthrie-nymann";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 1;
  // 3/4, 2/4, 3/16, 2/16, ...
  s.term = [](Index n) {
    Index j = (n + 1) / 2;
    Scalar p4 = Scalar::pow_int(BigRational(1, 4), j);
    return Vec{(n % 2 == 1 ? Scalar(3) : Scalar(2)) * p4};
  };
  s.exact_abs_tail = [](Index N) {
    Index j = (N + 1) / 2;  // pair containing index N
    Scalar p4 = Scalar::pow_int(BigRational(1, 4), j);
    Scalar full = Scalar::ratio(5, 3) * p4;  // whole pairs beyond j
    if (N % 2 == 1) full += Scalar(2) * p4;  // second half of pair j remains
    return full;
  };
  s.tail_norm_bound = s.exact_abs_tail;
  s.selection_tail_bound = s.exact_abs_tail;
  s.direction_tags = {abs_tag(Vec{Scalar(1)}, s.exact_abs_tail, s.exact_abs_tail)};
  s.monotone_nonincreasing_abs = true;
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true};
  s.kakeya_regime = KakeyaRegime{2, KakeyaBeyond::Mixed};
  e.documented_facts = {{"kakeya-class", "Mixed/Unknown"},
                        {"note", "odd terms satisfy the interval comparison, even terms the"
                                 " quick-convergence one; neither holds for almost all n"}};
  return e;
}

CatalogEntry geometric_2d() {
  CatalogEntry e;
  e.name = "geometric-2d";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  s.term = [](Index n) {
    return Vec{Scalar::pow_int(BigRational(1, 2), n), Scalar::pow_int(BigRational(1, 3), n)};
  };
  s.term_f64 = [](Index n) {
    return std::vector<double>{std::pow(0.5, double(n)), std::pow(3.0, -double(n))};
  };
  s.tail_norm_bound = geom_tail_half;  // ||term||_inf = 2^-n
  s.selection_tail_bound = geom_tail_half;
  s.direction_tags = {abs_tag(Vec{Scalar(1), Scalar(0)}, geom_tail_half, geom_tail_half),
                      abs_tag(Vec{Scalar(0), Scalar(1)}, geom_tail_third, geom_tail_third)};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true, true};
  e.documented_facts = {{"sum", "(1, 1/2)"},
                        {"hull-vertices", "every depth-N hull vertex has one representation"}};
  return e;
}

CatalogEntry alt_harmonic_dyadic() {
  CatalogEntry e;
  e.name = "alt-harmonic-dyadic";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  s.term = [](Index n) { return Vec{alt_harmonic(n), Scalar::pow_int(BigRational(1, 2), n)}; };
  s.term_f64 = [](Index n) {
    return std::vector<double>{alt_harmonic_f64(n), std::pow(0.5, double(n))};
  };
  s.direction_tags = {cond_tag(Vec{Scalar(1), Scalar(0)}),
                      abs_tag(Vec{Scalar(0), Scalar(1)}, geom_tail_half, geom_tail_half)};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {false, true};
  e.documented_facts = {{"sum", "(log 2, 1)"},
                        {"sum-range", "R x {1}"},
                        {"closure(A)", "R x [0,1]"},
                        {"A-meets-SR", "{(log 2, 1)} only"}};
  return e;
}

CatalogEntry cantor_graph() {
  CatalogEntry e;
  e.name = "cantor-graph";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  s.term = [](Index n) {
    return Vec{Scalar(2) * Scalar::pow_int(BigRational(1, 3), n), alt_harmonic(n)};
  };
  s.term_f64 = [](Index n) {
    return std::vector<double>{2.0 * std::pow(3.0, -double(n)), alt_harmonic_f64(n)};
  };
  s.direction_tags = {abs_tag(Vec{Scalar(1), Scalar(0)}, geom_tail_two_thirds, geom_tail_two_thirds),
                      cond_tag(Vec{Scalar(0), Scalar(1)})};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true, false};
  e.documented_facts = {{"gamma", "span{(1,0)}"},
                        {"achievement-set",
                         "graph of a function whose domain sits inside the ternary Cantor set"}};
  return e;
}

// d coordinate blocks; block n holds 2n terms alternating +e_n/n, -e_n/n.
CatalogEntry c0_truncated(Index d) {
  if (d < 1 || d > 64) fail(Errc::InvalidArgument, "c0-truncated dimension out of range");
  CatalogEntry e;
  e.name = "c0-truncated(" + std::to_string(d) + ")";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = static_cast<int>(d);
  const Index total = d * (d + 1);
  auto locate = [d](Index i) {
    // block n occupies (n(n-1), n(n+1)]
    for (Index n = 1; n <= d; ++n) {
      if (i <= n * (n + 1)) return n;
    }
    return d + 1;
  };
  s.term = [d, locate](Index i) {
    Vec v(static_cast<std::size_t>(d));
    Index n = locate(i);
    if (n > d) return v;
    Index off = i - n * (n - 1);
    Scalar val = Scalar::ratio(off % 2 == 1 ? 1 : -1, n);
    v[static_cast<std::size_t>(n - 1)] = val;
    return v;
  };
  s.nonzero_count = total;
  s.inf_nonzero_norm = Scalar::ratio(1, d);
  s.tail_norm_bound = [d, total](Index N) {
    if (N >= total) return Scalar(0);
    Scalar acc(0);
    for (Index n = 1; n <= d; ++n) {
      Index lo = n * (n - 1), hi = n * (n + 1);
      Index cnt = std::max<Index>(0, hi - std::max(N, lo));
      acc += Scalar::ratio(cnt, n);
    }
    return acc;
  };
  s.selection_tail_bound = s.tail_norm_bound;
  for (Index j = 1; j <= d; ++j) {
    Vec f(static_cast<std::size_t>(d));
    f[static_cast<std::size_t>(j - 1)] = Scalar(1);
    auto bound = [j](Index N) {
      Index lo = j * (j - 1), hi = j * (j + 1);
      Index cnt = std::max<Index>(0, hi - std::max(N, lo));
      return Scalar::ratio(cnt, j);
    };
    auto remainder = [j](Index N) {
      Index lo = j * (j - 1), hi = j * (j + 1);
      Index from = std::max(N, lo);
      if (from >= hi) return Scalar(0);
      Index off = from - lo;  // consumed inside block; remainder starts at off+1
      // alternating +,- from offset off+1 to 2j cancels pairwise
      return off % 2 == 1 ? Scalar::ratio(-1, j) : Scalar(0);
    };
    s.direction_tags.push_back(abs_tag(std::move(f), bound, remainder));
  }
  s.positive_coords.assign(static_cast<std::size_t>(d), false);
  e.documented_facts = {{"per-coordinate-sets", "X_n = {k/n : |k| <= n}"},
                        {"sum", "0"},
                        {"term-count", std::to_string(total)}};
  return e;
}

// 4-periodic interleavings hosting the open achievement sets. The v-part is
// the dyadic geometric series (X = 1), the w-part the alternating harmonic.
CatalogEntry open_corner() {
  CatalogEntry e;
  e.name = "open-corner";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  // (v_1, w_1), (v_1, 0), (v_2, w_2), (v_2, 0), ...
  s.term = [](Index n) {
    Index k = (n + 1) / 2;
    Scalar v = Scalar::pow_int(BigRational(1, 2), k);
    return Vec{v, n % 2 == 1 ? alt_harmonic(k) : Scalar(0)};
  };
  s.term_f64 = [](Index n) {
    Index k = (n + 1) / 2;
    double v = std::pow(0.5, double(k));
    return std::vector<double>{v, n % 2 == 1 ? alt_harmonic_f64(k) : 0.0};
  };
  auto xtail = [](Index N) {
    Index j = (N + 1) / 2;
    Scalar v = Scalar::pow_int(BigRational(1, 2), j);
    // after an odd index the second copy of v_j is still outstanding
    return (N % 2 == 1 ? Scalar(3) : Scalar(2)) * v;
  };
  s.direction_tags = {abs_tag(Vec{Scalar(1), Scalar(0)}, xtail, xtail),
                      cond_tag(Vec{Scalar(0), Scalar(1)})};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true, false};
  e.documented_facts = {{"achievement-set", "(0,2)xR plus corners (0,0) and (2, log 2)"},
                        {"X", "1"},
                        {"Y", "log 2"}};
  return e;
}

CatalogEntry open_plane() {
  CatalogEntry e;
  e.name = "open-plane";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  // (v_1, w_1), (v_1, 0), (-v_1, w_2), (-v_1, 0), (v_2, w_3), ...
  s.term = [](Index n) {
    Index k = (n + 3) / 4;                   // v-block
    bool neg = ((n - 1) / 2) % 2 == 1;       // slots 3,4 mod 4 carry -v_k
    Scalar v = Scalar::pow_int(BigRational(1, 2), k);
    if (neg) v = -v;
    Scalar w(0);
    if (n % 2 == 1) w = alt_harmonic((n + 1) / 2);
    return Vec{v, w};
  };
  s.term_f64 = [](Index n) {
    Index k = (n + 3) / 4;
    bool neg = ((n - 1) / 2) % 2 == 1;
    double v = std::pow(0.5, double(k));
    if (neg) v = -v;
    double w = (n % 2 == 1) ? alt_harmonic_f64((n + 1) / 2) : 0.0;
    return std::vector<double>{v, w};
  };
  auto xtail = [](Index N) {
    Index j = N / 4;
    Index rem = N % 4;
    Scalar v = Scalar::pow_int(BigRational(1, 2), j + 1);
    return Scalar(4 - rem) * v + Scalar(4) * Scalar::pow_int(BigRational(1, 2), j + 1);
  };
  auto xremainder = [](Index N) {
    Index rem = N % 4;
    Index j = N / 4;
    Scalar v = Scalar::pow_int(BigRational(1, 2), j + 1);
    switch (rem) {
      case 1: return -v;
      case 2: return Scalar(-2) * v;
      case 3: return -v;
      default: return Scalar(0);
    }
  };
  s.direction_tags = {abs_tag(Vec{Scalar(1), Scalar(0)}, xtail, xremainder),
                      cond_tag(Vec{Scalar(0), Scalar(1)})};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {false, false};
  e.documented_facts = {{"achievement-set", "(-2,2)xR"}, {"X", "1"}};
  return e;
}

long long checked_pow10(long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    if (r > std::numeric_limits<long long>::max() / 10) return -1;
    r *= 10;
  }
  return r;
}

CatalogEntry liouville_entry(const GapSpec& gap) {
  CatalogEntry e;
  e.name = "liouville(" + gap.str() + ")";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;

  // block ends n_k with n_k - n_{k-1} = 2^(g(k)+1), clipped at int64 range
  auto ends = std::make_shared<std::vector<Index>>();
  ends->push_back(0);
  for (Index k = 1;; ++k) {
    long long g = gap.eval(k);
    if (g < 0 || g + 1 >= 62) break;
    Index len = Index(1) << (g + 1);
    Index prev = ends->back();
    if (prev > std::numeric_limits<Index>::max() - len) break;
    ends->push_back(prev + len);
    if (ends->size() > 64) break;
  }
  Index max_block = static_cast<Index>(ends->size()) - 1;
  if (max_block < 1) fail(Errc::LimitExceeded, "gap function grows too fast to represent");

  GapSpec g = gap;
  auto block_of = [ends](Index i) -> Index {
    for (std::size_t k = 1; k < ends->size(); ++k) {
      if (i <= (*ends)[k]) return static_cast<Index>(k);
    }
    fail(Errc::LimitExceeded, "index beyond representable blocks");
  };
  s.term = [g, block_of](Index i) {
    Index k = block_of(i);
    int sgn = (i % 2 == 0) ? 1 : -1;
    Scalar x = Scalar::ratio(sgn, 1) * Scalar::pow_int(BigRational(1, 2), g.eval(k));
    Scalar y = Scalar::ratio(sgn, 1) * Scalar::pow_int(BigRational(1, 2), k);
    return Vec{x, y};
  };
  s.term_f64 = [g, block_of](Index i) {
    Index k = block_of(i);
    double sgn = (i % 2 == 0) ? 1.0 : -1.0;
    return std::vector<double>{sgn * std::pow(2.0, -double(g.eval(k))),
                               sgn * std::pow(2.0, -double(k))};
  };
  BlockStructure bs;
  bs.block_end = [ends](Index k) -> Index {
    if (k < 0 || k >= static_cast<Index>(ends->size()))
      fail(Errc::LimitExceeded, "block index out of range");
    return (*ends)[static_cast<std::size_t>(k)];
  };
  bs.ray = [g](Index k) {
    return Vec{Scalar::pow_int(BigRational(1, 2), g.eval(k)),
               Scalar::pow_int(BigRational(1, 2), k)};
  };
  bs.max_block = max_block;
  s.blocks = bs;
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {false, false};

  if (gap.kind == GapSpec::Kind::AffineK) {
    // x_i = y_i / 2^c identically, so (2^c, -1) is a null functional.
    auto zero = [](Index) { return Scalar(0); };
    s.direction_tags = {abs_tag(Vec{Scalar(Scalar::pow2(gap.c)), Scalar(-1)}, zero, zero),
                        cond_tag(Vec{Scalar(0), Scalar(1)})};
    e.documented_facts = {{"degenerate", "terms satisfy x = y/2^" + std::to_string(gap.c)},
                          {"sum-range", "the line x = y/2^" + std::to_string(gap.c)}};
  } else {
    s.direction_tags = {cond_tag(Vec{Scalar(1), Scalar(0)}), cond_tag(Vec{Scalar(0), Scalar(1)})};
    e.documented_facts = {{"gamma", "{0}"}, {"sum-range", "R^2"}};
  }
  e.documented_facts.push_back({"block-length", "2^(g(k)+1) with g(k) = " + gap.str()});
  e.documented_facts.push_back({"blocks-representable", std::to_string(max_block)});
  return e;
}

CatalogEntry doubled_alt_harmonic_dyadic() {
  CatalogEntry e;
  e.name = "doubled-alt-harmonic-dyadic";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  // both slots of pair k carry the harmonic value; the dyadic part stays
  // injective across the doubled index space
  s.term = [](Index n) {
    Index k = (n + 1) / 2;
    return Vec{alt_harmonic(k), Scalar::pow_int(BigRational(1, 2), n)};
  };
  s.term_f64 = [](Index n) {
    Index k = (n + 1) / 2;
    return std::vector<double>{alt_harmonic_f64(k), std::pow(0.5, double(n))};
  };
  s.direction_tags = {cond_tag(Vec{Scalar(1), Scalar(0)}),
                      abs_tag(Vec{Scalar(0), Scalar(1)}, geom_tail_half, geom_tail_half)};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {false, true};
  e.documented_facts = {{"form", "absolutely convergent coordinate injective,"
                                 " conditionally convergent coordinate doubled"}};
  return e;
}

CatalogEntry doubled_cantor_graph() {
  CatalogEntry e;
  e.name = "doubled-cantor-graph";
  SeriesSpec& s = e.spec;
  s.name = e.name;
  s.dimension = 2;
  s.term = [](Index n) {
    Index k = (n + 1) / 2;
    return Vec{Scalar(2) * Scalar::pow_int(BigRational(1, 3), n), alt_harmonic(k)};
  };
  s.term_f64 = [](Index n) {
    Index k = (n + 1) / 2;
    return std::vector<double>{2.0 * std::pow(3.0, -double(n)), alt_harmonic_f64(k)};
  };
  s.direction_tags = {abs_tag(Vec{Scalar(1), Scalar(0)}, geom_tail_two_thirds, geom_tail_two_thirds),
                      cond_tag(Vec{Scalar(0), Scalar(1)})};
  s.has_null_subsequence_of_nonzero_terms = true;
  s.positive_coords = {true, false};
  e.documented_facts = {{"form", "absolutely convergent coordinate injective,"
                                 " conditionally convergent coordinate doubled"}};
  return e;
}

}  // namespace

long long GapSpec::eval(long long k) const {
  switch (kind) {
    case Kind::AffineK: return k + c;
    case Kind::QuadraticK: return k * k + c;
    case Kind::TowerK: {
      long long p = checked_pow10(k * k);
      return p;  // -1 signals overflow; callers treat it as unrepresentable
    }
  }
  return -1;
}

std::string GapSpec::str() const {
  switch (kind) {
    case Kind::AffineK: return "k+" + std::to_string(c);
    case Kind::QuadraticK: return "k^2+" + std::to_string(c);
    case Kind::TowerK: return "10^k^2";
  }
  return "?";
}

GapSpec GapSpec::parse(const std::string& s) {
  GapSpec g;
  if (s == "10^k^2" || s == "10^(k^2)") {
    g.kind = Kind::TowerK;
    return g;
  }
  auto make = [&](Kind kind, const std::string& rest) {
    g.kind = kind;
    g.c = std::stoll(rest);
    if (g.c < 0 || g.c > 60) fail(Errc::InvalidArgument, "gap offset out of range");
    return g;
  };
  if (s.rfind("k^2+", 0) == 0) return make(Kind::QuadraticK, s.substr(4));
  if (s.rfind("k+", 0) == 0) return make(Kind::AffineK, s.substr(2));
  fail(Errc::InvalidArgument, "unsupported gap function: " + s +
                                  " (expected k+c, k^2+c or 10^k^2)");
}

std::vector<std::string> catalog_names() {
  return {
      "geometric-half",
      "cantor-ternary",
      "alt-harmonic",
      "guthrie-nymann",
      "geometric-2d",
      "alt-harmonic-dyadic",
      "cantor-graph",
      "c0-truncated(4)",
      "open-corner",
      "open-plane",
      "liouville(k^2+3)",
      "liouville(k+3)",
      "doubled-alt-harmonic-dyadic",
      "doubled-cantor-graph",
  };
}

CatalogEntry catalog_get(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"example-3.1", "alt-harmonic-dyadic"},
      {"example-3.3", "c0-truncated(4)"},
      {"example-3.4", "cantor-graph"},
      {"example-4.3", "open-corner"},
      {"example-4.4", "open-plane"},
      {"example-3.8", "liouville(k^2+3)"},
      {"doubled-example-3.1", "doubled-alt-harmonic-dyadic"},
      {"doubled-example-3.4", "doubled-cantor-graph"},
      {"geometric-two-thirds", "cantor-ternary"},
      {"c0-truncated", "c0-truncated(4)"},
      {"liouville", "liouville(k^2+3)"},
  };
  std::string n = name;
  if (n.rfind("example-3.3(", 0) == 0) n = "c0-truncated" + n.substr(11);
  auto it = aliases.find(n);
  if (it != aliases.end()) n = it->second;

  if (n == "geometric-half") return geometric_half();
  if (n == "cantor-ternary") return cantor_ternary();
  if (n == "alt-harmonic") return alt_harmonic_entry();
  if (n == "guthrie-nymann") return guthrie_nymann();
  if (n == "geometric-2d") return geometric_2d();
  if (n == "alt-harmonic-dyadic") return alt_harmonic_dyadic();
  if (n == "cantor-graph") return cantor_graph();
  if (n == "open-corner") return open_corner();
  if (n == "open-plane") return open_plane();
  if (n == "doubled-alt-harmonic-dyadic") return doubled_alt_harmonic_dyadic();
  if (n == "doubled-cantor-graph") return doubled_cantor_graph();
  if (n.rfind("c0-truncated(", 0) == 0 && n.back() == ')') {
    return c0_truncated(std::stoll(n.substr(13, n.size() - 14)));
  }
  if (n.rfind("liouville(", 0) == 0 && n.back() == ')') {
    return liouville_entry(GapSpec::parse(n.substr(10, n.size() - 11)));
  }
  fail(Errc::UnknownEntry, "no catalog entry named '" + name + "'");
}

}  // namespace subsum
