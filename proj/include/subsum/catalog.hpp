#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subsum/series.hpp"

namespace subsum {

// Parameterized exponent families used by the block-interleaved entries.
struct GapSpec {
  enum class Kind { AffineK, QuadraticK, TowerK } kind = Kind::AffineK;
  long long c = 3;

  long long eval(long long k) const;
  // Ratio condition g(m+1) >= g(m) + m + 2 provable for the whole family.
  bool growth_certified() const { return kind != Kind::AffineK; }
  std::string str() const;
  static GapSpec parse(const std::string& s);  // "k+3", "k^2+3", "10^k^2"
};

struct CatalogEntry {
  std::string name;
  SeriesSpec spec;
  std::vector<std::pair<std::string, std::string>> documented_facts;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_get(const std::string& name);

}  // namespace subsum
