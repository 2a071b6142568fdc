#pragma once

#include "json.hpp"
#include "subsum/classify.hpp"
#include "subsum/construct.hpp"

namespace subsum {

using Json = nlohmann::json;

struct RunConfig {
  EnumLimits enum_limits;
  SearchLimits search_limits;
  double witness_eps = 1e-3;
  std::string output_format = "json";  // json | csv | pgm | svg
  std::optional<Box> window;
  Index sum_depth = 1'000'000;

  void apply(const Json& j);
  static RunConfig from_file(const std::string& path);
};

// ---- JSON ----------------------------------------------------------------

Json scalar_to_json(const Scalar& s);       // "p/q" or shortest float decimal
Scalar scalar_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json selection_to_json(const Selection& s);
Selection selection_from_json(const Json& j);

// Explicit (finite term list) or catalog-reference form; round-trips to an
// equal in-memory value on all mirrored fields.
Json series_to_json(const SeriesSpec& spec, Index explicit_terms = 0);
SeriesSpec series_from_json(const Json& j);

Json kakeya_to_json(const KakeyaClass& k);
Json sum_range_to_json(const SumRange& sr);
Json gamma_to_json(const ConvergenceFunctionals& g);
Json plan_to_json(const RearrangementPlan& p);
Json pi03_to_json(const Pi03Blocks& b);
Json liouville_to_json(const LiouvilleReport& r);
Json section_to_json(const SectionWitness& w);

// ---- CSV / raster ---------------------------------------------------------

std::string enumerate_to_csv(const std::vector<ValueGroup>& groups);
std::string cover_to_csv(const BoxCover& cover);

// P5 binary raster; a pixel is painted iff some cover box intersects it.
std::string cover_to_pgm(const BoxCover& cover, int width, int height,
                         const std::optional<Box>& window = std::nullopt);
std::string cover_to_svg(const BoxCover& cover, int width, int height,
                         const std::optional<Box>& window = std::nullopt);

std::optional<Box> parse_window(const std::string& text, std::size_t dim);

// ---- CLI -------------------------------------------------------------------

// Full command dispatcher; returns the process exit code (0 success,
// 1 usage, 2 domain error, 3 exhausted budget).
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace subsum
