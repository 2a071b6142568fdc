#include "subsum/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace subsum {

void RunConfig::apply(const Json& j) {
  if (j.contains("enum_depth_limit")) enum_limits.depth_limit = j["enum_depth_limit"];
  if (j.contains("prefix_parallel_depth")) enum_limits.prefix_depth = j["prefix_parallel_depth"];
  if (j.contains("threads")) enum_limits.threads = j["threads"];
  if (j.contains("float_dedup_grid_log2"))
    enum_limits.dedup_grid = std::ldexp(1.0, j["float_dedup_grid_log2"].get<int>());
  if (j.contains("search_depth_limit")) search_limits.depth_limit = j["search_depth_limit"];
  if (j.contains("search_budget")) search_limits.budget = j["search_budget"];
  if (j.contains("witness_eps")) witness_eps = j["witness_eps"];
  if (j.contains("output_format")) output_format = j["output_format"];
  if (j.contains("sum_depth")) sum_depth = j["sum_depth"];
  if (j.contains("window")) {
    const Json& w = j["window"];
    Box b;
    std::vector<Scalar> lo, hi;
    for (const auto& x : w[0]) lo.push_back(scalar_from_json(x));
    for (const auto& x : w[1]) hi.push_back(scalar_from_json(x));
    b.lo = Vec(lo);
    b.hi = Vec(hi);
    for (std::size_t c = 0; c < b.dim(); ++c)
      if (b.hi[c] < b.lo[c]) fail(Errc::InvalidArgument, "window has min > max");
    window = b;
  }
  if (enum_limits.depth_limit <= 0 || search_limits.depth_limit <= 0 ||
      search_limits.budget <= 0 || witness_eps <= 0)
    fail(Errc::InvalidArgument, "config limits must be positive");
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidArgument, "cannot open config file " + path);
  Json j = Json::parse(in);
  RunConfig c;
  c.apply(j);
  return c;
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_number_float()) return Scalar(j.get<double>());
  return Scalar::parse(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (std::size_t c = 0; c < v.dim(); ++c) a.push_back(scalar_to_json(v[c]));
  return a;
}

Vec vec_from_json(const Json& j) {
  std::vector<Scalar> xs;
  for (const auto& x : j) xs.push_back(scalar_from_json(x));
  return Vec(std::move(xs));
}

Json selection_to_json(const Selection& s) {
  Json j;
  j["mode"] = s.is_finite() ? "finite" : "eventually-patterned";
  j["finite_support"] = s.support();
  Json pats = Json::array();
  for (const auto& p : s.patterns())
    pats.push_back({{"start", p.start}, {"modulus", p.modulus}, {"residue", p.residue}});
  j["tail_patterns"] = pats;
  return j;
}

Selection selection_from_json(const Json& j) {
  std::vector<Index> sup = j.value("finite_support", std::vector<Index>{});
  std::vector<TailPattern> pats;
  for (const auto& p : j.value("tail_patterns", Json::array()))
    pats.push_back(TailPattern{p["start"], p["modulus"], p["residue"]});
  if (pats.empty()) return Selection::finite(std::move(sup));
  return Selection::patterned(std::move(sup), std::move(pats));
}

Json series_to_json(const SeriesSpec& spec, Index explicit_terms) {
  Json j;
  j["dimension"] = spec.dimension;
  if (explicit_terms == 0 && !spec.name.empty()) {
    j["catalog"] = spec.name;
    return j;
  }
  Index count = explicit_terms;
  if (count == 0 && spec.nonzero_count) count = *spec.nonzero_count;
  if (count == 0) fail(Errc::InvalidArgument, "explicit serialization needs a term count");
  Json terms = Json::array();
  for (Index n = 1; n <= count; ++n) terms.push_back(vec_to_json(spec.term(n)));
  j["terms"] = terms;
  j["monotone_nonincreasing_abs"] = spec.monotone_nonincreasing_abs;
  j["has_null_subsequence_of_nonzero_terms"] = spec.has_null_subsequence_of_nonzero_terms;
  if (spec.inf_nonzero_norm) j["inf_nonzero_norm"] = scalar_to_json(*spec.inf_nonzero_norm);
  Json tags = Json::array();
  for (const auto& t : spec.direction_tags) {
    Json tj;
    tj["functional"] = vec_to_json(t.functional);
    tj["tag"] = t.tag == ConvergenceTag::AbsolutelyConvergent      ? "absolutely-convergent"
                : t.tag == ConvergenceTag::ConditionallyConvergent ? "conditionally-convergent"
                                                                   : "potentially-conditionally-divergent";
    tags.push_back(tj);
  }
  j["direction_tags"] = tags;
  return j;
}

SeriesSpec series_from_json(const Json& j) {
  if (j.contains("catalog")) return catalog_get(j["catalog"].get<std::string>()).spec;

  SeriesSpec s;
  s.dimension = j["dimension"];
  auto terms = std::make_shared<std::vector<Vec>>();
  for (const auto& t : j["terms"]) terms->push_back(vec_from_json(t));
  const std::size_t m = static_cast<std::size_t>(s.dimension);
  for (const auto& t : *terms)
    if (t.dim() != m) fail(Errc::InvalidArgument, "term dimension mismatch");
  s.term = [terms, m](Index n) {
    if (n >= 1 && n <= static_cast<Index>(terms->size()))
      return (*terms)[static_cast<std::size_t>(n - 1)];
    return Vec::zero(m);
  };
  Index nz = 0;
  for (const auto& t : *terms)
    if (!t.is_zero()) ++nz;
  s.nonzero_count = nz;
  // finite series: exact tails are just the remaining |term| sums
  auto tail = [terms, m](Index N) {
    Scalar acc(0);
    for (Index i = N + 1; i <= static_cast<Index>(terms->size()); ++i)
      acc += (*terms)[static_cast<std::size_t>(i - 1)].sup_norm();
    return acc;
  };
  s.tail_norm_bound = tail;
  s.selection_tail_bound = tail;
  if (s.dimension == 1) {
    s.exact_abs_tail = tail;
    s.kakeya_regime = KakeyaRegime{static_cast<Index>(terms->size()), KakeyaBeyond::AlwaysAtMost};
  }
  s.positive_coords.assign(m, true);
  for (const auto& t : *terms)
    for (std::size_t c = 0; c < m; ++c)
      if (t[c].sign() < 0) s.positive_coords[c] = false;
  s.monotone_nonincreasing_abs = j.value("monotone_nonincreasing_abs", false);
  s.has_null_subsequence_of_nonzero_terms =
      j.value("has_null_subsequence_of_nonzero_terms", false);
  if (j.contains("inf_nonzero_norm")) s.inf_nonzero_norm = scalar_from_json(j["inf_nonzero_norm"]);
  for (const auto& tj : j.value("direction_tags", Json::array())) {
    DirectionTag t;
    t.functional = vec_from_json(tj["functional"]);
    std::string tag = tj["tag"];
    t.tag = tag == "absolutely-convergent"      ? ConvergenceTag::AbsolutelyConvergent
            : tag == "conditionally-convergent" ? ConvergenceTag::ConditionallyConvergent
                                                : ConvergenceTag::PotentiallyConditionallyDivergent;
    s.direction_tags.push_back(std::move(t));
  }
  return s;
}

Json kakeya_to_json(const KakeyaClass& k) {
  Json j;
  j["label"] = kakeya_label_name(k.label);
  Json w = Json::array();
  for (const auto& c : k.witness) {
    w.push_back({{"n", c.n},
                 {"abs_term", scalar_to_json(c.abs_term)},
                 {"tail", scalar_to_json(c.tail)},
                 {"cmp", c.cmp}});
  }
  j["evidence"] = {{"comparisons", w},
                   {"eventual_index", k.eventual_index},
                   {"beyond", k.beyond == KakeyaBeyond::AlwaysGreater  ? "always-greater"
                              : k.beyond == KakeyaBeyond::AlwaysAtMost ? "always-at-most"
                                                                       : "mixed"}};
  return j;
}

Json sum_range_to_json(const SumRange& sr) {
  Json j;
  j["base"] = vec_to_json(sr.base_point);
  Json dirs = Json::array();
  for (const auto& d : sr.directions) dirs.push_back(vec_to_json(d));
  j["directions"] = dirs;
  return j;
}

Json gamma_to_json(const ConvergenceFunctionals& g) {
  Json j;
  j["mode"] = g.mode == ConvergenceFunctionals::Mode::Declared ? "declared" : "heuristic";
  Json gb = Json::array(), pb = Json::array();
  for (const auto& v : g.gamma_basis) gb.push_back(vec_to_json(v));
  for (const auto& v : g.gamma_perp_basis) pb.push_back(vec_to_json(v));
  j["gamma_basis"] = gb;
  j["gamma_perp_basis"] = pb;
  return j;
}

Json plan_to_json(const RearrangementPlan& p) {
  Json j;
  j["target"] = p.target;
  j["order"] = p.order;
  j["partial_sums"] = p.partial_sums;
  j["final_error"] = Scalar(p.final_error).str();
  j["status"] =
      p.status == RearrangementPlan::Status::Converged ? "converged" : "budget-exhausted";
  return j;
}

Json pi03_to_json(const Pi03Blocks& b) {
  Json j;
  j["v"] = b.v;
  Json blocks = Json::array();
  for (std::size_t n = 0; n < b.F.size(); ++n) {
    blocks.push_back({{"F", b.F[n]},
                      {"H", b.H[n]},
                      {"after_F", scalar_to_json(b.after_F[n])},
                      {"after_H", scalar_to_json(b.after_H[n])}});
  }
  j["blocks"] = blocks;
  return j;
}

Json liouville_to_json(const LiouvilleReport& r) {
  Json j;
  j["k0"] = r.k0;
  j["K"] = r.K;
  j["r"] = r.r;
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"m", b.m},
                      {"y_block_sum", scalar_to_json(b.y_block_sum)},
                      {"excess", b.excess.str()},
                      {"x_block_sum", scalar_to_json(b.x_block_sum)},
                      {"bound", scalar_to_json(b.bound)}});
  }
  j["blocks"] = blocks;
  j["p0"] = r.p0.str();
  j["q0_log2"] = r.q0_log2;
  j["p0_over_q0"] = scalar_to_json(r.p0_over_q0);
  j["x_partial"] = scalar_to_json(r.x_partial);
  j["finite_bound"] = scalar_to_json(r.finite_bound);
  j["finite_cert_ok"] = r.finite_cert_ok;
  j["gap_ok"] = r.gap_ok;
  j["asymptotic_ok"] = r.asymptotic_ok;
  if (r.gap_ok) j["asymptotic_bound"] = scalar_to_json(r.asymptotic_bound);
  return j;
}

Json section_to_json(const SectionWitness& w) {
  Json j;
  j["tau"] = w.tau;
  j["selection"] = selection_to_json(w.sel);
  j["achieved_x"] = w.achieved_x;
  j["achieved_y"] = w.achieved_y;
  return j;
}

// ---- CSV / raster ----------------------------------------------------------

std::string enumerate_to_csv(const std::vector<ValueGroup>& groups) {
  std::ostringstream out;
  if (groups.empty()) return "multiplicity\n";
  const std::size_t m = groups.front().value.dim();
  for (std::size_t c = 0; c < m; ++c) out << "value_" << c << ",";
  out << "multiplicity\n";
  for (const auto& g : groups) {
    for (std::size_t c = 0; c < m; ++c) out << g.value[c].str() << ",";
    out << g.multiplicity << "\n";
  }
  return out.str();
}

std::string cover_to_csv(const BoxCover& cover) {
  std::ostringstream out;
  std::size_t m = cover.boxes.empty() ? 0 : cover.boxes.front().dim();
  for (std::size_t c = 0; c < m; ++c) out << "center_" << c << ",";
  for (std::size_t c = 0; c < m; ++c) out << "halfwidth_" << c << (c + 1 < m ? "," : "");
  out << "\n";
  for (const auto& b : cover.boxes) {
    Vec c = b.center(), h = b.halfwidth();
    for (std::size_t i = 0; i < m; ++i) out << c[i].str() << ",";
    for (std::size_t i = 0; i < m; ++i) out << h[i].str() << (i + 1 < m ? "," : "");
    out << "\n";
  }
  return out.str();
}

namespace {

Box cover_bbox(const BoxCover& cover) {
  if (cover.boxes.empty()) fail(Errc::InvalidArgument, "empty cover has no extent");
  Box b = cover.boxes.front();
  for (const auto& x : cover.boxes) {
    for (std::size_t c = 0; c < b.dim(); ++c) {
      b.lo[c] = min(b.lo[c], x.lo[c]);
      b.hi[c] = max(b.hi[c], x.hi[c]);
    }
  }
  return b;
}

struct Frame {
  double x0, x1, y0, y1;
};

Frame render_frame(const BoxCover& cover, const std::optional<Box>& window) {
  Box b = window ? *window : cover_bbox(cover);
  Frame f{b.lo[0].to_double(), b.hi[0].to_double(), 0, 1};
  if (b.dim() >= 2) {
    f.y0 = b.lo[1].to_double();
    f.y1 = b.hi[1].to_double();
  }
  if (f.x1 <= f.x0) f.x1 = f.x0 + 1;
  if (f.y1 <= f.y0) f.y1 = f.y0 + 1;
  return f;
}

}  // namespace

std::string cover_to_pgm(const BoxCover& cover, int width, int height,
                         const std::optional<Box>& window) {
  if (width <= 0 || height <= 0) fail(Errc::InvalidArgument, "bad raster size");
  Frame f = render_frame(cover, window);
  std::vector<unsigned char> px(static_cast<std::size_t>(width) * height, 255);
  const double dx = (f.x1 - f.x0) / width, dy = (f.y1 - f.y0) / height;
  const bool two_d = !cover.boxes.empty() && cover.boxes.front().dim() >= 2;
  for (const auto& b : cover.boxes) {
    double blo = b.lo[0].to_double(), bhi = b.hi[0].to_double();
    double blo2 = two_d ? b.lo[1].to_double() : 0.0;
    double bhi2 = two_d ? b.hi[1].to_double() : 1.0;
    int i0 = std::max(0, static_cast<int>(std::floor((blo - f.x0) / dx)));
    int i1 = std::min(width - 1, static_cast<int>(std::floor((bhi - f.x0) / dx)));
    int j0 = std::max(0, static_cast<int>(std::floor((blo2 - f.y0) / dy)));
    int j1 = std::min(height - 1, static_cast<int>(std::floor((bhi2 - f.y0) / dy)));
    for (int j = j0; j <= j1; ++j)
      for (int i = i0; i <= i1; ++i)
        px[static_cast<std::size_t>(height - 1 - j) * width + i] = 0;
  }
  std::ostringstream out;
  out << "P5\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
  return out.str();
}

std::string cover_to_svg(const BoxCover& cover, int width, int height,
                         const std::optional<Box>& window) {
  if (width <= 0 || height <= 0) fail(Errc::InvalidArgument, "bad raster size");
  Frame f = render_frame(cover, window);
  const double sx = width / (f.x1 - f.x0), sy = height / (f.y1 - f.y0);
  const bool two_d = !cover.boxes.empty() && cover.boxes.front().dim() >= 2;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  for (const auto& b : cover.boxes) {
    double x = (b.lo[0].to_double() - f.x0) * sx;
    double w = (b.hi[0].to_double() - b.lo[0].to_double()) * sx;
    double y0v = two_d ? b.lo[1].to_double() : 0.0;
    double y1v = two_d ? b.hi[1].to_double() : 1.0;
    double y = height - (y1v - f.y0) * sy;
    double h = (y1v - y0v) * sy;
    out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << std::max(w, 0.1)
        << "\" height=\"" << std::max(h, 0.1) << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::optional<Box> parse_window(const std::string& text, std::size_t dim) {
  if (text.empty()) return std::nullopt;
  std::vector<std::pair<Scalar, Scalar>> axes;
  std::stringstream ss(text);
  std::string axis;
  while (std::getline(ss, axis, ';')) {
    auto comma = axis.find(',');
    if (comma == std::string::npos) fail(Errc::InvalidArgument, "window axis needs lo,hi");
    Scalar lo = Scalar::parse(axis.substr(0, comma));
    Scalar hi = Scalar::parse(axis.substr(comma + 1));
    if (hi < lo) fail(Errc::InvalidArgument, "window has min > max");
    axes.emplace_back(lo, hi);
  }
  if (axes.size() != dim) fail(Errc::InvalidArgument, "window dimension mismatch");
  Box b;
  std::vector<Scalar> lo, hi;
  for (auto& [l, h] : axes) {
    lo.push_back(l);
    hi.push_back(h);
  }
  b.lo = Vec(lo);
  b.hi = Vec(hi);
  return b;
}

// ---- CLI -------------------------------------------------------------------

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(Errc::InvalidArgument, "cannot write " + out_path);
    f << text;
  }
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

Vec parse_point(const std::string& text, std::size_t dim) {
  std::vector<Scalar> xs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) xs.push_back(Scalar::parse(part));
  if (xs.size() != dim) fail(Errc::InvalidArgument, "target dimension mismatch");
  return Vec(std::move(xs));
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"achievement sets and sum ranges of convergent series"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override file values");

  std::string series, out_path, window_text, target_text, vtext, gap_text = "k+3";
  Index depth = 10;
  double tol = 1e-3, eps = 0, target1 = 0;
  long long rpow = 1, k0 = 1;
  int threads = 0;
  std::string resolution = "512x512";
  bool kakeya = false, cardinality = false, require_asymptotic = false;

  auto add_series = [&](CLI::App* cmd) {
    cmd->add_option("--series", series, "catalog series name")->required();
  };

  auto* cat = app.add_subcommand("catalog", "list or show catalog entries");
  auto* cat_list = cat->add_subcommand("list", "print the published names");
  auto* cat_show = cat->add_subcommand("show", "show one entry");
  std::string show_name;
  cat_show->add_option("name", show_name, "entry name")->required();
  cat->require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "topological / cardinality classification");
  add_series(classify);
  classify->add_flag("--kakeya", kakeya, "interval-vs-Cantor dichotomy");
  classify->add_flag("--cardinality", cardinality, "cardinality class");

  auto* enumerate = app.add_subcommand("enumerate", "exact depth-N subsums");
  add_series(enumerate);
  enumerate->add_option("--depth", depth)->required();
  enumerate->add_option("--out", out_path);

  auto* cover = app.add_subcommand("cover", "box cover of the achievement set");
  add_series(cover);
  cover->add_option("--depth", depth)->required();
  cover->add_option("--window", window_text, "lo,hi per axis, ';'-separated");
  cover->add_option("--out", out_path)->required();

  auto* render = app.add_subcommand("render", "rasterize a box cover");
  add_series(render);
  render->add_option("--depth", depth)->required();
  render->add_option("--resolution", resolution, "WxH");
  render->add_option("--window", window_text);
  render->add_option("--out", out_path)->required();

  auto* rearrange = app.add_subcommand("rearrange", "greedy rearrangement onto a target");
  add_series(rearrange);
  rearrange->add_option("--target", target1)->required();
  rearrange->add_option("--tol", tol);
  rearrange->add_option("--out", out_path);

  auto* sumrange = app.add_subcommand("sumrange", "base point plus annihilator directions");
  add_series(sumrange);

  auto* witness = app.add_subcommand("witness", "constructive membership witnesses");
  auto* wd = witness->add_subcommand("density", "product-form density witness");
  auto* wo = witness->add_subcommand("openset", "open achievement set witness");
  auto* ws = witness->add_subcommand("section", "rearranged section witness");
  for (auto* w : {wd, wo, ws}) {
    w->add_option("--series", series)->required();
    w->add_option("--target", target_text, "x,y")->required();
    w->add_option("--eps", eps);
    w->add_option("--out", out_path);
  }
  witness->require_subcommand(1);

  auto* pi03 = app.add_subcommand("pi03", "oscillation block construction");
  pi03->add_option("--v", vtext, "comma-separated naturals")->required();
  pi03->add_option("--series", series);
  pi03->add_option("--out", out_path);

  auto* lch = app.add_subcommand("liouville-check", "exact block inequality chain");
  lch->add_option("--gap", gap_text, "k+c, k^2+c or 10^k^2");
  lch->add_option("--r", rpow);
  lch->add_option("--k0", k0);
  lch->add_flag("--require-asymptotic", require_asymptotic);
  lch->add_option("--out", out_path);

  app.add_option("--threads", threads, "enumeration threads (0 = hardware)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dummy;
    int code = app.exit(e, dummy, dummy);
    if (code == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = RunConfig::from_file(config_path);
    if (threads > 0) cfg.enum_limits.threads = threads;
    if (eps <= 0) eps = cfg.witness_eps;

    if (cat_list->parsed()) {
      Json j = catalog_names();
      emit_json(j, "");
      return 0;
    }
    if (cat_show->parsed()) {
      CatalogEntry e = catalog_get(show_name);
      Json j;
      j["name"] = e.name;
      j["dimension"] = e.spec.dimension;
      Json facts = Json::array();
      for (auto& [k, v] : e.documented_facts) facts.push_back({{"claim", k}, {"value", v}});
      j["documented_facts"] = facts;
      Json head = Json::array();
      for (Index n = 1; n <= 8; ++n) head.push_back(vec_to_json(e.spec.term(n)));
      j["leading_terms"] = head;
      emit_json(j, "");
      return 0;
    }
    if (classify->parsed()) {
      CatalogEntry e = catalog_get(series);
      Json j;
      if (cardinality && !kakeya) {
        j["label"] = cardinality_label_name(cardinality_class(e.spec));
        j["mode"] = "declared";
      } else {
        j = kakeya_to_json(kakeya_classify(e.spec));
        j["mode"] = "declared";
      }
      emit_json(j, "");
      return 0;
    }
    if (enumerate->parsed()) {
      CatalogEntry e = catalog_get(series);
      auto groups = enumerate_exact(e.spec, depth, cfg.enum_limits);
      emit(enumerate_to_csv(groups), out_path);
      return 0;
    }
    if (cover->parsed() || render->parsed()) {
      CatalogEntry e = catalog_get(series);
      auto window = window_text.empty()
                        ? cfg.window
                        : parse_window(window_text, static_cast<std::size_t>(e.spec.dimension));
      BoxCover c = box_cover(e.spec, depth, window, cfg.enum_limits);
      if (cover->parsed()) {
        emit(cover_to_csv(c), out_path);
      } else {
        auto xpos = resolution.find('x');
        if (xpos == std::string::npos) fail(Errc::InvalidArgument, "resolution must be WxH");
        int w = std::stoi(resolution.substr(0, xpos));
        int h = std::stoi(resolution.substr(xpos + 1));
        bool svg = out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".svg";
        emit(svg ? cover_to_svg(c, w, h, window) : cover_to_pgm(c, w, h, window), out_path);
      }
      return 0;
    }
    if (rearrange->parsed()) {
      CatalogEntry e = catalog_get(series);
      RearrangementPlan p = riemann_rearrange(e.spec, Scalar(target1), Scalar(tol));
      emit_json(plan_to_json(p), out_path);
      return p.status == RearrangementPlan::Status::Converged ? 0 : 3;
    }
    if (sumrange->parsed()) {
      CatalogEntry e = catalog_get(series);
      emit_json(sum_range_to_json(sum_range(e.spec, cfg.sum_depth)), "");
      return 0;
    }
    if (wd->parsed()) {
      CatalogEntry e = catalog_get(series);
      Vec t = parse_point(target_text, static_cast<std::size_t>(e.spec.dimension));
      Selection sel = density_witness(e.spec, t, Scalar(eps), cfg.search_limits);
      Json j;
      j["selection"] = selection_to_json(sel);
      auto got = partial_sum_f64(e.spec, sel, sel.max_support().value_or(0));
      j["achieved"] = got;
      emit_json(j, out_path);
      return 0;
    }
    if (wo->parsed()) {
      OpenSetFamily fam = open_set_family_for(series);
      Vec t = parse_point(target_text, 2);
      Selection sel =
          open_set_witness(fam, t[0].to_double(), t[1].to_double(), eps, cfg.search_limits);
      Json j;
      j["selection"] = selection_to_json(sel);
      if (sel.is_finite()) {
        auto got = partial_sum_f64(fam.assembled, sel, sel.max_support().value_or(0));
        j["achieved"] = got;
      }
      emit_json(j, out_path);
      return 0;
    }
    if (ws->parsed()) {
      CatalogEntry e = catalog_get(series);
      Vec t = parse_point(target_text, 2);
      SectionWitness w = section_witness(e.spec, t[0], t[1], Scalar(eps), cfg.search_limits);
      emit_json(section_to_json(w), out_path);
      return 0;
    }
    if (pi03->parsed()) {
      std::vector<Index> v;
      std::stringstream ss(vtext);
      std::string part;
      while (std::getline(ss, part, ',')) v.push_back(std::stoll(part));
      CatalogEntry host = catalog_get(series.empty() ? "alt-harmonic" : series);
      emit_json(pi03_to_json(pi03_blocks(host.spec, v)), out_path);
      return 0;
    }
    if (lch->parsed()) {
      LiouvilleFamily fam = liouville_family(GapSpec::parse(gap_text));
      Selection all = Selection::all();
      LiouvilleReport rep =
          liouville_bound_check(fam, all, k0, rpow, 200000, require_asymptotic);
      emit_json(liouville_to_json(rep), out_path);
      return 0;
    }
    fail(Errc::InvalidArgument, "no subcommand matched");
  } catch (const Error& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace subsum
