#include "punctnet/rank_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <unordered_map>

#include "punctnet/error.hpp"

namespace punctnet {

using nlohmann::ordered_json;

std::vector<double> RankTable::probabilities() const {
  std::vector<double> p;
  p.reserve(entries.size());
  for (const auto& e : entries) p.push_back(e.probability);
  return p;
}

std::size_t RankTable::rank_of(std::string_view surface) const {
  for (const auto& e : entries)
    if (e.surface == surface) return e.rank;
  return 0;
}

std::uint64_t corpus_fingerprint(const Corpus& corpus) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (const auto& t : corpus.tokens) {
    for (char c : t.surface) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  return h;
}

RankTable build_rank_table(const Corpus& corpus, bool include_punct, bool fs_mode) {
  if (corpus.empty()) throw DataError("build_rank_table: empty corpus");

  struct Counter {
    std::string_view surface;
    TokenKind kind;
    std::uint64_t count;
  };
  std::vector<Counter> counters;
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(corpus.size() / 4 + 16);
  std::uint64_t total = 0;
  for (const auto& t : corpus.tokens) {
    TokenKind kind = t.kind;
    std::string_view surface = t.surface;
    if (!include_punct && is_mark(kind)) continue;
    if (fs_mode && is_sentence_end(kind)) {
      kind = TokenKind::FullStop;
      surface = canonical_surface(kind);
    }
    ++total;
    auto [it, inserted] = index.try_emplace(surface, counters.size());
    if (inserted) counters.push_back({surface, kind, 0});
    ++counters[it->second].count;
  }
  if (total == 0) throw DataError("build_rank_table: no tokens left after filtering marks");

  // counters are in first-occurrence order, so a stable sort breaks ties by it
  std::stable_sort(counters.begin(), counters.end(),
                   [](const Counter& a, const Counter& b) { return a.count > b.count; });

  RankTable table;
  table.total = total;
  table.source_id = corpus_fingerprint(corpus);
  table.entries.reserve(counters.size());
  const double denom = static_cast<double>(total);
  for (std::size_t i = 0; i < counters.size(); ++i) {
    const auto& c = counters[i];
    table.entries.push_back({std::string(c.surface), c.kind, c.count,
                             static_cast<double>(c.count) / denom, i + 1});
  }
  return table;
}

namespace {

FitRange resolve(FitRange range, std::size_t n) {
  if (range.r_max == 0) range.r_max = n;
  if (range.r_min < 1 || range.r_min >= range.r_max || range.r_max > n)
    throw DataError("fit range [" + std::to_string(range.r_min) + ", " +
                    std::to_string(range.r_max) + "] is not within ranks 1.." + std::to_string(n));
  if (range.r_max - range.r_min + 1 < kMinFitPoints)
    throw DataError("fit range holds fewer than " + std::to_string(kMinFitPoints) + " ranks");
  return range;
}

}  // namespace

FitResult fit_shifted_power_law(std::span<const double> probabilities, FitRange range, double c) {
  range = resolve(range, probabilities.size());
  if (!(c >= 0.0)) throw DataError("Zipf-Mandelbrot shift c must be non-negative");

  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(range.r_max - range.r_min + 1);
  ys.reserve(xs.capacity());
  for (std::size_t r = range.r_min; r <= range.r_max; ++r) {
    const double p = probabilities[r - 1];
    if (!(p > 0.0)) continue;
    xs.push_back(std::log(static_cast<double>(r) + c));
    ys.push_back(std::log(p));
  }
  if (xs.size() < kMinFitPoints)
    throw DataError("fit range holds fewer than " + std::to_string(kMinFitPoints) +
                    " ranks with non-zero probability");

  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (ys[i] - mean_y);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double res = ys[i] - (intercept + slope * xs[i]);
    rss += res * res;
  }

  FitResult fit;
  fit.alpha = -slope;
  fit.c = c;
  fit.amplitude = std::exp(intercept);
  fit.r_min = range.r_min;
  fit.r_max = range.r_max;
  fit.rss = rss;
  return fit;
}

FitResult fit_power_law(std::span<const double> probabilities, FitRange range) {
  return fit_shifted_power_law(probabilities, range, 0.0);
}

FitResult fit_power_law(const RankTable& table, FitRange range) {
  const auto p = table.probabilities();
  FitResult fit = fit_power_law(p, range);
  fit.source_id = table.source_id;
  return fit;
}

FitResult fit_zipf_mandelbrot(std::span<const double> probabilities, FitRange range,
                              const MandelbrotSearch& search) {
  if (!(search.c_max >= 0.0)) throw ConfigError("c_max must be non-negative");
  const double u_max = std::log1p(search.c_max);
  const std::size_t grid = (search.c_max == 0.0) ? 1 : std::max<std::size_t>(search.grid_points, 3);

  auto shift = [&](double u) { return u >= u_max ? search.c_max : std::expm1(u); };
  auto fit_at = [&](double u) { return fit_shifted_power_law(probabilities, range, shift(u)); };

  std::size_t best_k = 0;
  FitResult best = fit_at(0.0);
  std::vector<double> us(grid, 0.0);
  for (std::size_t k = 1; k < grid; ++k) {
    us[k] = u_max * static_cast<double>(k) / static_cast<double>(grid - 1);
    FitResult f = fit_at(us[k]);
    if (f.rss < best.rss) {
      best = f;
      best_k = k;
    }
  }

  if (grid > 1) {
    double a = us[best_k == 0 ? 0 : best_k - 1];
    double b = us[best_k + 1 >= grid ? grid - 1 : best_k + 1];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    FitResult f1 = fit_at(x1);
    FitResult f2 = fit_at(x2);
    while (b - a > search.tolerance) {
      if (f1.rss < f2.rss) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = fit_at(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = fit_at(x2);
      }
    }
    const FitResult& refined = f1.rss < f2.rss ? f1 : f2;
    if (refined.rss < best.rss) best = refined;
  }
  best.at_boundary = (best.c == 0.0) || (best.c == search.c_max);
  return best;
}

FitResult fit_zipf_mandelbrot(const RankTable& table, FitRange range,
                              const MandelbrotSearch& search) {
  const auto p = table.probabilities();
  FitResult fit = fit_zipf_mandelbrot(p, range, search);
  fit.source_id = table.source_id;
  return fit;
}

CComparison compare_c(const FitResult& with_punct, const FitResult& without_punct) {
  if (with_punct.source_id != without_punct.source_id)
    throw DataError("compare_c: fits come from different corpora");
  return {with_punct, without_punct, with_punct.c - without_punct.c};
}

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

ordered_json fit_to_json(const FitResult& fit) {
  ordered_json j;
  j["alpha"] = fit.alpha;
  j["c"] = fit.c;
  j["amplitude"] = fit.amplitude;
  j["r_min"] = fit.r_min;
  j["r_max"] = fit.r_max;
  j["rss"] = fit.rss;
  j["at_boundary"] = fit.at_boundary;
  return j;
}

}  // namespace

std::string rank_table_csv(const RankTable& table) {
  std::string out = "rank,surface,kind,frequency,probability\n";
  char prob[32];
  for (const auto& e : table.entries) {
    std::snprintf(prob, sizeof prob, "%.17g", e.probability);
    out += std::to_string(e.rank);
    out += ',';
    out += csv_field(e.surface);
    out += ',';
    out += kind_name(e.kind);
    out += ',';
    out += std::to_string(e.frequency);
    out += ',';
    out += prob;
    out += '\n';
  }
  return out;
}

std::string fit_result_json(const FitResult& fit) { return fit_to_json(fit).dump(2) + "\n"; }

std::string comparison_json(const CComparison& cmp) {
  ordered_json j;
  j["c_with_punct"] = cmp.with_punct.c;
  j["c_without_punct"] = cmp.without_punct.c;
  j["delta_c"] = cmp.delta_c;
  j["with_punct"] = fit_to_json(cmp.with_punct);
  j["without_punct"] = fit_to_json(cmp.without_punct);
  return j.dump(2) + "\n";
}

}  // namespace punctnet
