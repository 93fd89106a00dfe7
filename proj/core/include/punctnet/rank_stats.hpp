#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "punctnet/ingest.hpp"

namespace punctnet {

struct RankEntry {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::uint64_t frequency = 0;
  double probability = 0.0;
  std::size_t rank = 0;  ///< 1-based
};

/// Rank-frequency distribution. Entries are ordered by rank; frequency ties
/// are broken by first occurrence in the corpus.
struct RankTable {
  std::vector<RankEntry> entries;
  /// Number of counted tokens (the denominator of every probability).
  std::uint64_t total = 0;
  /// Fingerprint of the full token stream the table was built from.
  std::uint64_t source_id = 0;

  std::size_t size() const { return entries.size(); }
  std::vector<double> probabilities() const;
  /// 1-based rank of `surface`, or 0 when it is not in the table.
  std::size_t rank_of(std::string_view surface) const;
};

/// FNV-1a over the token surfaces; identifies the corpus a table came from.
std::uint64_t corpus_fingerprint(const Corpus& corpus);

/// Counts tokens and ranks them. Without `include_punct` marks are excluded
/// from both the counts and the denominator; `fs_mode` aggregates sentence
/// ends into #fs first. Throws DataError on an empty corpus (or on a corpus
/// with no words left after filtering).
RankTable build_rank_table(const Corpus& corpus, bool include_punct, bool fs_mode);

struct FitRange {
  std::size_t r_min = 1;
  std::size_t r_max = 0;  ///< 0 means "last rank"
};

struct FitResult {
  double alpha = 0.0;
  double c = 0.0;
  double amplitude = 0.0;
  std::size_t r_min = 0;
  std::size_t r_max = 0;
  double rss = 0.0;
  /// Minimum of the c search sits on the search boundary (0 or c_max).
  bool at_boundary = false;
  std::uint64_t source_id = 0;
};

/// Minimum number of ranks a fit range must contain.
inline constexpr std::size_t kMinFitPoints = 10;

/// Ordinary least squares of log P against log(R + c) for fixed c over the
/// range; ranks are 1-based indices into `probabilities`.
FitResult fit_shifted_power_law(std::span<const double> probabilities, FitRange range, double c);

/// Pure Zipf law (c = 0).
FitResult fit_power_law(std::span<const double> probabilities, FitRange range);
FitResult fit_power_law(const RankTable& table, FitRange range);

struct MandelbrotSearch {
  double c_max = 100.0;
  std::size_t grid_points = 64;
  /// Golden-section stops when the bracket in log(1 + c) is this narrow.
  double tolerance = 1e-3;
};

/// Zipf-Mandelbrot law: scans log(1 + c) on a grid over [0, c_max], refines
/// the best bracket by golden-section search and solves (alpha, amplitude)
/// in closed form at every trial c.
FitResult fit_zipf_mandelbrot(std::span<const double> probabilities, FitRange range,
                              const MandelbrotSearch& search = {});
FitResult fit_zipf_mandelbrot(const RankTable& table, FitRange range,
                              const MandelbrotSearch& search = {});

struct CComparison {
  FitResult with_punct;
  FitResult without_punct;
  double delta_c = 0.0;  ///< with - without
};

/// Throws DataError when the fits come from different corpora.
CComparison compare_c(const FitResult& with_punct, const FitResult& without_punct);

/// CSV with header rank,surface,kind,frequency,probability.
std::string rank_table_csv(const RankTable& table);

/// {"alpha","c","amplitude","r_min","r_max","rss"} plus "at_boundary".
std::string fit_result_json(const FitResult& fit);

std::string comparison_json(const CComparison& cmp);

}  // namespace punctnet
