#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "punctnet/graph.hpp"
#include "punctnet/ingest.hpp"
#include "punctnet/metrics.hpp"

namespace punctnet {

/// Five log-spaced sample sizes from 10^3 to 10^5.
std::vector<std::size_t> default_sample_sizes();

struct SamplingPlan {
  std::vector<std::size_t> sizes = default_sample_sizes();
  std::size_t m = 100;  ///< realizations per size
  std::uint64_t seed = 0;
  /// Items whose local metrics are tracked; empty means the ten top-ranked.
  std::vector<std::string> targets;
  /// Sample size used for scatter_data().
  std::size_t scatter_size = 10000;

  /// Throws ConfigError unless m >= 2 and every size s satisfies
  /// 2 <= s <= corpus_length / 10.
  void validate(std::size_t corpus_length) const;
};

/// Start offsets of the m substrings drawn for one sample size.
struct SampleSet {
  std::size_t size = 0;
  std::vector<std::size_t> offsets;
};

/// Offsets drawn uniformly with replacement; the corpus is a ring, so every
/// offset yields a full-length substring. Size i uses seed stream
/// (plan.seed, Sampling, i).
std::vector<SampleSet> sample_substrings(std::size_t corpus_length, const SamplingPlan& plan);
SampleSet sample_offsets(std::size_t corpus_length, std::size_t size, std::size_t m,
                         std::uint64_t seed, std::uint64_t index);

/// Tokens [offset, offset + length) of the corpus read as a ring.
std::vector<Token> ring_slice(const Corpus& corpus, std::size_t offset, std::size_t length);

/// Adjacency network of a ring substring. When the substring wraps, the
/// artificial link between the last and first corpus tokens is left out.
AdjacencyGraph window_graph(const EncodedCorpus& corpus, std::size_t offset, std::size_t length);

/// Uniform random permutation of the token sequence (Fisher-Yates).
Corpus shuffle_null(const Corpus& corpus, std::uint64_t seed);
EncodedCorpus shuffle_null(const EncodedCorpus& corpus, std::uint64_t seed);

/// The `count` top-ranked surfaces of the corpus (marks included).
std::vector<std::string> top_ranked(const Corpus& corpus, std::size_t count = 10);

/// Mean and standard error (sample std / sqrt(count)) of l_i and C_i.
struct MetricSample {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::size_t s = 0;
  double mean_aspl = 0.0;
  double se_aspl = 0.0;
  double mean_lcc = 0.0;
  double se_lcc = 0.0;
  std::size_t realizations = 0;  ///< networks that contained the item
  std::size_t skipped = 0;       ///< networks where it was absent or isolated
};

/// Per-target l_i and C_i over the windows of one sample set.
std::vector<MetricSample> window_metrics(const EncodedCorpus& corpus,
                                         std::span<const std::string> targets,
                                         const SampleSet& windows, unsigned threads = 0);

/// window_metrics() for every size of the plan (metric-vs-s curves).
std::vector<MetricSample> metric_vs_size(const Corpus& corpus, const SamplingPlan& plan,
                                         unsigned threads = 0);

struct ScatterRow {
  MetricSample empirical;
  MetricSample null_model;
  std::optional<double> aspl_ratio;  ///< empirical / null mean l_i
  std::optional<double> lcc_ratio;   ///< empirical / null mean C_i
};

/// Empirical means over plan.m windows of size plan.scatter_size, and null
/// means over `null_realizations` shuffled corpora, each sampled through the
/// same windows. Throws DataError when a target is not in the corpus.
std::vector<ScatterRow> scatter_data(const Corpus& corpus, const SamplingPlan& plan,
                                     std::size_t null_realizations, unsigned threads = 0);

/// Same, with an explicit null corpus sampled through the empirical windows
/// (a corpus used as its own null gives ratios of exactly 1).
std::vector<ScatterRow> scatter_against(const Corpus& corpus, const Corpus& null_corpus,
                                        const SamplingPlan& plan, unsigned threads = 0);

/// Exponent gamma of C^R ~ (l^R)^gamma over the null-model rows, by least
/// squares in log-log space; nullopt with fewer than two usable rows.
std::optional<double> null_power_law_exponent(std::span<const ScatterRow> rows);

struct RemovalRow {
  std::size_t rank = 0;  ///< 0 is the complete network
  std::string surface;   ///< removed item; empty for rank 0
  std::size_t n = 0;
  std::size_t e = 0;
  std::optional<double> L;
  std::optional<double> L_over_ln_n;
  double C = 0.0;
  std::optional<double> r;
  std::optional<double> L_null;
  std::optional<double> C_null;
  std::optional<double> r_null;
  std::optional<double> lambda;
  std::optional<double> kappa;
  std::optional<double> rho;
  bool disconnected = false;
  std::size_t null_realizations = 0;
};

struct RemovalSweep {
  std::vector<RemovalRow> rows;
};

struct RemovalOptions {
  std::size_t max_rank = 10;
  std::size_t null_realizations = 100;
  GlobalOptions global;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// Global L, C and r of the complete network and of the networks without
/// the item of rank R = 1..max_rank, each divided by the mean over shuffled
/// corpora with the same item removed. Throws DataError when the corpus has
/// fewer than max_rank distinct items.
RemovalSweep removal_sweep(const Corpus& corpus, const RemovalOptions& options);

struct FreqDegreeRow {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::uint64_t frequency = 0;
  std::size_t degree = 0;
  std::uint64_t weighted_degree = 0;
  double degree_over_frequency = 0.0;
  bool ratio_above_one = false;
};

/// Raw f_i and k_i of each target with the ratio k_i / f_i. Throws
/// DataError for targets missing from the graph.
std::vector<FreqDegreeRow> freq_vs_degree(const AdjacencyGraph& g,
                                          std::span<const std::string> targets);

std::string metric_samples_csv(std::span<const MetricSample> rows);
std::string scatter_csv(std::span<const ScatterRow> rows);
std::string removal_sweep_csv(const RemovalSweep& sweep);
std::string freq_degree_csv(std::span<const FreqDegreeRow> rows);

}  // namespace punctnet
