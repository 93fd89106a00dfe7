#include "punctnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "punctnet/error.hpp"
#include "punctnet/parallel.hpp"
#include "punctnet/random.hpp"
#include "punctnet/rank_stats.hpp"

namespace punctnet {

std::vector<std::size_t> default_sample_sizes() { return {1000, 3162, 10000, 31623, 100000}; }

void SamplingPlan::validate(std::size_t corpus_length) const {
  if (m < 2) throw ConfigError("sampling plan needs m >= 2 realizations");
  if (sizes.empty()) throw ConfigError("sampling plan has no sample sizes");
  auto check = [&](std::size_t s) {
    if (s < 2) throw ConfigError("sample size must be at least 2 tokens");
    if (s > corpus_length / 10)
      throw ConfigError(fmt::format("sample size {} exceeds a tenth of the corpus length {}", s,
                                    corpus_length));
  };
  for (std::size_t s : sizes) check(s);
  check(scatter_size);
}

SampleSet sample_offsets(std::size_t corpus_length, std::size_t size, std::size_t m,
                         std::uint64_t seed, std::uint64_t index) {
  if (corpus_length == 0) throw DataError("cannot sample from an empty corpus");
  SampleSet set;
  set.size = size;
  set.offsets.reserve(m);
  Rng rng = make_rng(seed, SeedStream::Sampling, index);
  for (std::size_t j = 0; j < m; ++j)
    set.offsets.push_back(static_cast<std::size_t>(uniform_below(rng, corpus_length)));
  return set;
}

std::vector<SampleSet> sample_substrings(std::size_t corpus_length, const SamplingPlan& plan) {
  plan.validate(corpus_length);
  std::vector<SampleSet> out;
  out.reserve(plan.sizes.size());
  for (std::size_t i = 0; i < plan.sizes.size(); ++i)
    out.push_back(sample_offsets(corpus_length, plan.sizes[i], plan.m, plan.seed, i));
  return out;
}

std::vector<Token> ring_slice(const Corpus& corpus, std::size_t offset, std::size_t length) {
  if (corpus.empty()) throw DataError("ring_slice: empty corpus");
  std::vector<Token> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) out.push_back(corpus.tokens[(offset + k) % corpus.size()]);
  return out;
}

AdjacencyGraph window_graph(const EncodedCorpus& corpus, std::size_t offset, std::size_t length) {
  const std::size_t len = corpus.size();
  if (length > len) throw DataError("window longer than the corpus");
  offset %= len;
  std::vector<TermId> ids;
  ids.reserve(length);
  std::optional<std::size_t> seam;
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t pos = offset + k;
    if (pos == len && k > 0) seam = k;
    ids.push_back(corpus.ids[pos % len]);
  }
  return AdjacencyGraph::from_sequence(ids, corpus.vocabulary, false, seam);
}

Corpus shuffle_null(const Corpus& corpus, std::uint64_t seed) {
  Corpus out;
  out.language = corpus.language;
  out.tokens = corpus.tokens;
  Rng rng(seed);
  shuffle(std::span<Token>(out.tokens), rng);
  out.sources.push_back({"shuffled", 0, out.tokens.size()});
  return out;
}

EncodedCorpus shuffle_null(const EncodedCorpus& corpus, std::uint64_t seed) {
  EncodedCorpus out = corpus;
  Rng rng(seed);
  shuffle(std::span<TermId>(out.ids), rng);
  return out;
}

std::vector<std::string> top_ranked(const Corpus& corpus, std::size_t count) {
  const RankTable table = build_rank_table(corpus, true, false);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(count, table.size()); ++i)
    out.push_back(table.entries[i].surface);
  return out;
}

namespace {

struct LocalValues {
  double aspl;
  double lcc;
};

using TargetValues = std::vector<std::optional<LocalValues>>;

std::vector<std::optional<TermId>> resolve_terms(const Vocabulary& vocab,
                                                 std::span<const std::string> targets) {
  std::vector<std::optional<TermId>> out;
  out.reserve(targets.size());
  for (const auto& t : targets) out.push_back(vocab.find(t));
  return out;
}

TargetValues local_values(const AdjacencyGraph& g, std::span<const std::optional<TermId>> terms) {
  TargetValues out(terms.size());
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (!terms[t]) continue;
    const auto node = g.node_of(*terms[t]);
    if (!node) continue;
    const auto aspl = node_aspl(g, *node);
    if (!aspl) continue;
    out[t] = LocalValues{*aspl, node_lcc(g, *node)};
  }
  return out;
}

MetricSample summarize(const std::string& surface, std::size_t s,
                       const std::vector<TargetValues>& per_network, std::size_t target) {
  MetricSample out;
  out.surface = surface;
  out.kind = kind_of_surface(surface);
  out.s = s;
  double sum_l = 0.0;
  double sum_c = 0.0;
  for (const auto& values : per_network) {
    if (!values[target]) {
      ++out.skipped;
      continue;
    }
    sum_l += values[target]->aspl;
    sum_c += values[target]->lcc;
    ++out.realizations;
  }
  if (out.realizations == 0) return out;
  const double count = static_cast<double>(out.realizations);
  out.mean_aspl = sum_l / count;
  out.mean_lcc = sum_c / count;
  if (out.realizations > 1) {
    double ss_l = 0.0;
    double ss_c = 0.0;
    for (const auto& values : per_network) {
      if (!values[target]) continue;
      ss_l += (values[target]->aspl - out.mean_aspl) * (values[target]->aspl - out.mean_aspl);
      ss_c += (values[target]->lcc - out.mean_lcc) * (values[target]->lcc - out.mean_lcc);
    }
    out.se_aspl = std::sqrt(ss_l / (count - 1.0)) / std::sqrt(count);
    out.se_lcc = std::sqrt(ss_c / (count - 1.0)) / std::sqrt(count);
  }
  return out;
}

std::vector<MetricSample> summarize_all(std::span<const std::string> targets, std::size_t s,
                                        const std::vector<TargetValues>& per_network) {
  std::vector<MetricSample> out;
  out.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) out.push_back(summarize(targets[t], s, per_network, t));
  return out;
}

std::vector<std::string> resolve_targets(const Corpus& corpus, const SamplingPlan& plan) {
  return plan.targets.empty() ? top_ranked(corpus, 10) : plan.targets;
}

std::size_t scatter_index(const SamplingPlan& plan) {
  const auto it = std::find(plan.sizes.begin(), plan.sizes.end(), plan.scatter_size);
  return static_cast<std::size_t>(it - plan.sizes.begin());
}

std::optional<double> ratio(double num, double den, bool defined) {
  if (!defined || den == 0.0) return std::nullopt;
  return num / den;
}

std::vector<ScatterRow> combine(const std::vector<MetricSample>& empirical,
                                const std::vector<MetricSample>& null_model) {
  std::vector<ScatterRow> rows;
  rows.reserve(empirical.size());
  for (std::size_t t = 0; t < empirical.size(); ++t) {
    const bool defined = empirical[t].realizations > 0 && null_model[t].realizations > 0;
    rows.push_back({empirical[t], null_model[t],
                    ratio(empirical[t].mean_aspl, null_model[t].mean_aspl, defined),
                    ratio(empirical[t].mean_lcc, null_model[t].mean_lcc, defined)});
  }
  return rows;
}

void require_targets(const Vocabulary& vocab, std::span<const std::string> targets) {
  for (const auto& t : targets)
    if (!vocab.find(t)) throw DataError("target '" + t + "' does not occur in the corpus");
}

}  // namespace

std::vector<MetricSample> window_metrics(const EncodedCorpus& corpus,
                                         std::span<const std::string> targets,
                                         const SampleSet& windows, unsigned threads) {
  const auto terms = resolve_terms(*corpus.vocabulary, targets);
  std::vector<TargetValues> per_window(windows.offsets.size());
  parallel_for(windows.offsets.size(), threads, [&](std::size_t j, unsigned) {
    per_window[j] = local_values(window_graph(corpus, windows.offsets[j], windows.size), terms);
  });
  return summarize_all(targets, windows.size, per_window);
}

std::vector<MetricSample> metric_vs_size(const Corpus& corpus, const SamplingPlan& plan,
                                         unsigned threads) {
  const auto sets = sample_substrings(corpus.size(), plan);
  const auto targets = resolve_targets(corpus, plan);
  const EncodedCorpus encoded = encode(corpus);
  std::vector<MetricSample> out;
  for (const auto& set : sets) {
    auto rows = window_metrics(encoded, targets, set, threads);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::vector<ScatterRow> scatter_data(const Corpus& corpus, const SamplingPlan& plan,
                                     std::size_t null_realizations, unsigned threads) {
  plan.validate(corpus.size());
  if (null_realizations < 2) throw ConfigError("scatter_data needs at least two null realizations");
  const auto targets = resolve_targets(corpus, plan);
  const EncodedCorpus encoded = encode(corpus);
  require_targets(*encoded.vocabulary, targets);

  const SampleSet windows =
      sample_offsets(corpus.size(), plan.scatter_size, plan.m, plan.seed, scatter_index(plan));
  const auto empirical = window_metrics(encoded, targets, windows, threads);

  const auto terms = resolve_terms(*encoded.vocabulary, targets);
  const std::size_t m = windows.offsets.size();
  std::vector<TargetValues> per_null(null_realizations * m);
  parallel_for(null_realizations, threads, [&](std::size_t k, unsigned) {
    const EncodedCorpus shuffled =
        shuffle_null(encoded, derive_seed(plan.seed, SeedStream::NullShuffle, k));
    for (std::size_t j = 0; j < m; ++j)
      per_null[k * m + j] =
          local_values(window_graph(shuffled, windows.offsets[j], plan.scatter_size), terms);
  });
  return combine(empirical, summarize_all(targets, plan.scatter_size, per_null));
}

std::vector<ScatterRow> scatter_against(const Corpus& corpus, const Corpus& null_corpus,
                                        const SamplingPlan& plan, unsigned threads) {
  plan.validate(corpus.size());
  if (null_corpus.size() != corpus.size())
    throw DataError("scatter_against: null corpus length differs from the corpus");
  const auto targets = resolve_targets(corpus, plan);
  const SampleSet windows =
      sample_offsets(corpus.size(), plan.scatter_size, plan.m, plan.seed, scatter_index(plan));
  const EncodedCorpus encoded = encode(corpus);
  require_targets(*encoded.vocabulary, targets);
  const auto empirical = window_metrics(encoded, targets, windows, threads);
  const auto null_model = window_metrics(encode(null_corpus), targets, windows, threads);
  return combine(empirical, null_model);
}

std::optional<double> null_power_law_exponent(std::span<const ScatterRow> rows) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& r : rows) {
    if (r.null_model.realizations == 0 || r.null_model.mean_aspl <= 0.0 ||
        r.null_model.mean_lcc <= 0.0)
      continue;
    xs.push_back(std::log(r.null_model.mean_aspl));
    ys.push_back(std::log(r.null_model.mean_lcc));
  }
  if (xs.size() < 2) return std::nullopt;
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

RemovalSweep removal_sweep(const Corpus& corpus, const RemovalOptions& options) {
  if (options.null_realizations < 1) throw ConfigError("removal_sweep needs null realizations");
  const RankTable table = build_rank_table(corpus, true, false);
  if (table.size() < options.max_rank)
    throw DataError(fmt::format("removal_sweep: corpus has {} distinct items, needs {}",
                                table.size(), options.max_rank));
  const EncodedCorpus encoded = encode(corpus);
  if (encoded.size() < 2) throw DataError("removal_sweep: corpus needs at least two tokens");
  std::vector<TermId> removed;  // removed[R - 1] is the item of rank R
  for (std::size_t r = 0; r < options.max_rank; ++r)
    removed.push_back(*encoded.vocabulary->find(table.entries[r].surface));

  auto sweep_metrics = [&](const AdjacencyGraph& complete, std::uint64_t seed_index,
                           unsigned threads) {
    std::vector<GlobalMetrics> out;
    out.reserve(options.max_rank + 1);
    for (std::size_t r = 0; r <= options.max_rank; ++r) {
      GlobalOptions go = options.global;
      go.seed = derive_seed(options.seed, SeedStream::RemovalNull, seed_index * 1000 + r);
      go.threads = threads;
      if (r == 0) {
        out.push_back(global_metrics(complete, go));
      } else {
        const auto node = complete.node_of(removed[r - 1]);
        out.push_back(global_metrics(complete.without_node(*node), go));
      }
    }
    return out;
  };

  const AdjacencyGraph complete = build_graph(encoded, false);
  const auto empirical = sweep_metrics(complete, 0, options.threads);

  std::vector<std::vector<GlobalMetrics>> nulls(options.null_realizations);
  parallel_for(options.null_realizations, options.threads, [&](std::size_t k, unsigned) {
    const EncodedCorpus shuffled =
        shuffle_null(encoded, derive_seed(options.seed, SeedStream::NullShuffle, k));
    nulls[k] = sweep_metrics(build_graph(shuffled, false), k + 1, 1);
  });

  RemovalSweep sweep;
  for (std::size_t r = 0; r <= options.max_rank; ++r) {
    const GlobalMetrics& m = empirical[r];
    RemovalRow row;
    row.rank = r;
    if (r > 0) row.surface = table.entries[r - 1].surface;
    row.n = m.n;
    row.e = m.e;
    row.L = m.L;
    if (m.L && m.n > 1) row.L_over_ln_n = *m.L / std::log(static_cast<double>(m.n));
    row.C = m.C;
    row.r = m.r;
    row.disconnected = m.disconnected;
    row.null_realizations = options.null_realizations;

    double l_sum = 0.0;
    std::size_t l_count = 0;
    double c_sum = 0.0;
    double r_sum = 0.0;
    bool r_defined = true;
    for (const auto& realization : nulls) {
      const GlobalMetrics& nm = realization[r];
      if (nm.L) {
        l_sum += *nm.L;
        ++l_count;
      }
      c_sum += nm.C;
      if (nm.r) {
        r_sum += *nm.r;
      } else {
        r_defined = false;
      }
    }
    const double count = static_cast<double>(nulls.size());
    if (l_count > 0) row.L_null = l_sum / static_cast<double>(l_count);
    row.C_null = c_sum / count;
    if (r_defined) row.r_null = r_sum / count;
    if (row.L && row.L_null && *row.L_null != 0.0) row.lambda = *row.L / *row.L_null;
    if (*row.C_null != 0.0) row.kappa = row.C / *row.C_null;
    if (row.r && row.r_null && *row.r_null != 0.0) row.rho = *row.r / *row.r_null;
    sweep.rows.push_back(std::move(row));
  }
  return sweep;
}

std::vector<FreqDegreeRow> freq_vs_degree(const AdjacencyGraph& g,
                                          std::span<const std::string> targets) {
  std::vector<FreqDegreeRow> rows;
  rows.reserve(targets.size());
  for (const auto& t : targets) {
    const auto node = g.find(t);
    if (!node) throw DataError("freq_vs_degree: '" + t + "' is not a node");
    FreqDegreeRow row;
    row.surface = t;
    row.kind = kind_of_surface(t);
    row.frequency = g.frequency(*node);
    row.degree = g.degree(*node);
    row.weighted_degree = g.weighted_degree(*node);
    row.degree_over_frequency =
        row.frequency ? static_cast<double>(row.degree) / static_cast<double>(row.frequency) : 0.0;
    row.ratio_above_one = row.degree_over_frequency > 1.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string num(double x) { return fmt::format("{}", x); }

std::string num(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string metric_samples_csv(std::span<const MetricSample> rows) {
  std::string out = "surface,kind,s,aspl_mean,aspl_se,lcc_mean,lcc_se,realizations,skipped\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", field(r.surface), kind_name(r.kind), r.s,
                       num(r.mean_aspl), num(r.se_aspl), num(r.mean_lcc), num(r.se_lcc),
                       r.realizations, r.skipped);
  return out;
}

std::string scatter_csv(std::span<const ScatterRow> rows) {
  std::string out =
      "surface,kind,s,aspl_mean,aspl_se,lcc_mean,lcc_se,realizations,null_aspl_mean,null_aspl_se,"
      "null_lcc_mean,null_lcc_se,null_realizations,aspl_ratio,lcc_ratio\n";
  for (const auto& r : rows) {
    const auto& e = r.empirical;
    const auto& n = r.null_model;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", field(e.surface),
                       kind_name(e.kind), e.s, num(e.mean_aspl), num(e.se_aspl), num(e.mean_lcc),
                       num(e.se_lcc), e.realizations, num(n.mean_aspl), num(n.se_aspl),
                       num(n.mean_lcc), num(n.se_lcc), n.realizations, num(r.aspl_ratio),
                       num(r.lcc_ratio));
  }
  return out;
}

std::string removal_sweep_csv(const RemovalSweep& sweep) {
  std::string out =
      "R,surface,n,e,L,L_over_ln_n,C,r,L_null,C_null,r_null,lambda,kappa,rho,disconnected,"
      "null_realizations\n";
  for (const auto& r : sweep.rows)
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.rank,
                       field(r.surface), r.n, r.e, num(r.L), num(r.L_over_ln_n), num(r.C),
                       num(r.r), num(r.L_null), num(r.C_null), num(r.r_null), num(r.lambda),
                       num(r.kappa), num(r.rho), r.disconnected ? 1 : 0, r.null_realizations);
  return out;
}

std::string freq_degree_csv(std::span<const FreqDegreeRow> rows) {
  std::string out =
      "surface,kind,frequency,degree,weighted_degree,degree_over_frequency,ratio_above_one\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{},{}\n", field(r.surface), kind_name(r.kind), r.frequency,
                       r.degree, r.weighted_degree, num(r.degree_over_frequency),
                       r.ratio_above_one ? 1 : 0);
  return out;
}

}  // namespace punctnet
