#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>

#include "punctnet/corpus_io.hpp"
#include "punctnet/error.hpp"
#include "punctnet/graph.hpp"
#include "punctnet/harness.hpp"
#include "punctnet/metrics.hpp"
#include "punctnet/parallel.hpp"
#include "punctnet/random.hpp"
#include "punctnet/rank_stats.hpp"
#include "punctnet/version.hpp"

namespace punctnet::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

ExperimentConfig resolve_config(const Options& opt) {
  ExperimentConfig cfg = opt.config ? load_manifest(*opt.config) : ExperimentConfig{};
  if (!opt.inputs.empty()) {
    cfg.corpora.clear();
    cfg.tokens.reset();
    for (const auto& p : opt.inputs) {
      if (p.extension() == ".tokens") {
        if (cfg.tokens || opt.inputs.size() > 1)
          throw ConfigError("a .tokens input must be the only input");
        cfg.tokens = p;
      } else {
        cfg.corpora.push_back(p);
      }
    }
  }
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.include_punct) cfg.include_punct = *opt.include_punct;
  if (opt.fs_mode) cfg.fs_mode = *opt.fs_mode;
  if (opt.sizes) cfg.plan.sizes = parse_size_list(*opt.sizes);
  if (opt.realizations) {
    cfg.null_realizations = *opt.realizations;
    cfg.removal_realizations = *opt.realizations;
  }
  if (opt.out) cfg.output = *opt.out;
  if (opt.threads) cfg.threads = *opt.threads;
  if (opt.language) cfg.language = *opt.language;
  if (opt.cleaning) cfg.cleaning_config = *opt.cleaning;
  return cfg;
}

void require_inputs(const ExperimentConfig& cfg) {
  if (cfg.corpora.empty() && !cfg.tokens) throw ConfigError("no input files given");
  for (const auto& p : cfg.corpora)
    if (!fs::exists(p)) throw ConfigError("input not found: " + p.string());
  if (cfg.tokens && !fs::exists(*cfg.tokens))
    throw ConfigError("input not found: " + cfg.tokens->string());
  if (cfg.cleaning_config && !fs::exists(*cfg.cleaning_config))
    throw ConfigError("cleaning config not found: " + cfg.cleaning_config->string());
}

CleaningConfig cleaning_rules(const ExperimentConfig& cfg) {
  CleaningConfig rules =
      cfg.cleaning_config ? io::load_cleaning_config(*cfg.cleaning_config) : CleaningConfig::english();
  if (!cfg.cleaning_config) rules.language = cfg.language;
  rules.validate();
  return rules;
}

Corpus ingest_file(const fs::path& path, const CleaningConfig& rules) {
  const std::string raw = io::read_file(path);
  try {
    return ingest_text(raw, rules, path.stem().string());
  } catch (const DecodeError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

/// Raw texts are cleaned and merged; a token file is loaded as is.
Corpus load_input(const ExperimentConfig& cfg) {
  if (cfg.tokens) return io::load_corpus(*cfg.tokens);
  const CleaningConfig rules = cleaning_rules(cfg);
  std::vector<Corpus> parts;
  for (const auto& p : cfg.corpora) parts.push_back(ingest_file(p, rules));
  return merge_corpora(parts);
}

Corpus without_marks(const Corpus& corpus) {
  Corpus out;
  out.language = corpus.language;
  for (const auto& src : corpus.sources) {
    const std::size_t begin = out.tokens.size();
    for (std::size_t i = src.begin; i < src.end; ++i)
      if (!is_mark(corpus.tokens[i].kind)) out.tokens.push_back(corpus.tokens[i]);
    out.sources.push_back({src.title, begin, out.tokens.size()});
  }
  return out;
}

Corpus prepare(Corpus corpus, const ExperimentConfig& cfg) {
  if (cfg.fs_mode) corpus = aggregate_fullstops(std::move(corpus));
  if (!cfg.include_punct) corpus = without_marks(corpus);
  if (corpus.empty()) throw DataError("corpus is empty after filtering");
  return corpus;
}

ordered_json input_list(const ExperimentConfig& cfg) {
  ordered_json inputs = ordered_json::array();
  for (const auto& p : cfg.corpora) inputs.push_back(p.generic_string());
  if (cfg.tokens) inputs.push_back(cfg.tokens->generic_string());
  return inputs;
}

void write_run(const fs::path& dir, std::string_view command, const ExperimentConfig& cfg,
               Clock::time_point start, const std::vector<std::string>& outputs,
               ordered_json extra = ordered_json::object()) {
  ordered_json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["inputs"] = input_list(cfg);
  j["config_hash"] = cfg.hash();
  j["seed"] = cfg.seed ? ordered_json(*cfg.seed) : ordered_json(nullptr);
  j["rng"] = kRngName;
  j["threads"] = resolve_threads(cfg.threads);
  j["duration_seconds"] =
      std::chrono::duration<double>(Clock::now() - start).count();
  j["outputs"] = outputs;
  for (auto& [k, v] : extra.items()) j[k] = v;
  io::write_file(dir / "run.json", j.dump(2) + "\n");
}

std::string unique_stem(const fs::path& p, std::vector<std::string>& used) {
  std::string stem = p.stem().string();
  std::string name = stem;
  for (int k = 2; std::find(used.begin(), used.end(), name) != used.end(); ++k)
    name = fmt::format("{}-{}", stem, k);
  used.push_back(name);
  return name;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::vector<std::size_t> heaps_sizes(std::size_t n) {
  std::vector<std::size_t> sizes;
  if (n == 0) return sizes;
  constexpr int kPoints = 24;
  const double lo = std::log(std::min<double>(10.0, static_cast<double>(n)));
  const double hi = std::log(static_cast<double>(n));
  for (int k = 0; k < kPoints; ++k) {
    const double x = lo + (hi - lo) * k / (kPoints - 1);
    auto s = static_cast<std::size_t>(std::llround(std::exp(x)));
    s = std::clamp<std::size_t>(s, 1, n);
    if (sizes.empty() || s > sizes.back()) sizes.push_back(s);
  }
  if (sizes.back() != n) sizes.push_back(n);
  return sizes;
}

}  // namespace

int cmd_tokenize(const Options& opt) {
  const auto start = Clock::now();
  const ExperimentConfig cfg = resolve_config(opt);
  require_inputs(cfg);
  if (cfg.tokens) throw ConfigError("tokenize takes raw text files, not a .tokens file");
  const CleaningConfig rules = cleaning_rules(cfg);
  const fs::path dir = cfg.output;
  std::vector<std::string> outputs;
  std::vector<std::string> used;
  std::vector<Corpus> parts;
  for (const auto& p : cfg.corpora) {
    Corpus part = ingest_file(p, rules);
    const std::string name = unique_stem(p, used);
    const fs::path tok = dir / "tokens" / (name + ".tokens");
    io::write_tokens(tok, part);
    io::write_file(tok.string() + ".json", io::corpus_metadata_json(part, name));
    outputs.push_back("tokens/" + name + ".tokens");
    parts.push_back(std::move(part));
  }
  Corpus merged = merge_corpora(parts);
  if (cfg.fs_mode) merged = aggregate_fullstops(std::move(merged));
  io::write_tokens(dir / "corpus.tokens", merged);
  io::write_file(dir / "corpus.tokens.json", io::corpus_metadata_json(merged, "corpus"));
  outputs.push_back("corpus.tokens");
  write_run(dir, "tokenize", cfg, start, outputs,
            {{"tokens", merged.size()}, {"cleaning", ordered_json::parse(io::cleaning_config_json(rules))}});
  fmt::print("{} tokens from {} file(s) -> {}\n", merged.size(), cfg.corpora.size(),
             dir.string());
  return 0;
}

int cmd_zipf(const Options& opt) {
  const auto start = Clock::now();
  const ExperimentConfig cfg = resolve_config(opt);
  require_inputs(cfg);
  const Corpus corpus = load_input(cfg);
  const fs::path dir = cfg.output;
  const FitRange range{opt.r_min, opt.r_max};
  MandelbrotSearch search;
  search.c_max = opt.c_max;

  const RankTable shown = build_rank_table(corpus, cfg.include_punct, cfg.fs_mode);
  const RankTable with_punct = build_rank_table(corpus, true, cfg.fs_mode);
  const RankTable words_only = build_rank_table(corpus, false, cfg.fs_mode);
  const FitResult fit_with = fit_zipf_mandelbrot(with_punct, range, search);
  const FitResult fit_without = fit_zipf_mandelbrot(words_only, range, search);
  const CComparison cmp = compare_c(fit_with, fit_without);

  io::write_file(dir / "ranks.csv", rank_table_csv(shown));
  io::write_file(dir / "fit_with_punct.json", fit_result_json(fit_with));
  io::write_file(dir / "fit_without_punct.json", fit_result_json(fit_without));
  io::write_file(dir / "compare.json", comparison_json(cmp));
  std::vector<std::string> outputs{"ranks.csv", "fit_with_punct.json", "fit_without_punct.json",
                                   "compare.json"};

  // pure power law over the straight part of the curve, when the table reaches it
  auto power_law = [&](const RankTable& table, const std::string& name) {
    const std::size_t hi = std::min(opt.pl_max, table.size());
    if (hi < opt.pl_min || hi - opt.pl_min + 1 < kMinFitPoints) return;
    io::write_file(dir / name, fit_result_json(fit_power_law(table, {opt.pl_min, hi})));
    outputs.push_back(name);
  };
  power_law(with_punct, "powerlaw_with_punct.json");
  power_law(words_only, "powerlaw_without_punct.json");

  write_run(dir, "zipf", cfg, start, outputs,
            {{"include_punct", cfg.include_punct},
             {"fs_mode", cfg.fs_mode},
             {"r_min", opt.r_min},
             {"r_max", opt.r_max},
             {"c_max", opt.c_max}});
  fmt::print("c with marks {:.4g}, words only {:.4g}, delta {:.4g}\n", fit_with.c, fit_without.c,
             cmp.delta_c);
  return 0;
}

int cmd_network(const Options& opt) {
  const auto start = Clock::now();
  const ExperimentConfig cfg = resolve_config(opt);
  require_inputs(cfg);
  const Corpus corpus = prepare(load_input(cfg), cfg);
  const fs::path dir = cfg.output;
  const AdjacencyGraph g = build_graph(corpus, opt.looped);

  GlobalOptions go;
  go.exact_budget = cfg.exact_budget;
  go.sample_sources = cfg.sample_sources;
  go.seed = derive_seed(cfg.seed.value_or(0), SeedStream::SourceSampling, 0);
  go.threads = cfg.threads;
  const GlobalMetrics m = global_metrics(g, go);

  io::write_file(dir / "edges.tsv", edge_list_tsv(g));
  io::write_file(dir / "metrics.json", global_metrics_json(m));

  std::vector<NodeId> by_frequency(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) by_frequency[i] = i;
  std::stable_sort(by_frequency.begin(), by_frequency.end(),
                   [&](NodeId a, NodeId b) { return g.frequency(a) > g.frequency(b); });
  std::vector<std::optional<double>> aspl(g.node_count());
  const std::size_t top = std::min(opt.aspl_nodes, by_frequency.size());
  std::vector<NodeId> sources(by_frequency.begin(), by_frequency.begin() + top);
  const auto summaries = distance_summaries(g, sources, cfg.threads);
  for (std::size_t k = 0; k < top; ++k)
    if (summaries[k].reachable) aspl[sources[k]] = summaries[k].mean();
  const auto lcc = local_clustering(g);

  std::string nodes = "node,surface,kind,frequency,degree,weighted_degree,self_loops,lcc,aspl\n";
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const std::string label(g.label(i));
    nodes += fmt::format("{},{},{},{},{},{},{},{},{}\n", i, csv_field(label), kind_name(kind_of_surface(label)),
                         g.frequency(i), g.degree(i), g.weighted_degree(i), g.self_loop_weight(i),
                         lcc[i], aspl[i] ? fmt::format("{}", *aspl[i]) : std::string());
  }
  io::write_file(dir / "nodes.csv", nodes);

  std::string heaps = "tokens,vocabulary\n";
  for (const auto& [s, v] : heaps_curve(corpus, heaps_sizes(corpus.size())))
    heaps += fmt::format("{},{}\n", s, v);
  io::write_file(dir / "heaps.csv", heaps);

  write_run(dir, "network", cfg, start, {"edges.tsv", "metrics.json", "nodes.csv", "heaps.csv"},
            {{"looped", opt.looped}, {"include_punct", cfg.include_punct}, {"fs_mode", cfg.fs_mode}});
  fmt::print("n={} e={} L={} C={:.4g}\n", m.n, m.e, m.L ? fmt::format("{:.4g}", *m.L) : "undefined",
             m.C);
  return 0;
}

int cmd_experiment(const Options& opt) {
  const auto start = Clock::now();
  const ExperimentConfig cfg = resolve_config(opt);
  cfg.validate();
  const std::uint64_t seed = *cfg.seed;
  const Corpus corpus = prepare(load_input(cfg), cfg);
  const fs::path dir = cfg.output;

  SamplingPlan plan = cfg.plan;
  plan.seed = seed;
  if (plan.targets.empty()) plan.targets = top_ranked(corpus, 10);
  plan.validate(corpus.size());
  std::vector<std::string> outputs;

  const auto curves = metric_vs_size(corpus, plan, cfg.threads);
  io::write_file(dir / "metric_vs_size.csv", metric_samples_csv(curves));
  outputs.push_back("metric_vs_size.csv");

  const auto scatter = scatter_data(corpus, plan, cfg.null_realizations, cfg.threads);
  io::write_file(dir / "scatter.csv", scatter_csv(scatter));
  outputs.push_back("scatter.csv");

  const AdjacencyGraph g = build_graph(corpus, false);
  io::write_file(dir / "freq_degree.csv", freq_degree_csv(freq_vs_degree(g, plan.targets)));
  outputs.push_back("freq_degree.csv");

  if (cfg.removal) {
    RemovalOptions ro;
    ro.max_rank = cfg.max_rank;
    ro.null_realizations = cfg.removal_realizations;
    ro.global.exact_budget = cfg.exact_budget;
    ro.global.sample_sources = cfg.sample_sources;
    ro.seed = seed;
    ro.threads = cfg.threads;
    io::write_file(dir / "removal_sweep.csv", removal_sweep_csv(removal_sweep(corpus, ro)));
    outputs.push_back("removal_sweep.csv");
  }

  const auto gamma = null_power_law_exponent(scatter);
  ordered_json summary;
  summary["tokens"] = corpus.size();
  summary["targets"] = plan.targets;
  summary["sizes"] = plan.sizes;
  summary["m"] = plan.m;
  summary["scatter_size"] = plan.scatter_size;
  summary["null_realizations"] = cfg.null_realizations;
  summary["null_gamma"] = gamma ? ordered_json(*gamma) : ordered_json(nullptr);
  io::write_file(dir / "summary.json", summary.dump(2) + "\n");
  outputs.push_back("summary.json");

  write_run(dir, "experiment", cfg, start, outputs, {{"manifest", cfg.canonical()}});
  fmt::print("experiment on {} tokens -> {}\n", corpus.size(), dir.string());
  return 0;
}

}  // namespace punctnet::cli
