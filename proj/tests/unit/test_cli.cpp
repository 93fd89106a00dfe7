#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <regex>

#include "punctnet/corpus_io.hpp"
#include "punctnet/ingest.hpp"
#include "support/synthetic.hpp"

using namespace punctnet;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(PUNCTNET_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("punctnet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  fs::path write_text(const std::string& name, std::size_t tokens, std::uint64_t seed) {
    synth::SyntheticTextOptions opt;
    opt.tokens = tokens;
    opt.vocabulary = 3000;
    opt.seed = seed;
    const fs::path p = dir_ / name;
    io::write_file(p, synth::synthetic_text(opt));
    return p;
  }

  std::string read(const fs::path& p) { return io::read_file(p); }
  std::string path(const std::string& rel) { return (dir_ / rel).string(); }

  fs::path dir_;
};

/// Sentence-ending periods in cleaned text: runs of . ? ! … that open with a
/// single or double dot, minus decimal points.
std::size_t period_oracle(const std::string& cleaned) {
  std::size_t count = 0;
  const std::regex run(R"(([.?!]|\xE2\x80\xA6)+)");
  for (auto it = std::sregex_iterator(cleaned.begin(), cleaned.end(), run);
       it != std::sregex_iterator(); ++it) {
    const std::string m = it->str();
    if (m[0] != '.' || m.rfind("...", 0) == 0 || m.rfind("..\xE2\x80\xA6", 0) == 0 ||
        m.rfind(".\xE2\x80\xA6", 0) == 0)
      continue;
    const auto pos = static_cast<std::size_t>(it->position());
    const bool decimal = m == "." && pos > 0 && pos + 1 < cleaned.size() &&
                         std::isdigit(static_cast<unsigned char>(cleaned[pos - 1])) &&
                         std::isdigit(static_cast<unsigned char>(cleaned[pos + 1]));
    if (!decimal) ++count;
  }
  return count;
}

}  // namespace

TEST_F(Cli, TokenizeWithoutInputsIsAUsageError) {
  EXPECT_EQ(run("tokenize --out " + path("t")), 1);
  EXPECT_EQ(run("bogus-command"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, TokenizeCountsDotsLikeTheOracle) {
  const fs::path text = write_text("novel.txt", 20000, 1);
  ASSERT_EQ(run("tokenize " + text.string() + " --out " + path("t")), 0);
  const Corpus c = io::load_corpus(dir_ / "t" / "tokens" / "novel.tokens");
  const std::size_t dots = c.kind_counts()[static_cast<std::size_t>(TokenKind::Dot)];
  const std::string cleaned = clean_text(read(text), CleaningConfig::english());
  EXPECT_EQ(dots, period_oracle(cleaned));
  EXPECT_GT(dots, 0u);
  EXPECT_TRUE(fs::exists(dir_ / "t" / "run.json"));
}

TEST_F(Cli, TokenizeMergesFiveTexts) {
  std::string args = "tokenize";
  for (int k = 0; k < 5; ++k) args += " " + write_text("n" + std::to_string(k) + ".txt", 3000, k + 1).string();
  ASSERT_EQ(run(args + " --out " + path("t")), 0);
  const auto meta = nlohmann::json::parse(read(dir_ / "t" / "corpus.tokens.json"));
  EXPECT_EQ(meta["sources"].size(), 5u);
  std::size_t total = 0;
  for (int k = 0; k < 5; ++k)
    total += io::read_tokens(dir_ / "t" / "tokens" / ("n" + std::to_string(k) + ".tokens")).size();
  EXPECT_EQ(meta["token_count"].get<std::size_t>(), total);
}

TEST_F(Cli, MalformedTextIsADataError) {
  io::write_file(dir_ / "bad.txt", "fine \xFF broken");
  EXPECT_EQ(run("tokenize " + path("bad.txt") + " --out " + path("t")), 2);
  EXPECT_EQ(run("tokenize " + path("missing.txt") + " --out " + path("t")), 1);
}

TEST_F(Cli, ZipfWritesBothFits) {
  const fs::path text = write_text("z.txt", 30000, 3);
  ASSERT_EQ(run("zipf " + text.string() + " --out " + path("z")), 0);
  for (const char* f : {"ranks.csv", "fit_with_punct.json", "fit_without_punct.json",
                        "compare.json", "powerlaw_with_punct.json", "run.json"})
    EXPECT_TRUE(fs::exists(dir_ / "z" / f)) << f;
  const auto cmp = nlohmann::json::parse(read(dir_ / "z" / "compare.json"));
  EXPECT_DOUBLE_EQ(cmp["delta_c"].get<double>(),
                   cmp["c_with_punct"].get<double>() - cmp["c_without_punct"].get<double>());
  EXPECT_NE(read(dir_ / "z" / "ranks.csv").find(",#com,"), std::string::npos);

  ASSERT_EQ(run("zipf " + text.string() + " --no-punct --out " + path("w")), 0);
  const std::string csv = read(dir_ / "w" / "ranks.csv");
  EXPECT_EQ(csv.find(",#"), std::string::npos);
}

TEST_F(Cli, NetworkOnTwoTokens) {
  io::write_file(dir_ / "two.txt", "hello world");
  ASSERT_EQ(run("network " + path("two.txt") + " --out " + path("n")), 0);
  const auto m = nlohmann::json::parse(read(dir_ / "n" / "metrics.json"));
  EXPECT_EQ(m["n"], 2);
  EXPECT_EQ(m["e"], 1);
  const std::string first = read(dir_ / "n" / "edges.tsv");
  ASSERT_EQ(run("network " + path("two.txt") + " --out " + path("n2")), 0);
  EXPECT_EQ(read(dir_ / "n2" / "edges.tsv"), first);
  EXPECT_EQ(run("network " + path("missing.tokens") + " --out " + path("n3")), 1);
  io::write_file(dir_ / "one.txt", "alone");
  EXPECT_EQ(run("network " + path("one.txt") + " --out " + path("n4")), 2);
}

TEST_F(Cli, ExperimentIsReproducible) {
  write_text("fixture.txt", 40000, 5);
  io::write_file(dir_ / "manifest.cfg",
                 "corpus = fixture.txt\nseed = 7\nsizes = 500, 2000\nm = 5\nscatter_size = 2000\n"
                 "null_realizations = 3\nremoval_realizations = 2\nmax_rank = 3\n");
  ASSERT_EQ(run("experiment --config " + path("manifest.cfg") + " --out " + path("a")), 0);
  ASSERT_EQ(run("experiment --config " + path("manifest.cfg") + " --out " + path("b")), 0);
  for (const char* f : {"metric_vs_size.csv", "scatter.csv", "removal_sweep.csv",
                        "freq_degree.csv", "summary.json"})
    EXPECT_EQ(read(dir_ / "a" / f), read(dir_ / "b" / f)) << f;
  const std::string scatter = read(dir_ / "a" / "scatter.csv");
  EXPECT_EQ(scatter.substr(0, scatter.find('\n')),
            "surface,kind,s,aspl_mean,aspl_se,lcc_mean,lcc_se,realizations,null_aspl_mean,"
            "null_aspl_se,null_lcc_mean,null_lcc_se,null_realizations,aspl_ratio,lcc_ratio");
  const std::string removal = read(dir_ / "a" / "removal_sweep.csv");
  EXPECT_EQ(removal.substr(0, removal.find('\n')),
            "R,surface,n,e,L,L_over_ln_n,C,r,L_null,C_null,r_null,lambda,kappa,rho,disconnected,"
            "null_realizations");
  const auto run_meta = nlohmann::json::parse(read(dir_ / "a" / "run.json"));
  for (const char* key : {"inputs", "config_hash", "seed", "duration_seconds", "rng"})
    EXPECT_TRUE(run_meta.contains(key)) << key;
  EXPECT_EQ(run_meta["seed"], 7);
}

TEST_F(Cli, ExperimentWithoutSeedIsAConfigError) {
  write_text("fixture.txt", 5000, 5);
  io::write_file(dir_ / "manifest.cfg", "corpus = fixture.txt\nsizes = 100\nscatter_size = 100\n");
  EXPECT_EQ(run("experiment --config " + path("manifest.cfg")), 1);
  EXPECT_EQ(run("experiment --config " + path("nope.cfg")), 1);
}
