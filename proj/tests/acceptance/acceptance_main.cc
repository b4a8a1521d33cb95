// Copyright 2026 The mlsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "mlsum/multirank.h"
#include "mlsum/pipeline.h"
#include "mlsum/rouge.h"
#include "mlsum/wilcoxon.h"
#include "support/oracles.h"
#include "support/random_inputs.h"

namespace {

namespace fs = std::filesystem;
using namespace mlsum;

const fs::path kData = MLSUM_TEST_DATA_DIR;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 means no limit
  std::function<Check()> body;
};

std::vector<double> sum_check(const std::vector<double>& v) { return v; }

DenseMatrix permuted(const DenseMatrix& a, const std::vector<std::size_t>& p) {
  DenseMatrix out = DenseMatrix::Square(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(p[i], p[j]) = a(i, j);
  return out;
}

// Orders agree except where the values being swapped are within tol.
bool same_order(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  const auto oa = rank_descending(a);
  const auto ob = rank_descending(b);
  for (std::size_t k = 0; k < oa.size(); ++k) {
    if (oa[k] != ob[k] && std::fabs(a[oa[k]] - a[ob[k]]) > tol) return false;
  }
  return true;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1
Check rouge_l_example() {
  Check c;
  const char* ref = "The book was under the bed.";
  const RougeScore s1 = rouge_l("The book was found under the bed.", ref);
  const RougeScore s2 = rouge_l("The little red book was found under the big funny bed.", ref);
  if (std::fabs(s1.recall - 1.0) > 1e-12 || std::fabs(s1.precision - 6.0 / 7.0) > 1e-12)
    c.fail("summary 1: R=" + fmt(s1.recall) + " P=" + fmt(s1.precision));
  if (std::fabs(s2.recall - 1.0) > 1e-12 || std::fabs(s2.precision - 6.0 / 11.0) > 1e-12)
    c.fail("summary 2: R=" + fmt(s2.recall) + " P=" + fmt(s2.precision));
  return c;
}

// 2
Check single_layer_reduction() {
  Check c;
  std::mt19937_64 rng(1002);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  std::uniform_real_distribution<double> density(0.05, 1.0);
  double worst = 0.0;
  double worst_solve = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const DenseMatrix a = testing::random_symmetric(rng, size(rng), density(rng));
    const auto r = multirank(std::vector<DenseMatrix>{a});
    const double d = l1_distance(r.x, pagerank(a));
    // The two share a walk step; the dense solve keeps the check independent.
    const double solve = l1_distance(r.x, oracle::pagerank_solve(a, 0.85));
    worst = std::max(worst, d);
    worst_solve = std::max(worst_solve, solve);
    if (!(d <= 1e-6)) c.fail("trial " + std::to_string(trial) + ": L1 " + fmt(d));
    if (!(solve <= 1e-6)) c.fail("trial " + std::to_string(trial) + ": L1 vs solve " + fmt(solve));
  }
  if (c.ok) c.detail = "max L1 " + fmt(worst) + ", vs dense solve " + fmt(worst_solve);
  return c;
}

// 3
Check jacobi_oracle() {
  Check c;
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<std::size_t> size(2, 15);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  MultiRankParams p;
  p.tolerance = 1e-12;
  p.max_iterations = 100000;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = size(rng);
    std::vector<DenseMatrix> layers;
    for (int a = 0; a < 3; ++a) layers.push_back(testing::random_symmetric(rng, n, density(rng)));
    const auto r = multirank(layers, p);
    const auto o = oracle::multirank_jacobi(layers, p.damping);
    const double d = std::max(l1_distance(r.x, o.x), l1_distance(r.z, o.z));
    worst = std::max(worst, d);
    if (!r.converged || !o.converged) c.fail("trial " + std::to_string(trial) + ": no convergence");
    if (!(d <= 1e-6)) c.fail("trial " + std::to_string(trial) + ": L1 " + fmt(d));
  }
  if (c.ok) c.detail = "max L1 " + fmt(worst);
  return c;
}

// 4
Check symmetry_suite() {
  Check c;
  std::mt19937_64 rng(1004);
  std::uniform_int_distribution<std::size_t> size(2, 20);
  std::uniform_int_distribution<std::size_t> n_layers(1, 3);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  int failures = 0;
  auto random_layers = [&](std::size_t n) {
    std::vector<DenseMatrix> layers;
    const std::size_t m = n_layers(rng);
    for (std::size_t a = 0; a < m; ++a) layers.push_back(testing::random_symmetric(rng, n, density(rng)));
    return layers;
  };
  for (int trial = 0; trial < 100; ++trial) {
    // Normalization and nonnegativity.
    const auto layers = random_layers(size(rng));
    const auto r = multirank(layers);
    const double total = std::accumulate(r.x.begin(), r.x.end(), 0.0);
    if (std::fabs(total - 1.0) > 1e-12 ||
        std::any_of(r.x.begin(), r.x.end(), [](double v) { return v < 0.0; })) {
      ++failures;
      c.fail("normalization, trial " + std::to_string(trial));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    // Node permutation.
    const std::size_t n = size(rng);
    const auto layers = random_layers(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<DenseMatrix> moved;
    for (const auto& a : layers) moved.push_back(permuted(a, perm));
    const auto r = multirank(layers);
    const auto q = multirank(moved);
    double d = 0.0;
    for (std::size_t i = 0; i < n; ++i) d += std::fabs(r.x[i] - q.x[perm[i]]);
    d += l1_distance(r.z, q.z);
    if (d > 1e-9) {
      ++failures;
      c.fail("node permutation, trial " + std::to_string(trial) + ": " + fmt(d));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    // Layer permutation.
    const std::size_t n = size(rng);
    auto layers = random_layers(n);
    const auto r = multirank(layers);
    std::vector<std::size_t> order(layers.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<DenseMatrix> moved;
    for (std::size_t k : order) moved.push_back(layers[k]);
    const auto q = multirank(moved);
    double d = l1_distance(r.x, q.x);
    for (std::size_t k = 0; k < order.size(); ++k) d += std::fabs(q.z[k] - r.z[order[k]]);
    if (d > 1e-9) {
      ++failures;
      c.fail("layer permutation, trial " + std::to_string(trial) + ": " + fmt(d));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    // Uniform rescaling of every layer.
    const std::size_t n = size(rng);
    const auto layers = random_layers(n);
    const double s = scale(rng);
    std::vector<DenseMatrix> scaled;
    for (const auto& a : layers) {
      DenseMatrix b = a;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) *= s;
      scaled.push_back(b);
    }
    if (!same_order(multirank(layers).x, multirank(scaled).x, 1e-12)) {
      ++failures;
      c.fail("rescaling, trial " + std::to_string(trial));
    }
  }
  if (failures > 0) c.detail += " (" + std::to_string(failures) + " failures)";
  return c;
}

// 5
Check enhanced_collapse() {
  Check c;
  std::mt19937_64 rng(1005);
  std::uniform_int_distribution<std::size_t> size(1, 25);
  PipelineConfig basic;
  PipelineConfig enhanced;
  enhanced.summary.mode = SelectionMode::Enhanced;
  enhanced.summary.gamma = 1.0;
  enhanced.summary.theta = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto doc = testing::random_annotated_document(rng, size(rng));
    if (summarize(doc, basic).summary.indices() != summarize(doc, enhanced).summary.indices())
      c.fail("document " + std::to_string(trial));
  }
  return c;
}

std::vector<AnnotatedDocument> desk_corpus() {
  const Lexicon lexicon = Lexicon::Load(kData / "corpus_lexicon.tsv");
  std::vector<AnnotatedDocument> docs;
  for (const auto& entry : cli::discover_documents(kData / "corpus")) {
    cli::DocumentSource src;
    src.doc_id = entry.doc_id;
    src.input = entry.input;
    src.lexicon = &lexicon;
    docs.push_back(cli::load_annotated_document(src));
  }
  return docs;
}

// 6
Check theta_direction() {
  Check c;
  const auto docs = desk_corpus();
  if (docs.size() != 20) c.fail("expected 20 documents, found " + std::to_string(docs.size()));
  std::vector<double> density;
  for (double theta : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    PipelineConfig cfg;
    cfg.summary.mode = SelectionMode::Enhanced;
    cfg.summary.gamma = 1.0;
    cfg.summary.theta = theta;
    double total = 0.0;
    for (const auto& doc : docs) {
      const auto summary = summarize(doc, cfg).summary;
      double mentions = 0.0;
      for (std::size_t idx : summary.indices()) {
        for (const auto& m : doc.concept_mentions) mentions += m.sentence_index == idx ? 1.0 : 0.0;
      }
      total += mentions / static_cast<double>(summary.k());
    }
    density.push_back(total / static_cast<double>(docs.size()));
  }
  std::string series;
  for (double d : density) series += (series.empty() ? "" : " ") + fmt(d);
  for (std::size_t i = 1; i < density.size(); ++i) {
    if (density[i] < density[i - 1] - 1e-12) c.fail("density decreases: " + series);
  }
  if (c.ok) c.detail = "density " + series;
  return c;
}

// 7
Check ngram_oracle() {
  Check c;
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<std::size_t> len(0, 24);
  std::uniform_int_distribution<int> letter('a', 'd');
  std::uniform_int_distribution<std::size_t> order(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string a(len(rng), ' ');
    std::string b(len(rng), ' ');
    for (char& ch : a) ch = static_cast<char>(letter(rng));
    for (char& ch : b) ch = static_cast<char>(letter(rng));
    const std::size_t n = order(rng);
    const std::vector<char> va(a.begin(), a.end());
    const std::vector<char> vb(b.begin(), b.end());
    if (ngram_similarity(va, vb, n) != oracle::dice(va, vb, n))
      c.fail("pair " + std::to_string(trial) + ": '" + a + "' vs '" + b + "'");
  }
  return c;
}

// 8
Check wilcoxon_oracle() {
  Check c;
  std::mt19937_64 rng(1008);
  std::normal_distribution<double> noise(0.05, 1.0);
  std::uniform_int_distribution<int> coarse(-3, 3);
  std::uniform_int_distribution<std::size_t> size(5, 12);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    std::vector<double> d;
    while (d.size() < n) {
      // Half the samples use a coarse grid so tied ranks occur.
      const double v = trial % 2 == 0 ? noise(rng) : 0.25 * coarse(rng);
      if (v != 0.0) d.push_back(v);
    }
    const std::vector<double> zero(n, 0.0);
    const double p = wilcoxon_signed_rank(d, zero, WilcoxonMethod::Auto).p_value;
    const double diff = std::fabs(p - oracle::wilcoxon_enumerated_p(d));
    worst = std::max(worst, diff);
    if (!(diff <= 1e-12)) c.fail("exact sample " + std::to_string(trial) + ": " + fmt(diff));
  }
  double worst_normal = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> d(25);
    for (auto& v : d) v = noise(rng);
    const std::vector<double> zero(25, 0.0);
    const double exact = wilcoxon_signed_rank(d, zero, WilcoxonMethod::Exact).p_value;
    const double approx = wilcoxon_signed_rank(d, zero, WilcoxonMethod::Normal).p_value;
    worst_normal = std::max(worst_normal, std::fabs(exact - approx));
  }
  if (!(worst_normal <= 1e-2)) c.fail("normal branch off by " + fmt(worst_normal) + " at n = 25");
  if (c.ok) c.detail = "exact max diff " + fmt(worst) + ", normal max diff " + fmt(worst_normal);
  return c;
}

// 9
Check lcs_oracle() {
  Check c;
  std::mt19937_64 rng(1009);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = testing::random_words(rng, 30, 1 + trial % 8);
    const auto y = testing::random_words(rng, 30, 1 + trial % 8);
    if (lcs_length(x, y) != oracle::lcs(x, y)) c.fail("pair " + std::to_string(trial));
  }
  return c;
}

struct Scratch {
  fs::path root = fs::temp_directory_path() / ("mlsum-acceptance-" + std::to_string(::getpid()));
  Scratch() { fs::remove_all(root); }
  ~Scratch() { fs::remove_all(root); }
};

int run_cli(const std::vector<std::string>& args, std::string* err = nullptr) {
  std::vector<const char*> argv{"mlsum"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, e);
  if (err) *err = e.str();
  return code;
}

std::map<std::string, std::string> tree_contents(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = cli::read_file(e.path());
  }
  return files;
}

// 10
Check determinism(const Scratch& scratch) {
  Check c;
  const std::string manifest = (kData / "corpus_manifest.json").string();
  const std::vector<std::pair<std::string, std::string>> runs{
      {"det-a", "1"}, {"det-b", "1"}, {"det-c", "4"}};
  for (const auto& [name, jobs] : runs) {
    std::string err;
    const int code = run_cli({"corpus-run", "--manifest", manifest, "--output-dir",
                              (scratch.root / name).string(), "--jobs", jobs, "--seedless"},
                             &err);
    if (code != 0) c.fail(name + " exited " + std::to_string(code) + ": " + err);
  }
  if (!c.ok) return c;
  const auto a = tree_contents(scratch.root / "det-a");
  if (a.size() != 43) c.fail("expected 43 output files, found " + std::to_string(a.size()));
  if (a != tree_contents(scratch.root / "det-b")) c.fail("repeat run differs");
  if (a != tree_contents(scratch.root / "det-c")) c.fail("--jobs 4 differs from --jobs 1");
  if (c.ok) c.detail = std::to_string(a.size()) + " files identical across 3 runs";
  return c;
}

// 11
Check layer_ablation(const Scratch& scratch) {
  Check c;
  const auto docs = desk_corpus();
  const bool has_conceptless = std::any_of(docs.begin(), docs.end(), [](const auto& d) {
    return d.concept_mentions.empty();
  });
  const bool has_chainless = std::any_of(docs.begin(), docs.end(), [](const auto& d) {
    return !d.concept_mentions.empty() && d.coref_chains.empty();
  });
  if (!has_conceptless) c.fail("corpus lacks a document without concepts");
  if (!has_chainless) c.fail("corpus lacks a document without chains");
  const std::string manifest = (kData / "corpus_manifest.json").string();
  std::set<std::string> contents;
  for (const char* layers : {"semantic,word,coref", "semantic,word", "semantic,coref", "word,coref"}) {
    const fs::path out = scratch.root / (std::string("ablation-") + layers);
    std::string err;
    const int code =
        run_cli({"corpus-run", "--manifest", manifest, "--output-dir", out.string(), "--layers", layers},
                &err);
    if (code != 0) {
      c.fail(std::string(layers) + " exited " + std::to_string(code) + ": " + err);
      continue;
    }
    const fs::path report = out / "report.json";
    if (!fs::exists(report)) {
      c.fail(std::string(layers) + ": no report");
      continue;
    }
    const auto rows = read_reports(report);
    if (rows.size() != 20) c.fail(std::string(layers) + ": " + std::to_string(rows.size()) + " rows");
    contents.insert(cli::read_file(report));
  }
  if (c.ok) c.detail = "4 reports, " + std::to_string(contents.size()) + " with distinct contents";
  return c;
}

}  // namespace

int main() {
  Scratch scratch;
  const std::vector<Criterion> criteria{
      {1, "ROUGE-L worked example", 1.0, rouge_l_example},
      {2, "MultiRank single-layer reduction to PageRank", 10.0, single_layer_reduction},
      {3, "MultiRank fixed point vs Jacobi-schedule oracle", 30.0, jacobi_oracle},
      {4, "Normalization, permutation and scale properties", 0.0, symmetry_suite},
      {5, "Enhanced (1, 0) selects the Basic set", 0.0, enhanced_collapse},
      {6, "Concept density non-decreasing in theta", 60.0, theta_direction},
      {7, "n-gram Dice vs enumeration", 0.0, ngram_oracle},
      {8, "Wilcoxon exact vs sign enumeration, normal vs exact", 0.0, wilcoxon_oracle},
      {9, "LCS vs quadratic reference", 0.0, lcs_oracle},
      {10, "corpus-run byte-identical across runs and jobs", 0.0,
       [&] { return determinism(scratch); }},
      {11, "Layer ablation over 4 subsets", 0.0, [&] { return layer_ablation(scratch); }},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = crit.body();
    } catch (const std::exception& e) {
      check.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.time_limit_s > 0.0 && secs > crit.time_limit_s) {
      check.fail("took " + fmt(secs) + " s, limit " + fmt(crit.time_limit_s) + " s");
    }
    failed += check.ok ? 0 : 1;
    std::printf("%s %2d  %-52s %8.3f s  %s\n", check.ok ? "PASS" : "FAIL", crit.id,
                crit.name.c_str(), secs, check.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
