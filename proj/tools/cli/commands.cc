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

#include "cli/commands.h"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "mlsum/pipeline.h"
#include "mlsum/report.h"
#include "mlsum/rouge.h"

namespace mlsum::cli {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

Document read_document(const fs::path& input, std::string doc_id, bool presegmented,
                       const AbbreviationList& abbreviations) {
  std::string text = read_file(input);
  if (presegmented) {
    const auto lines = lines_of(text);
    return make_document_from_sentences(std::move(doc_id), lines);
  }
  return make_document(std::move(doc_id), std::move(text), abbreviations);
}

std::vector<std::string> reference_sentences(const fs::path& path, bool presegmented) {
  const std::string text = read_file(path);
  if (presegmented) return lines_of(text);
  std::vector<std::string> out;
  for (const auto& s : segment_sentences(text)) out.push_back(s.text);
  return out;
}

// Command-line overrides of pipeline settings. Values are only applied
// when the corresponding option was given.
struct ConfigFlags {
  double rate = 0.0;
  std::string mode;
  double gamma = 0.0;
  double theta = 0.0;
  bool allow_extreme = false;
  std::string centrality_term;
  std::string order;
  std::vector<std::string> layers;
  std::string graph_mode;
  double threshold = 0.0;
  std::size_t ngram_word = 0;
  std::size_t ngram_concept = 0;
  bool stem_words = false;
  bool drop_stopwords = false;
  double damping = 0.0;
  double tolerance = 0.0;
  std::size_t max_iter = 0;
  std::string system;
  double lexrank_threshold = 0.0;
  std::vector<double> average_weights;
  std::string manifest;
  bool seedless = false;

  std::vector<std::pair<CLI::Option*, std::function<void(PipelineConfig&)>>> setters;

  template <typename T>
  void bind(CLI::App* app, const std::string& name, T& value, const std::string& help,
            std::function<void(PipelineConfig&)> apply) {
    auto* opt = app->add_option(name, value, help);
    setters.emplace_back(opt, std::move(apply));
  }

  void attach(CLI::App* app) {
    bind(app, "--rate", rate, "Compression rate in (0, 1]",
         [this](PipelineConfig& c) { c.summary.compression_rate = rate; });
    bind(app, "--mode", mode, "basic | enhanced", [this](PipelineConfig& c) {
      if (mode == "basic") {
        c.summary.mode = SelectionMode::Basic;
      } else if (mode == "enhanced") {
        c.summary.mode = SelectionMode::Enhanced;
      } else {
        throw InvalidArgument("--mode must be basic or enhanced");
      }
    });
    bind(app, "--gamma", gamma, "Centrality weight (enhanced mode)",
         [this](PipelineConfig& c) { c.summary.gamma = gamma; });
    bind(app, "--theta", theta, "Concept-share weight (enhanced mode)",
         [this](PipelineConfig& c) { c.summary.theta = theta; });
    auto* extreme = app->add_flag("--allow-extreme-weights", allow_extreme,
                                  "Permit gamma/theta outside [-1, 1]");
    setters.emplace_back(extreme, [this](PipelineConfig& c) {
      c.summary.allow_extreme_weights = allow_extreme;
    });
    bind(app, "--centrality-term", centrality_term, "value | rank", [this](PipelineConfig& c) {
      if (centrality_term == "value") {
        c.summary.centrality_term = CentralityTerm::Value;
      } else if (centrality_term == "rank") {
        c.summary.centrality_term = CentralityTerm::Rank;
      } else {
        throw InvalidArgument("--centrality-term must be value or rank");
      }
    });
    bind(app, "--order", order, "document | score", [this](PipelineConfig& c) {
      if (order == "document") {
        c.summary.output_order = OutputOrder::Document;
      } else if (order == "score") {
        c.summary.output_order = OutputOrder::Score;
      } else {
        throw InvalidArgument("--order must be document or score");
      }
    });
    bind(app, "--layers", layers, "Layer subset, e.g. semantic,word,coref",
         [this](PipelineConfig& c) { c.graph.layers = parse_layer_list(layers); });
    bind(app, "--graph", graph_mode, "weighted | unweighted", [this](PipelineConfig& c) {
      if (graph_mode == "weighted") {
        c.graph.mode = EdgeMode::Weighted;
      } else if (graph_mode == "unweighted") {
        c.graph.mode = EdgeMode::Unweighted;
      } else {
        throw InvalidArgument("--graph must be weighted or unweighted");
      }
    });
    bind(app, "--threshold", threshold, "Edge threshold for unweighted graphs",
         [this](PipelineConfig& c) { c.graph.threshold = threshold; });
    bind(app, "--ngram-word", ngram_word, "n-gram order of the word layer",
         [this](PipelineConfig& c) { c.graph.word_ngram = ngram_word; });
    bind(app, "--ngram-concept", ngram_concept, "n-gram order of the semantic layer",
         [this](PipelineConfig& c) { c.graph.concept_ngram = ngram_concept; });
    auto* stem = app->add_flag("--stem-words", stem_words, "Porter-stem words in the word layer");
    setters.emplace_back(stem, [this](PipelineConfig& c) { c.graph.word_filter.stem = stem_words; });
    auto* stop = app->add_flag("--drop-stopwords", drop_stopwords,
                               "Ignore stopwords in the word layer");
    setters.emplace_back(stop, [this](PipelineConfig& c) {
      c.graph.word_filter.remove_stopwords = drop_stopwords;
    });
    bind(app, "--damping", damping, "Damping factor",
         [this](PipelineConfig& c) {
           c.multirank.damping = damping;
           c.lexrank.damping = damping;
         });
    bind(app, "--tolerance", tolerance, "L1 convergence tolerance",
         [this](PipelineConfig& c) { c.multirank.tolerance = tolerance; });
    bind(app, "--max-iter", max_iter, "Iteration cap",
         [this](PipelineConfig& c) { c.multirank.max_iterations = max_iter; });
    bind(app, "--system", system, "multirank | lexrank | weighted-average",
         [this](PipelineConfig& c) {
           auto k = parse_system_kind(system);
           if (!k) throw InvalidArgument("unknown --system '" + system + "'");
           c.system = *k;
         });
    bind(app, "--lexrank-threshold", lexrank_threshold, "LexRank cosine threshold",
         [this](PipelineConfig& c) { c.lexrank.cosine_threshold = lexrank_threshold; });
    bind(app, "--average-weights", average_weights, "Layer weights for weighted-average",
         [this](PipelineConfig& c) { c.average_weights = average_weights; });
    app->add_option("--manifest", manifest, "JSON manifest with run settings");
    app->add_flag("--seedless", seedless,
                  "Fail unless the run is free of random number generation");
  }

  void apply(PipelineConfig& cfg) const {
    for (const auto& [opt, set] : setters) {
      if (opt->count() > 0) set(cfg);
    }
  }
};

// No pipeline component draws random numbers; --seedless makes that an
// explicit precondition of the run.
constexpr bool kPipelineUsesRandomness = false;

void check_seedless(const ConfigFlags& flags) {
  if (flags.seedless && kPipelineUsesRandomness) {
    throw ValidationError("--seedless: the configured pipeline uses random numbers");
  }
}

std::string to_json_text(const Summary& s) {
  std::ostringstream out;
  write_summary_json(out, s);
  return out.str();
}

std::string to_text(const Summary& s) {
  std::ostringstream out;
  write_summary_text(out, s);
  return out.str();
}

std::string reports_json(const std::vector<RougeReport>& reports) {
  std::ostringstream out;
  write_reports_json(out, reports);
  return out.str();
}

std::string reports_csv(const std::vector<RougeReport>& reports) {
  std::ostringstream out;
  write_reports_csv(out, reports);
  return out.str();
}

}  // namespace

AnnotatedDocument load_annotated_document(const DocumentSource& src) {
  const AbbreviationList& abbreviations =
      src.abbreviations ? *src.abbreviations : AbbreviationList::Default();
  AnnotatedDocument doc;
  doc.document = read_document(src.input, src.doc_id, src.presegmented, abbreviations);
  if (!src.annotations.empty()) {
    std::vector<ConceptMention> mentions;
    std::vector<CorefChain> chains;
    for (const auto& path : src.annotations) {
      auto set = load_annotations(path, doc.document);
      mentions = merge_mentions(mentions, set.mentions);
      for (auto& c : set.chains) {
        if (std::find(chains.begin(), chains.end(), c) == chains.end()) chains.push_back(std::move(c));
      }
    }
    doc.concept_mentions = std::move(mentions);
    const bool derive = src.coref == CorefSource::Fallback ||
                        (src.coref == CorefSource::Auto && chains.empty());
    doc.coref_chains = derive ? derive_coref_chains_fallback(doc.document, doc.concept_mentions)
                              : std::move(chains);
  } else if (src.lexicon != nullptr) {
    doc.concept_mentions = annotate_concepts_dictionary(doc.document, *src.lexicon);
    doc.coref_chains = derive_coref_chains_fallback(doc.document, doc.concept_mentions);
  }
  return doc;
}

CorpusRunResult run_corpus(const RunManifest& manifest, std::size_t jobs) {
  manifest.config.validate();
  std::optional<Lexicon> lexicon;
  if (manifest.lexicon) lexicon = Lexicon::Load(*manifest.lexicon);
  std::optional<AbbreviationList> abbreviations;
  if (manifest.abbreviations) abbreviations = AbbreviationList::Load(*manifest.abbreviations);
  std::optional<IdfTable> idf;
  if (manifest.idf) idf = IdfTable::Load(*manifest.idf);

  const std::size_t n = manifest.documents.size();
  struct Slot {
    std::optional<RougeReport> report;
    std::string warning;
    std::string error;
  };
  std::vector<Slot> slots(n);
  const fs::path summaries = manifest.output_dir / "summaries";
  fs::create_directories(summaries);

  auto process = [&](std::size_t i) {
    const auto& entry = manifest.documents[i];
    Slot& slot = slots[i];
    try {
      DocumentSource src{entry.doc_id,
                         entry.input,
                         entry.annotations,
                         lexicon ? &*lexicon : nullptr,
                         abbreviations ? &*abbreviations : nullptr,
                         manifest.presegmented,
                         manifest.coref};
      const AnnotatedDocument doc = load_annotated_document(src);
      const PipelineResult result = summarize(doc, manifest.config, idf ? &*idf : nullptr);
      if (result.multirank && !result.multirank->converged) {
        slot.warning = entry.doc_id + ": solver did not converge after " +
                       std::to_string(result.multirank->iterations) + " iterations (residual " +
                       format_double(result.multirank->final_residual) + ")";
      }
      write_file_atomic(summaries / (entry.doc_id + ".json"), to_json_text(result.summary));
      write_file_atomic(summaries / (entry.doc_id + ".txt"), to_text(result.summary));
      if (entry.reference) {
        const auto ref = reference_sentences(*entry.reference, manifest.presegmented);
        slot.report = evaluate_rouge(entry.doc_id, result.summary.sentences, ref,
                                     manifest.rouge_filter);
      }
    } catch (const std::exception& e) {
      slot.error = entry.doc_id + ": " + e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) process(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  CorpusRunResult out;
  out.documents = n;
  for (auto& slot : slots) {
    if (slot.report) out.reports.push_back(std::move(*slot.report));
    if (!slot.warning.empty()) out.warnings.push_back(std::move(slot.warning));
    if (!slot.error.empty()) out.errors.push_back(std::move(slot.error));
  }
  write_file_atomic(manifest.output_dir / "report.json", reports_json(out.reports));
  write_file_atomic(manifest.output_dir / "report.csv", reports_csv(out.reports));
  nlohmann::ordered_json run_info = config_to_json(manifest.config);
  run_info["seedless"] = manifest.seedless;
  run_info["documents"] = n;
  run_info["evaluated"] = out.reports.size();
  write_file_atomic(manifest.output_dir / "run_config.json", run_info.dump(2) + "\n");
  return out;
}

namespace {

int cmd_annotate(const std::string& input, const std::string& lexicon_path,
                 const std::string& output, std::string doc_id, const std::string& abbrev_path,
                 bool presegmented, std::ostream& out, std::ostream& err) {
  const Lexicon lexicon = Lexicon::Load(lexicon_path);
  std::optional<AbbreviationList> abbreviations;
  if (!abbrev_path.empty()) abbreviations = AbbreviationList::Load(abbrev_path);
  if (doc_id.empty()) doc_id = fs::path(input).stem().string();
  DocumentSource src{doc_id, input, {}, &lexicon,
                     abbreviations ? &*abbreviations : nullptr, presegmented, CorefSource::Fallback};
  const AnnotatedDocument doc = load_annotated_document(src);
  std::ostringstream buf;
  write_annotations(buf, doc.document.doc_id, doc.concept_mentions, doc.coref_chains);
  if (output.empty() || output == "-") {
    out << buf.str();
  } else {
    write_file_atomic(output, buf.str());
  }
  err << doc.document.doc_id << ": " << doc.size() << " sentences, "
      << doc.concept_mentions.size() << " mentions, " << doc.coref_chains.size() << " chains\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-layer graph extractive summarizer"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // annotate
  auto* annotate = app.add_subcommand("annotate", "Dictionary-annotate a document (JSONL)");
  std::string a_input, a_lexicon, a_output, a_doc_id, a_abbrev;
  bool a_preseg = false;
  annotate->add_option("--input", a_input, "Plain-text document")->required();
  annotate->add_option("--lexicon", a_lexicon, "TSV lexicon")->required();
  annotate->add_option("--output", a_output, "Annotation JSONL ('-' for stdout)");
  annotate->add_option("--doc-id", a_doc_id, "Document id (default: input file stem)");
  annotate->add_option("--abbreviations", a_abbrev, "Abbreviation guard list");
  annotate->add_flag("--presegmented", a_preseg, "Input holds one sentence per line");

  // summarize
  auto* summarize_cmd = app.add_subcommand("summarize", "Summarize one document");
  ConfigFlags s_flags;
  s_flags.attach(summarize_cmd);
  std::string s_input, s_doc_id, s_lexicon, s_abbrev, s_output, s_text, s_trace, s_graph,
      s_coref = "auto", s_idf;
  std::vector<std::string> s_annotations;
  bool s_preseg = false;
  summarize_cmd->add_option("--input", s_input, "Plain-text document")->required();
  summarize_cmd->add_option("--doc-id", s_doc_id, "Document id (default: input file stem)");
  summarize_cmd->add_option("--annotations", s_annotations, "Annotation JSONL (repeatable)");
  summarize_cmd->add_option("--lexicon", s_lexicon, "TSV lexicon for dictionary annotation");
  summarize_cmd->add_option("--abbreviations", s_abbrev, "Abbreviation guard list");
  summarize_cmd->add_option("--coref", s_coref, "auto | file | fallback");
  summarize_cmd->add_option("--idf", s_idf, "IDF sidecar TSV for LexRank");
  summarize_cmd->add_flag("--presegmented", s_preseg, "Input holds one sentence per line");
  summarize_cmd->add_option("--output", s_output, "Summary JSON (default: stdout)");
  summarize_cmd->add_option("--text-output", s_text, "Summary text, one sentence per line");
  summarize_cmd->add_option("--trace", s_trace, "Convergence trace CSV");
  summarize_cmd->add_option("--graph-dump", s_graph, "Graph JSON");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "ROUGE-score a summary against a reference");
  std::string e_summary, e_system, e_reference, e_output, e_csv;
  bool e_stem = false, e_stop = false, e_ref_lines = false;
  evaluate->add_option("--summary", e_summary, "Summary JSON");
  evaluate->add_option("--system", e_system, "System summary text, one sentence per line");
  evaluate->add_option("--reference", e_reference, "Reference text")->required();
  evaluate->add_option("--output", e_output, "Report JSON (default: stdout)");
  evaluate->add_option("--csv", e_csv, "Report CSV");
  evaluate->add_flag("--stem", e_stem, "Porter-stem tokens before matching");
  evaluate->add_flag("--stopwords", e_stop, "Remove stopwords before matching");
  evaluate->add_flag("--reference-lines", e_ref_lines, "Reference holds one sentence per line");

  // corpus-run
  auto* corpus = app.add_subcommand("corpus-run", "Summarize and evaluate a corpus");
  ConfigFlags c_flags;
  c_flags.attach(corpus);
  std::string c_output_dir;
  std::size_t c_jobs = 1;
  corpus->add_option("--output-dir", c_output_dir, "Output directory");
  corpus->add_option("--jobs", c_jobs, "Worker threads")->check(CLI::PositiveNumber);

  // compare
  auto* compare = app.add_subcommand("compare", "Wilcoxon signed-rank comparison of two report sets");
  std::string k_a, k_b, k_output, k_method = "auto";
  compare->add_option("--a", k_a, "Report set A (JSON or CSV)")->required();
  compare->add_option("--b", k_b, "Report set B (JSON or CSV)")->required();
  compare->add_option("--output", k_output, "Comparison CSV");
  compare->add_option("--method", k_method, "auto | exact | normal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Configuration problems are usage errors; everything after is I/O or
  // validation.
  auto resolve_config = [&](const ConfigFlags& flags, RunManifest& manifest) -> bool {
    try {
      if (!flags.manifest.empty()) manifest = load_manifest(flags.manifest);
      flags.apply(manifest.config);
      manifest.config.validate();
      check_seedless(flags);
      return true;
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << '\n';
      return false;
    }
  };

  try {
    if (*annotate) {
      return cmd_annotate(a_input, a_lexicon, a_output, a_doc_id, a_abbrev, a_preseg, out, err);
    }

    if (*summarize_cmd) {
      RunManifest manifest;
      if (!resolve_config(s_flags, manifest)) return kExitUsage;
      auto coref = parse_coref_source(s_coref);
      if (!coref) {
        err << "error: --coref must be auto, file or fallback\n";
        return kExitUsage;
      }
      std::optional<Lexicon> lexicon;
      if (!s_lexicon.empty()) {
        lexicon = Lexicon::Load(s_lexicon);
      } else if (manifest.lexicon) {
        lexicon = Lexicon::Load(*manifest.lexicon);
      }
      std::optional<AbbreviationList> abbreviations;
      if (!s_abbrev.empty()) abbreviations = AbbreviationList::Load(s_abbrev);
      std::optional<IdfTable> idf;
      if (!s_idf.empty()) idf = IdfTable::Load(s_idf);
      std::vector<fs::path> ann(s_annotations.begin(), s_annotations.end());
      DocumentSource src{s_doc_id.empty() ? fs::path(s_input).stem().string() : s_doc_id,
                         s_input,
                         ann,
                         lexicon ? &*lexicon : nullptr,
                         abbreviations ? &*abbreviations : nullptr,
                         s_preseg || manifest.presegmented,
                         *coref};
      const AnnotatedDocument doc = load_annotated_document(src);
      if (doc.size() == 0) {
        err << "error: document '" << doc.document.doc_id << "' has no sentences\n";
        return kExitValidation;
      }
      const PipelineResult result = summarize(doc, manifest.config, idf ? &*idf : nullptr);
      if (result.multirank && !result.multirank->converged) {
        err << "warning: solver did not converge after " << result.multirank->iterations
            << " iterations (residual " << format_double(result.multirank->final_residual)
            << ")\n";
      }
      if (s_output.empty() || s_output == "-") {
        out << to_json_text(result.summary);
      } else {
        write_file_atomic(s_output, to_json_text(result.summary));
      }
      if (!s_text.empty()) write_file_atomic(s_text, to_text(result.summary));
      if (!s_trace.empty() && result.multirank) {
        std::ostringstream csv;
        write_trace_csv(csv, *result.multirank);
        write_file_atomic(s_trace, csv.str());
      }
      if (!s_graph.empty() && result.graph) {
        std::ostringstream g;
        write_graph_json(g, *result.graph);
        write_file_atomic(s_graph, g.str());
      }
      return kExitOk;
    }

    if (*evaluate) {
      if (e_summary.empty() == e_system.empty()) {
        err << "error: give exactly one of --summary or --system\n";
        return kExitUsage;
      }
      Summary summary;
      if (!e_summary.empty()) {
        std::ifstream in(e_summary);
        if (!in) throw IoError("cannot open " + e_summary);
        summary = read_summary_json(in, e_summary);
      } else {
        summary.doc_id = fs::path(e_system).stem().string();
        summary.sentences = lines_of(read_file(e_system));
      }
      const TermFilter filter{e_stem, e_stop};
      const auto ref = reference_sentences(e_reference, e_ref_lines);
      const std::vector<RougeReport> reports{
          evaluate_rouge(summary.doc_id, summary.sentences, ref, filter)};
      for (auto m : kAllRougeMetrics) {
        if (reports.front()[m].empty_input) {
          err << "warning: " << to_string(m) << ": empty system or reference text\n";
          break;
        }
      }
      if (e_output.empty() || e_output == "-") {
        out << reports_json(reports);
      } else {
        write_file_atomic(e_output, reports_json(reports));
      }
      if (!e_csv.empty()) write_file_atomic(e_csv, reports_csv(reports));
      return kExitOk;
    }

    if (*corpus) {
      RunManifest manifest;
      if (c_flags.manifest.empty()) {
        err << "error: corpus-run requires --manifest\n";
        return kExitUsage;
      }
      if (!resolve_config(c_flags, manifest)) return kExitUsage;
      if (!c_output_dir.empty()) manifest.output_dir = c_output_dir;
      manifest.seedless = c_flags.seedless;
      const CorpusRunResult result = run_corpus(manifest, c_jobs);
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      for (const auto& e : result.errors) err << "error: " << e << '\n';
      out << "documents: " << result.documents << ", evaluated: " << result.reports.size()
          << ", output: " << manifest.output_dir.string() << '\n';
      if (!result.reports.empty()) {
        const RougeReport mean = mean_report(result.reports);
        for (auto m : kAllRougeMetrics) {
          out << to_string(m) << " R=" << format_double(mean[m].recall)
              << " P=" << format_double(mean[m].precision)
              << " F=" << format_double(mean[m].f_measure) << '\n';
        }
      }
      return result.errors.empty() ? kExitOk : kExitValidation;
    }

    if (*compare) {
      WilcoxonMethod method;
      if (k_method == "auto") {
        method = WilcoxonMethod::Auto;
      } else if (k_method == "exact") {
        method = WilcoxonMethod::Exact;
      } else if (k_method == "normal") {
        method = WilcoxonMethod::Normal;
      } else {
        err << "error: --method must be auto, exact or normal\n";
        return kExitUsage;
      }
      const auto a = read_reports(k_a);
      const auto b = read_reports(k_b);
      const auto cells = compare_reports(a, b, method);
      for (const auto& c : cells) {
        if (!c.result) err << "warning: " << to_string(c.metric) << ' ' << to_string(c.facet)
                           << ": " << c.note << '\n';
      }
      write_comparison_table(out, cells);
      if (!k_output.empty()) {
        std::ostringstream csv;
        write_comparison_csv(csv, cells);
        write_file_atomic(k_output, csv.str());
      }
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InsufficientData& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace mlsum::cli
