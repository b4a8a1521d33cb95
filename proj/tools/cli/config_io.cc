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
#include "cli/config_io.h"

#include <algorithm>
#include <fstream>
#include <set>

namespace mlsum::cli {

namespace fs = std::filesystem;

namespace {

template <typename T>
void read_if(const nlohmann::json& obj, const char* key, T& target) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return;
  try {
    target = it->get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidArgument(std::string("config: field '") + key + "' has the wrong type");
  }
}

std::string read_name(const nlohmann::json& obj, const char* key, std::string fallback) {
  read_if(obj, key, fallback);
  return fallback;
}

fs::path resolve(const fs::path& base, const fs::path& p) {
  return p.is_absolute() ? p : base / p;
}

}  // namespace

std::optional<CorefSource> parse_coref_source(std::string_view name) {
  for (auto s : {CorefSource::Auto, CorefSource::File, CorefSource::Fallback}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::string_view to_string(CorefSource source) {
  switch (source) {
    case CorefSource::Auto:
      return "auto";
    case CorefSource::File:
      return "file";
    case CorefSource::Fallback:
      return "fallback";
  }
  return "auto";
}

std::vector<SimilarityKind> parse_layer_list(const std::vector<std::string>& names) {
  std::vector<SimilarityKind> out;
  for (const auto& raw : names) {
    // Accept "semantic,word" as well as repeated values.
    std::size_t b = 0;
    while (b <= raw.size()) {
      std::size_t e = raw.find(',', b);
      if (e == std::string::npos) e = raw.size();
      const std::string name = raw.substr(b, e - b);
      if (!name.empty()) {
        auto kind = parse_similarity_kind(name);
        if (!kind) throw InvalidArgument("unknown layer '" + name + "'");
        out.push_back(*kind);
      }
      b = e + 1;
    }
  }
  return out;
}

void apply_config_json(const nlohmann::json& j, PipelineConfig& cfg) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  if (j.contains("system")) {
    const auto name = read_name(j, "system", "");
    auto kind = parse_system_kind(name);
    if (!kind) throw InvalidArgument("unknown system '" + name + "'");
    cfg.system = *kind;
  }
  if (auto it = j.find("summary"); it != j.end()) {
    const auto& s = *it;
    read_if(s, "rate", cfg.summary.compression_rate);
    read_if(s, "gamma", cfg.summary.gamma);
    read_if(s, "theta", cfg.summary.theta);
    read_if(s, "allow_extreme_weights", cfg.summary.allow_extreme_weights);
    if (s.contains("mode")) {
      const auto mode = read_name(s, "mode", "");
      if (mode == "basic") {
        cfg.summary.mode = SelectionMode::Basic;
      } else if (mode == "enhanced") {
        cfg.summary.mode = SelectionMode::Enhanced;
      } else {
        throw InvalidArgument("unknown summary mode '" + mode + "'");
      }
    }
    if (s.contains("centrality_term")) {
      const auto term = read_name(s, "centrality_term", "");
      if (term == "value") {
        cfg.summary.centrality_term = CentralityTerm::Value;
      } else if (term == "rank") {
        cfg.summary.centrality_term = CentralityTerm::Rank;
      } else {
        throw InvalidArgument("unknown centrality term '" + term + "'");
      }
    }
    if (s.contains("order")) {
      const auto order = read_name(s, "order", "");
      if (order == "document") {
        cfg.summary.output_order = OutputOrder::Document;
      } else if (order == "score") {
        cfg.summary.output_order = OutputOrder::Score;
      } else {
        throw InvalidArgument("unknown output order '" + order + "'");
      }
    }
  }
  if (auto it = j.find("graph"); it != j.end()) {
    const auto& g = *it;
    if (g.contains("mode")) {
      const auto mode = read_name(g, "mode", "");
      if (mode == "weighted") {
        cfg.graph.mode = EdgeMode::Weighted;
      } else if (mode == "unweighted") {
        cfg.graph.mode = EdgeMode::Unweighted;
      } else {
        throw InvalidArgument("unknown graph mode '" + mode + "'");
      }
    }
    read_if(g, "threshold", cfg.graph.threshold);
    read_if(g, "ngram_word", cfg.graph.word_ngram);
    read_if(g, "ngram_concept", cfg.graph.concept_ngram);
    read_if(g, "stem", cfg.graph.word_filter.stem);
    read_if(g, "remove_stopwords", cfg.graph.word_filter.remove_stopwords);
    if (g.contains("layers")) {
      std::vector<std::string> names;
      read_if(g, "layers", names);
      cfg.graph.layers = parse_layer_list(names);
    }
  }
  if (auto it = j.find("multirank"); it != j.end()) {
    read_if(*it, "damping", cfg.multirank.damping);
    read_if(*it, "tolerance", cfg.multirank.tolerance);
    read_if(*it, "max_iterations", cfg.multirank.max_iterations);
  }
  if (auto it = j.find("lexrank"); it != j.end()) {
    read_if(*it, "threshold", cfg.lexrank.cosine_threshold);
    read_if(*it, "damping", cfg.lexrank.damping);
    if (it->contains("idf")) {
      const auto src = read_name(*it, "idf", "");
      if (src == "document") {
        cfg.lexrank.idf_source = IdfSource::PerDocument;
      } else if (src == "corpus") {
        cfg.lexrank.idf_source = IdfSource::Corpus;
      } else {
        throw InvalidArgument("unknown idf source '" + src + "'");
      }
    }
  }
  read_if(j, "average_weights", cfg.average_weights);
}

nlohmann::ordered_json config_to_json(const PipelineConfig& cfg) {
  nlohmann::ordered_json j;
  j["system"] = std::string(to_string(cfg.system));
  nlohmann::ordered_json s;
  s["rate"] = cfg.summary.compression_rate;
  s["mode"] = std::string(to_string(cfg.summary.mode));
  s["gamma"] = cfg.summary.gamma;
  s["theta"] = cfg.summary.theta;
  s["centrality_term"] = std::string(to_string(cfg.summary.centrality_term));
  s["order"] = std::string(to_string(cfg.summary.output_order));
  s["allow_extreme_weights"] = cfg.summary.allow_extreme_weights;
  j["summary"] = std::move(s);
  nlohmann::ordered_json g;
  g["mode"] = cfg.graph.mode == EdgeMode::Weighted ? "weighted" : "unweighted";
  g["threshold"] = cfg.graph.threshold;
  auto layers = nlohmann::ordered_json::array();
  for (auto k : cfg.graph.layers) layers.push_back(std::string(to_string(k)));
  g["layers"] = std::move(layers);
  g["ngram_word"] = cfg.graph.word_ngram;
  g["ngram_concept"] = cfg.graph.concept_ngram;
  g["stem"] = cfg.graph.word_filter.stem;
  g["remove_stopwords"] = cfg.graph.word_filter.remove_stopwords;
  j["graph"] = std::move(g);
  nlohmann::ordered_json m;
  m["damping"] = cfg.multirank.damping;
  m["tolerance"] = cfg.multirank.tolerance;
  m["max_iterations"] = cfg.multirank.max_iterations;
  j["multirank"] = std::move(m);
  nlohmann::ordered_json l;
  l["threshold"] = cfg.lexrank.cosine_threshold;
  l["damping"] = cfg.lexrank.damping;
  l["idf"] = cfg.lexrank.idf_source == IdfSource::PerDocument ? "document" : "corpus";
  j["lexrank"] = std::move(l);
  j["average_weights"] = cfg.average_weights;
  return j;
}

std::vector<DocumentEntry> discover_documents(const fs::path& corpus_dir) {
  if (!fs::is_directory(corpus_dir)) {
    throw IoError("corpus directory not found: " + corpus_dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(corpus_dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<DocumentEntry> docs;
  for (const auto& f : files) {
    const std::string name = f.filename().string();
    const std::string suffix = ".txt";
    if (name.size() <= suffix.size() || name.compare(name.size() - 4, 4, suffix) != 0) continue;
    if (name.size() > 8 && name.compare(name.size() - 8, 8, ".ref.txt") == 0) continue;
    DocumentEntry d;
    d.doc_id = name.substr(0, name.size() - 4);
    d.input = f;
    const auto ref = corpus_dir / (d.doc_id + ".ref.txt");
    if (fs::exists(ref)) d.reference = ref;
    const auto ann = corpus_dir / (d.doc_id + ".jsonl");
    if (fs::exists(ann)) d.annotations.push_back(ann);
    docs.push_back(std::move(d));
  }
  return docs;
}

RunManifest load_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string(), 0, e.what());
  }
  if (!j.is_object()) throw ParseError(path.string(), 0, "manifest must be a JSON object");

  RunManifest m;
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::string corpus_dir = ".";
  read_if(j, "corpus_dir", corpus_dir);
  m.corpus_dir = resolve(base, corpus_dir);

  auto optional_path = [&](const char* key) -> std::optional<fs::path> {
    std::string p;
    read_if(j, key, p);
    if (p.empty()) return std::nullopt;
    return resolve(m.corpus_dir, p);
  };
  m.lexicon = optional_path("lexicon");
  m.abbreviations = optional_path("abbreviations");
  m.idf = optional_path("idf");
  std::string out_dir;
  read_if(j, "output_dir", out_dir);
  if (!out_dir.empty()) m.output_dir = resolve(base, out_dir);
  read_if(j, "presegmented", m.presegmented);
  if (j.contains("coref")) {
    auto src = parse_coref_source(read_name(j, "coref", ""));
    if (!src) throw InvalidArgument("manifest: unknown coref source");
    m.coref = *src;
  }
  if (auto it = j.find("rouge"); it != j.end()) {
    read_if(*it, "stem", m.rouge_filter.stem);
    read_if(*it, "remove_stopwords", m.rouge_filter.remove_stopwords);
  }
  apply_config_json(j, m.config);

  if (auto it = j.find("documents"); it != j.end()) {
    if (!it->is_array()) throw ParseError(path.string(), 0, "'documents' must be an array");
    std::set<std::string> ids;
    for (const auto& d : *it) {
      DocumentEntry e;
      std::string input;
      read_if(d, "doc_id", e.doc_id);
      read_if(d, "input", input);
      if (input.empty()) throw ParseError(path.string(), 0, "document entry without 'input'");
      e.input = resolve(m.corpus_dir, input);
      if (e.doc_id.empty()) e.doc_id = e.input.stem().string();
      if (!ids.insert(e.doc_id).second) {
        throw ValidationError("manifest: duplicate doc_id '" + e.doc_id + "'");
      }
      if (auto a = d.find("annotations"); a != d.end()) {
        if (a->is_string()) {
          e.annotations.push_back(resolve(m.corpus_dir, a->get<std::string>()));
        } else {
          std::vector<std::string> list;
          read_if(d, "annotations", list);
          for (const auto& p : list) e.annotations.push_back(resolve(m.corpus_dir, p));
        }
      }
      std::string ref;
      read_if(d, "reference", ref);
      if (!ref.empty()) e.reference = resolve(m.corpus_dir, ref);
      m.documents.push_back(std::move(e));
    }
  } else {
    m.documents = discover_documents(m.corpus_dir);
  }
  return m;
}

}  // namespace mlsum::cli
