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
#ifndef MLSUM_TOOLS_CONFIG_IO_H_
#define MLSUM_TOOLS_CONFIG_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mlsum/pipeline.h"

namespace mlsum::cli {

// Where concept chains come from when annotation files are given.
enum class CorefSource {
  Auto,      // chain records from the files, else derived from mentions
  File,      // chain records only
  Fallback,  // always derived from mentions
};

struct DocumentEntry {
  std::string doc_id;
  std::filesystem::path input;
  std::vector<std::filesystem::path> annotations;
  std::optional<std::filesystem::path> reference;
};

struct RunManifest {
  std::filesystem::path corpus_dir;
  std::vector<DocumentEntry> documents;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> abbreviations;
  std::optional<std::filesystem::path> idf;
  std::filesystem::path output_dir = "mlsum-out";
  bool presegmented = false;
  CorefSource coref = CorefSource::Auto;
  TermFilter rouge_filter;
  // Set by --seedless; recorded in run_config.json.
  bool seedless = false;
  PipelineConfig config;
};

// Fills cfg from the "system", "summary", "graph", "multirank", "lexrank"
// and "average_weights" members of j; absent members keep their values.
// Throws InvalidArgument on unknown enum names or wrong types.
void apply_config_json(const nlohmann::json& j, PipelineConfig& cfg);
nlohmann::ordered_json config_to_json(const PipelineConfig& cfg);

// Relative paths resolve against corpus_dir, which itself resolves
// against the manifest's directory. Without a "documents" list the corpus
// directory is scanned: every <id>.txt except <id>.ref.txt is a document,
// <id>.ref.txt its reference and <id>.jsonl its annotations.
RunManifest load_manifest(const std::filesystem::path& path);
std::vector<DocumentEntry> discover_documents(const std::filesystem::path& corpus_dir);

std::optional<CorefSource> parse_coref_source(std::string_view name);
std::string_view to_string(CorefSource source);

std::vector<SimilarityKind> parse_layer_list(const std::vector<std::string>& names);

}  // namespace mlsum::cli

#endif  // MLSUM_TOOLS_CONFIG_IO_H_
