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
#ifndef MLSUM_TOOLS_COMMANDS_H_
#define MLSUM_TOOLS_COMMANDS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/config_io.h"
#include "mlsum/annotation.h"
#include "mlsum/report.h"

namespace mlsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitValidation = 3,
};

// Parses argv and dispatches to a subcommand: annotate, summarize,
// evaluate, corpus-run, compare. Machine-readable output goes to out,
// warnings and errors to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary file, then renames over path.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

struct DocumentSource {
  std::string doc_id;
  std::filesystem::path input;
  std::vector<std::filesystem::path> annotations;
  const Lexicon* lexicon = nullptr;
  const AbbreviationList* abbreviations = nullptr;
  bool presegmented = false;
  CorefSource coref = CorefSource::Auto;
};

// Reads and segments the input, then attaches concepts and chains from
// the annotation files (merged) or, failing that, from the lexicon.
AnnotatedDocument load_annotated_document(const DocumentSource& src);

struct CorpusRunResult {
  std::size_t documents = 0;
  std::vector<RougeReport> reports;  // documents that had a reference
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
};

// Summarises (and, where a reference exists, evaluates) every manifest
// document with up to 'jobs' worker threads. Writes
//   <out>/summaries/<doc_id>.json and .txt
//   <out>/report.json, <out>/report.csv
//   <out>/run_config.json
// Output bytes do not depend on 'jobs'.
CorpusRunResult run_corpus(const RunManifest& manifest, std::size_t jobs);

}  // namespace mlsum::cli

#endif  // MLSUM_TOOLS_COMMANDS_H_
