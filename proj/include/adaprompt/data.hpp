#pragma once

#include <string>
#include <vector>

#include "adaprompt/error.hpp"

namespace adaprompt {

// Token index range [start, end).
struct Span {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool overlaps(const Span& other) const { return start < other.end && other.start < end; }
};

// One relation instance: a word-token sequence with subject/object spans and
// a gold relation string. Dialogue inputs are flattened into this form at
// load time.
struct Example {
  std::string id;
  std::vector<std::string> tokens;
  Span subj;
  Span obj;
  std::string relation;
};

enum class DataFormat { auto_detect, jsonl, tacred, dialogre };

DataFormat data_format_from_string(const std::string& name);

// Validates spans and id uniqueness; raises parse_error / invalid_argument.
void validate_examples(const std::vector<Example>& examples);

// Loads one file. Canonical format is JSON-lines with sentence-level records
//   {"id", "tokens": [...], "subj_span": [s,e), "obj_span": [s,e), "relation"}
// or dialogue-level records
//   {"id", "turns": [{"speaker", "tokens": [...]}...], "subj", "obj", "relations": [...]}
// Converters for the public TACRED JSON (array of objects, inclusive span
// ends) and DialogRE JSON (array of [turn strings, relation dicts]) layouts
// are applied when the format says so or auto-detection recognizes them.
std::vector<Example> load_examples(const std::string& path,
                                   DataFormat format = DataFormat::auto_detect);

// Parses examples from in-memory text (same formats as load_examples).
std::vector<Example> parse_examples(const std::string& text, DataFormat format,
                                    const std::string& origin = "<memory>");

// Distinct relation strings in first-appearance order.
std::vector<std::string> relation_inventory(const std::vector<Example>& examples);

// Flattens dialogue turns to "SPEAKER : utterance" lines joined in turn
// order, then locates the first occurrences of subj/obj (case-insensitive
// whole-token match). Expands one instance per relation string.
std::vector<Example> flatten_dialogue(const std::string& id,
                                      const std::vector<std::pair<std::string, std::vector<std::string>>>& turns,
                                      const std::string& subj, const std::string& obj,
                                      const std::vector<std::string>& relations);

// Plain-text corpus: one whitespace-tokenized sequence per line.
std::vector<std::vector<std::string>> load_text_corpus(const std::string& path);

}  // namespace adaprompt
