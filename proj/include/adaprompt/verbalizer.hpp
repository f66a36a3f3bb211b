#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "adaprompt/vocab.hpp"

namespace adaprompt {

struct RelationLabel {
  std::string raw;      // e.g. "per:city_of_death"; non-empty, no whitespace
  int class_index = -1; // contiguous from 0 within a schema

  bool operator==(const RelationLabel& other) const {
    return raw == other.raw && class_index == other.class_index;
  }
};

// The word set a relation label verbalizes to, plus (once resolved against a
// backend vocabulary) the token ids for each word. A word that splits into
// several subword units keeps all of them, in order.
struct LabelWordSet {
  RelationLabel label;
  std::vector<std::string> words;
  std::vector<std::vector<int>> vocab_ids;  // parallel to words; empty until resolved
};

// Decomposition rules. Lookup of abbreviations and stopwords is
// case-insensitive on the fragment.
struct RuleConfig {
  std::map<std::string, std::string> abbreviations = {
      {"per", "person"}, {"org", "organization"}, {"gpe", "country"}};
  // "by" is deliberately absent: with it, label pairs that differ only by a
  // trailing "_by" (org:founded / org:founded_by in the standard TACRED
  // inventory) would collapse to the same word set and break injectivity.
  std::set<std::string> stopwords = {"of", "in", "and", "or"};
  std::string na_word = "none";

  static RuleConfig from_json(const std::string& json_text);
  std::string to_json() const;
};

class RelationSchema {
 public:
  // Builds the schema, decomposes every label, and enforces injectivity of
  // the label -> word-set map. Raises duplicate_label / empty_decomposition /
  // duplicate_word_set.
  static RelationSchema build(const std::vector<std::string>& label_strings,
                              const std::optional<std::string>& na_string,
                              const RuleConfig& rules = RuleConfig{});

  const std::vector<RelationLabel>& labels() const { return labels_; }
  int num_classes() const { return static_cast<int>(labels_.size()); }

  const std::optional<RelationLabel>& na_label() const { return na_label_; }
  int na_index() const { return na_label_ ? na_label_->class_index : -1; }
  bool is_na(int class_index) const { return na_label_ && na_label_->class_index == class_index; }

  const RuleConfig& rules() const { return rules_; }

  const RelationLabel& label(int class_index) const;
  const RelationLabel* find(const std::string& raw) const;  // nullptr when absent
  const RelationLabel& require(const std::string& raw) const;

  // Unresolved word set for a label (words only, no vocab ids).
  const LabelWordSet& word_set(int class_index) const;

  // Exports [{label, class_index, words}] as JSON.
  std::string export_json() const;

 private:
  std::vector<RelationLabel> labels_;
  std::optional<RelationLabel> na_label_;
  RuleConfig rules_;
  std::vector<LabelWordSet> word_sets_;
};

// Applies the five decomposition rules to one label: split on ":" and "_",
// expand abbreviations, drop stopwords, lowercase, dedupe keeping first
// occurrence. The schema's designated N/A label maps to {rules.na_word}.
LabelWordSet decompose(const RelationLabel& label, const RelationSchema& schema);

// Rule application without a schema context (used by build internally).
std::vector<std::string> decompose_words(const std::string& raw, const RuleConfig& rules);

// Fills vocab_ids for every word. A word may span several subword units;
// raises unresolvable_word when a word yields no units at all.
LabelWordSet resolve_vocab(const LabelWordSet& word_set, const Vocab& vocab);

// Resolves every label of the schema, returned indexed by class_index.
std::vector<LabelWordSet> resolve_schema(const RelationSchema& schema, const Vocab& vocab);

}  // namespace adaprompt
