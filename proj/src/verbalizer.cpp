#include "adaprompt/verbalizer.hpp"

#include <algorithm>

#include "json.hpp"

namespace adaprompt {

RuleConfig RuleConfig::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::parse_error, std::string("bad rule config json: ") + e.what());
  }
  RuleConfig rc;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "abbreviations") {
      rc.abbreviations.clear();
      for (auto ab = it.value().begin(); ab != it.value().end(); ++ab) {
        rc.abbreviations[lowercase(ab.key())] = lowercase(ab.value().get<std::string>());
      }
    } else if (it.key() == "stopwords") {
      rc.stopwords.clear();
      for (const auto& s : it.value()) rc.stopwords.insert(lowercase(s.get<std::string>()));
    } else if (it.key() == "na_word") {
      rc.na_word = lowercase(it.value().get<std::string>());
    } else {
      raise(ErrorCode::config_error, "unknown rule config key: " + it.key());
    }
  }
  return rc;
}

std::string RuleConfig::to_json() const {
  nlohmann::json j;
  j["abbreviations"] = abbreviations;
  j["stopwords"] = stopwords;
  j["na_word"] = na_word;
  return j.dump(2);
}

std::vector<std::string> decompose_words(const std::string& raw, const RuleConfig& rules) {
  // 1. split on ":" and "_"
  std::vector<std::string> fragments;
  std::string cur;
  for (char c : raw) {
    if (c == ':' || c == '_') {
      if (!cur.empty()) fragments.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) fragments.push_back(cur);

  std::vector<std::string> words;
  for (auto& frag : fragments) {
    std::string key = lowercase(frag);
    // 2. abbreviation expansion
    auto ab = rules.abbreviations.find(key);
    if (ab != rules.abbreviations.end()) key = ab->second;
    // 3. stopword removal
    if (rules.stopwords.count(key)) continue;
    // 4. lowercase happened with the lookup key; 5. dedupe keeping first
    if (std::find(words.begin(), words.end(), key) == words.end()) {
      words.push_back(key);
    }
  }
  return words;
}

LabelWordSet decompose(const RelationLabel& label, const RelationSchema& schema) {
  LabelWordSet ws;
  ws.label = label;
  if (schema.is_na(label.class_index)) {
    ws.words = {schema.rules().na_word};
    return ws;
  }
  ws.words = decompose_words(label.raw, schema.rules());
  if (ws.words.empty()) {
    raise(ErrorCode::empty_decomposition,
          "label '" + label.raw + "' decomposes to no words under the active rules");
  }
  return ws;
}

RelationSchema RelationSchema::build(const std::vector<std::string>& label_strings,
                                     const std::optional<std::string>& na_string,
                                     const RuleConfig& rules) {
  if (label_strings.empty()) {
    raise(ErrorCode::invalid_argument, "schema needs at least one label");
  }
  RelationSchema schema;
  schema.rules_ = rules;
  for (const auto& raw : label_strings) {
    if (raw.empty() || raw.find_first_of(" \t\n\r") != std::string::npos) {
      raise(ErrorCode::invalid_argument, "label string empty or contains whitespace: '" + raw + "'");
    }
    if (schema.find(raw) != nullptr) {
      raise(ErrorCode::duplicate_label, "label appears twice: " + raw);
    }
    schema.labels_.push_back({raw, static_cast<int>(schema.labels_.size())});
  }
  if (na_string) {
    const RelationLabel* na = schema.find(*na_string);
    if (na == nullptr) {
      raise(ErrorCode::config_error, "N/A label '" + *na_string + "' is not in the label list");
    }
    schema.na_label_ = *na;
  }
  // Decompose every label and enforce injectivity of the word-set map.
  for (const auto& label : schema.labels_) {
    schema.word_sets_.push_back(decompose(label, schema));
  }
  for (size_t a = 0; a < schema.word_sets_.size(); ++a) {
    for (size_t b = a + 1; b < schema.word_sets_.size(); ++b) {
      if (schema.word_sets_[a].words == schema.word_sets_[b].words) {
        raise(ErrorCode::duplicate_word_set,
              "labels '" + schema.labels_[a].raw + "' and '" + schema.labels_[b].raw +
                  "' decompose to the same word set");
      }
    }
  }
  return schema;
}

const RelationLabel& RelationSchema::label(int class_index) const {
  if (class_index < 0 || class_index >= num_classes()) {
    raise(ErrorCode::invalid_argument, "class index " + std::to_string(class_index) + " out of range");
  }
  return labels_[static_cast<size_t>(class_index)];
}

const RelationLabel* RelationSchema::find(const std::string& raw) const {
  for (const auto& l : labels_) {
    if (l.raw == raw) return &l;
  }
  return nullptr;
}

const RelationLabel& RelationSchema::require(const std::string& raw) const {
  const RelationLabel* l = find(raw);
  if (l == nullptr) {
    raise(ErrorCode::invalid_argument, "unknown relation label: " + raw);
  }
  return *l;
}

const LabelWordSet& RelationSchema::word_set(int class_index) const {
  label(class_index);  // bounds check
  return word_sets_[static_cast<size_t>(class_index)];
}

std::string RelationSchema::export_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& ws : word_sets_) {
    nlohmann::json item;
    item["label"] = ws.label.raw;
    item["class_index"] = ws.label.class_index;
    item["words"] = ws.words;
    out.push_back(item);
  }
  return out.dump(2);
}

LabelWordSet resolve_vocab(const LabelWordSet& word_set, const Vocab& vocab) {
  LabelWordSet resolved = word_set;
  resolved.vocab_ids.clear();
  for (const auto& word : resolved.words) {
    std::vector<int> ids = vocab.encode_word(word);
    if (ids.empty()) {
      raise(ErrorCode::unresolvable_word,
            "label word '" + word + "' (label '" + word_set.label.raw +
                "') has no vocabulary units");
    }
    resolved.vocab_ids.push_back(std::move(ids));
  }
  return resolved;
}

std::vector<LabelWordSet> resolve_schema(const RelationSchema& schema, const Vocab& vocab) {
  std::vector<LabelWordSet> out;
  out.reserve(static_cast<size_t>(schema.num_classes()));
  for (int c = 0; c < schema.num_classes(); ++c) {
    out.push_back(resolve_vocab(schema.word_set(c), vocab));
  }
  return out;
}

}  // namespace adaprompt
