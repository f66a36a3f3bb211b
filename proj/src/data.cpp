#include "adaprompt/data.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "adaprompt/vocab.hpp"

namespace adaprompt {

using nlohmann::json;

DataFormat data_format_from_string(const std::string& name) {
  if (name == "auto" || name.empty()) return DataFormat::auto_detect;
  if (name == "jsonl") return DataFormat::jsonl;
  if (name == "tacred") return DataFormat::tacred;
  if (name == "dialogre") return DataFormat::dialogre;
  raise(ErrorCode::config_error, "unknown data format: " + name);
}

void validate_examples(const std::vector<Example>& examples) {
  std::unordered_set<std::string> ids;
  for (const auto& ex : examples) {
    std::string where = "example '" + ex.id + "'";
    if (ex.id.empty()) raise(ErrorCode::parse_error, "example with empty id");
    if (!ids.insert(ex.id).second) raise(ErrorCode::parse_error, "duplicate " + where);
    if (ex.tokens.empty()) raise(ErrorCode::parse_error, where + " has no tokens");
    if (ex.relation.empty()) raise(ErrorCode::parse_error, where + " has no relation");
    int n = static_cast<int>(ex.tokens.size());
    for (const Span* s : {&ex.subj, &ex.obj}) {
      if (s->start < 0 || s->end > n || s->length() <= 0) {
        raise(ErrorCode::parse_error, where + " has an out-of-bounds or empty entity span");
      }
    }
    if (ex.subj.overlaps(ex.obj)) {
      raise(ErrorCode::parse_error, where + " has overlapping entity spans");
    }
  }
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Span span_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    raise(ErrorCode::parse_error, where + ": span must be a [start, end) pair");
  }
  return Span{j.at(0).get<int>(), j.at(1).get<int>()};
}

Example sentence_record(const json& j, const std::string& origin, size_t line_no) {
  Example ex;
  std::string where = origin + ":" + std::to_string(line_no);
  try {
    ex.id = j.at("id").get<std::string>();
    ex.tokens = j.at("tokens").get<std::vector<std::string>>();
    ex.subj = span_from_json(j.at("subj_span"), where);
    ex.obj = span_from_json(j.at("obj_span"), where);
    ex.relation = j.at("relation").get<std::string>();
  } catch (const json::exception& e) {
    raise(ErrorCode::parse_error, where + ": " + e.what());
  }
  return ex;
}

std::vector<Example> dialogue_record(const json& j, const std::string& origin, size_t line_no) {
  std::string where = origin + ":" + std::to_string(line_no);
  try {
    std::vector<std::pair<std::string, std::vector<std::string>>> turns;
    for (const auto& t : j.at("turns")) {
      turns.emplace_back(t.at("speaker").get<std::string>(),
                         t.at("tokens").get<std::vector<std::string>>());
    }
    return flatten_dialogue(j.at("id").get<std::string>(), turns,
                            j.at("subj").get<std::string>(), j.at("obj").get<std::string>(),
                            j.at("relations").get<std::vector<std::string>>());
  } catch (const json::exception& e) {
    raise(ErrorCode::parse_error, where + ": " + e.what());
  }
}

std::vector<Example> parse_jsonl(const std::string& text, const std::string& origin) {
  std::vector<Example> out;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      raise(ErrorCode::parse_error, origin + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (j.contains("turns")) {
      auto expanded = dialogue_record(j, origin, line_no);
      out.insert(out.end(), expanded.begin(), expanded.end());
    } else {
      out.push_back(sentence_record(j, origin, line_no));
    }
  }
  return out;
}

// Public TACRED layout: JSON array of objects with inclusive span ends.
std::vector<Example> parse_tacred(const json& docs, const std::string& origin) {
  std::vector<Example> out;
  for (const auto& d : docs) {
    Example ex;
    try {
      ex.id = d.at("id").get<std::string>();
      ex.tokens = d.at("token").get<std::vector<std::string>>();
      ex.subj = Span{d.at("subj_start").get<int>(), d.at("subj_end").get<int>() + 1};
      ex.obj = Span{d.at("obj_start").get<int>(), d.at("obj_end").get<int>() + 1};
      ex.relation = d.at("relation").get<std::string>();
    } catch (const json::exception& e) {
      raise(ErrorCode::parse_error, origin + ": " + e.what());
    }
    out.push_back(std::move(ex));
  }
  return out;
}

// Public DialogRE layout: array of [list-of-turn-strings, list-of-relation-dicts].
std::vector<Example> parse_dialogre(const json& docs, const std::string& origin) {
  std::vector<Example> out;
  size_t doc_no = 0;
  for (const auto& d : docs) {
    ++doc_no;
    if (!d.is_array() || d.size() < 2) {
      raise(ErrorCode::parse_error, origin + ": document " + std::to_string(doc_no) +
                                        " is not a [turns, relations] pair");
    }
    std::vector<std::pair<std::string, std::vector<std::string>>> turns;
    for (const auto& t : d.at(0)) {
      std::string turn = t.get<std::string>();
      std::string speaker = turn;
      std::string utterance;
      size_t colon = turn.find(':');
      if (colon != std::string::npos) {
        speaker = turn.substr(0, colon);
        utterance = turn.substr(colon + 1);
      }
      std::vector<std::string> words;
      std::istringstream ws(utterance);
      std::string w;
      while (ws >> w) words.push_back(w);
      turns.emplace_back(speaker, std::move(words));
    }
    size_t rel_no = 0;
    for (const auto& r : d.at(1)) {
      ++rel_no;
      std::string id = origin + "-doc" + std::to_string(doc_no) + "-r" + std::to_string(rel_no);
      try {
        auto expanded = flatten_dialogue(id, turns, r.at("x").get<std::string>(),
                                         r.at("y").get<std::string>(),
                                         r.at("r").get<std::vector<std::string>>());
        out.insert(out.end(), expanded.begin(), expanded.end());
      } catch (const json::exception& e) {
        raise(ErrorCode::parse_error, id + ": " + e.what());
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Example> flatten_dialogue(
    const std::string& id,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& turns,
    const std::string& subj, const std::string& obj,
    const std::vector<std::string>& relations) {
  std::vector<std::string> tokens;
  for (const auto& [speaker, words] : turns) {
    std::istringstream sp(speaker);
    std::string w;
    while (sp >> w) tokens.push_back(w);
    tokens.push_back(":");
    tokens.insert(tokens.end(), words.begin(), words.end());
  }

  auto tokenize_lower = [](const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w) words.push_back(lowercase(w));
    return words;
  };
  auto occurrences = [&](const std::vector<std::string>& needle) {
    std::vector<Span> found;
    if (needle.empty() || needle.size() > tokens.size()) return found;
    for (size_t i = 0; i + needle.size() <= tokens.size(); ++i) {
      bool match = true;
      for (size_t k = 0; k < needle.size(); ++k) {
        if (lowercase(tokens[i + k]) != needle[k]) {
          match = false;
          break;
        }
      }
      if (match) found.push_back(Span{static_cast<int>(i), static_cast<int>(i + needle.size())});
    }
    return found;
  };

  auto subj_occ = occurrences(tokenize_lower(subj));
  auto obj_occ = occurrences(tokenize_lower(obj));
  if (subj_occ.empty() || obj_occ.empty()) {
    raise(ErrorCode::parse_error,
          "dialogue '" + id + "': argument '" + (subj_occ.empty() ? subj : obj) +
              "' not found in the flattened turns");
  }
  // First non-overlapping pair, subject occurrence order major.
  Span s{}, o{};
  bool placed = false;
  for (const auto& so : subj_occ) {
    for (const auto& oo : obj_occ) {
      if (!so.overlaps(oo)) {
        s = so;
        o = oo;
        placed = true;
        break;
      }
    }
    if (placed) break;
  }
  if (!placed) {
    raise(ErrorCode::parse_error,
          "dialogue '" + id + "': subject and object only occur overlapping each other");
  }

  if (relations.empty()) {
    raise(ErrorCode::parse_error, "dialogue '" + id + "' lists no relations");
  }
  // Multi-label documents expand into one single-label instance per relation.
  std::vector<Example> out;
  for (size_t i = 0; i < relations.size(); ++i) {
    Example ex;
    ex.id = relations.size() == 1 ? id : id + "#" + std::to_string(i);
    ex.tokens = tokens;
    ex.subj = s;
    ex.obj = o;
    ex.relation = relations[i];
    out.push_back(std::move(ex));
  }
  return out;
}

std::vector<Example> parse_examples(const std::string& text, DataFormat format,
                                    const std::string& origin) {
  if (format == DataFormat::auto_detect) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      json doc;
      try {
        doc = json::parse(text);
      } catch (const json::exception& e) {
        raise(ErrorCode::parse_error, origin + ": " + e.what());
      }
      if (!doc.empty() && doc.front().is_object() && doc.front().contains("token")) {
        format = DataFormat::tacred;
      } else {
        format = DataFormat::dialogre;
      }
    } else {
      format = DataFormat::jsonl;
    }
  }
  std::vector<Example> out;
  switch (format) {
    case DataFormat::jsonl:
      out = parse_jsonl(text, origin);
      break;
    case DataFormat::tacred: {
      json doc;
      try {
        doc = json::parse(text);
      } catch (const json::exception& e) {
        raise(ErrorCode::parse_error, origin + ": " + e.what());
      }
      out = parse_tacred(doc, origin);
      break;
    }
    case DataFormat::dialogre: {
      json doc;
      try {
        doc = json::parse(text);
      } catch (const json::exception& e) {
        raise(ErrorCode::parse_error, origin + ": " + e.what());
      }
      out = parse_dialogre(doc, origin);
      break;
    }
    case DataFormat::auto_detect:
      break;  // unreachable
  }
  validate_examples(out);
  return out;
}

std::vector<Example> load_examples(const std::string& path, DataFormat format) {
  return parse_examples(read_file(path), format, path);
}

std::vector<std::string> relation_inventory(const std::vector<Example>& examples) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto& ex : examples) {
    if (seen.insert(ex.relation).second) out.push_back(ex.relation);
  }
  return out;
}

std::vector<std::vector<std::string>> load_text_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io_error, "cannot open " + path);
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> words;
    std::istringstream ws(line);
    std::string w;
    while (ws >> w) words.push_back(w);
    if (!words.empty()) lines.push_back(std::move(words));
  }
  return lines;
}

}  // namespace adaprompt
