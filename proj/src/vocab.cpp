#include "adaprompt/vocab.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace adaprompt {

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void Vocab::add_token(const std::string& token) {
  if (index_.count(token)) return;
  index_[token] = static_cast<int>(tokens_.size());
  tokens_.push_back(token);
  if (static_cast<int>(tokens_.size()) > kNumSpecials) {
    max_piece_len_ = std::max(max_piece_len_, token.size());
  }
}

Vocab Vocab::build(const std::vector<std::string>& words, const MarkerSet& markers,
                   size_t max_size) {
  Vocab v;
  v.markers_ = markers;
  v.add_token("[PAD]");
  v.add_token("[UNK]");
  v.add_token("[CLS]");
  v.add_token("[SEP]");
  v.add_token("[MASK]");
  v.add_token(markers.subj_open);
  v.add_token(markers.subj_close);
  v.add_token(markers.obj_open);
  v.add_token(markers.obj_close);
  if (v.size() != kNumSpecials) {
    raise(ErrorCode::config_error, "marker strings collide with reserved special tokens");
  }
  for (const auto& w : words) {
    if (w.empty()) continue;
    v.add_token(lowercase(w));
  }
  if (max_size > 0 && v.tokens_.size() > max_size) {
    raise(ErrorCode::vocab_overflow,
          "vocabulary of " + std::to_string(v.tokens_.size()) + " tokens exceeds limit " +
              std::to_string(max_size));
  }
  return v;
}

const std::string& Vocab::token(int id) const {
  if (id < 0 || id >= size()) {
    raise(ErrorCode::invalid_argument, "token id " + std::to_string(id) + " out of range");
  }
  return tokens_[static_cast<size_t>(id)];
}

bool Vocab::contains(const std::string& token) const { return index_.count(token) > 0; }

int Vocab::id_of(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : it->second;
}

int Vocab::marker_id(const std::string& marker) const {
  int id = id_of(marker);
  if (id < 0 || !is_special(id)) {
    raise(ErrorCode::config_error, "marker token not registered: " + marker);
  }
  return id;
}

std::vector<int> Vocab::encode_word(const std::string& word) const {
  std::string w = lowercase(word);
  if (w.empty()) return {};
  auto it = index_.find(w);
  if (it != index_.end() && !is_special(it->second)) {
    return {it->second};
  }
  // Greedy longest-prefix segmentation into known non-special pieces.
  std::vector<int> pieces;
  size_t pos = 0;
  while (pos < w.size()) {
    size_t best_len = 0;
    int best_id = -1;
    size_t limit = std::min(max_piece_len_, w.size() - pos);
    for (size_t len = limit; len >= 1; --len) {
      auto pit = index_.find(w.substr(pos, len));
      if (pit != index_.end() && !is_special(pit->second)) {
        best_len = len;
        best_id = pit->second;
        break;
      }
    }
    if (best_id < 0) return {};
    pieces.push_back(best_id);
    pos += best_len;
  }
  return pieces;
}

std::string Vocab::to_json() const {
  nlohmann::json j;
  j["tokens"] = tokens_;
  j["markers"] = {markers_.subj_open, markers_.subj_close, markers_.obj_open,
                  markers_.obj_close};
  return j.dump(2);
}

Vocab Vocab::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::parse_error, std::string("bad vocab json: ") + e.what());
  }
  Vocab v;
  auto m = j.at("markers");
  v.markers_ = MarkerSet{m.at(0), m.at(1), m.at(2), m.at(3)};
  for (const auto& t : j.at("tokens")) {
    v.add_token(t.get<std::string>());
  }
  if (v.size() < kNumSpecials) {
    raise(ErrorCode::parse_error, "vocab json missing special tokens");
  }
  return v;
}

}  // namespace adaprompt
