#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "adaprompt/error.hpp"

namespace adaprompt {

// Marker strings wrapping the two entity mentions. Overridable via config;
// the defaults follow the usual typed-marker convention.
struct MarkerSet {
  std::string subj_open = "[E1]";
  std::string subj_close = "[/E1]";
  std::string obj_open = "[E2]";
  std::string obj_close = "[/E2]";
};

// Word-level vocabulary with a greedy longest-match fallback that splits
// unknown words into known pieces. Ids are dense; the nine special tokens
// occupy fixed slots at the front.
class Vocab {
 public:
  static constexpr int kPad = 0;
  static constexpr int kUnk = 1;
  static constexpr int kCls = 2;
  static constexpr int kSep = 3;
  static constexpr int kMask = 4;
  static constexpr int kSubjOpen = 5;
  static constexpr int kSubjClose = 6;
  static constexpr int kObjOpen = 7;
  static constexpr int kObjClose = 8;
  static constexpr int kNumSpecials = 9;

  Vocab() = default;

  // Builds a vocabulary from lowercase word strings. Words already present
  // (or colliding with a special) are ignored. max_size of 0 means unlimited;
  // otherwise exceeding it raises vocab_overflow.
  static Vocab build(const std::vector<std::string>& words,
                     const MarkerSet& markers = MarkerSet{},
                     size_t max_size = 0);

  int size() const { return static_cast<int>(tokens_.size()); }

  const std::string& token(int id) const;
  bool contains(const std::string& token) const;

  // Exact lookup including specials; -1 when absent.
  int id_of(const std::string& token) const;

  // Lowercases the word, then resolves it to one or more ids: an exact match
  // yields a single id, otherwise a greedy longest-prefix segmentation into
  // known pieces. Specials never match. Returns empty when unresolvable.
  std::vector<int> encode_word(const std::string& word) const;

  const MarkerSet& markers() const { return markers_; }
  int marker_id(const std::string& marker) const;

  bool is_special(int id) const { return id >= 0 && id < kNumSpecials; }

  std::string to_json() const;
  static Vocab from_json(const std::string& json_text);

 private:
  void add_token(const std::string& token);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
  MarkerSet markers_;
  size_t max_piece_len_ = 0;
};

std::string lowercase(const std::string& s);

}  // namespace adaprompt
