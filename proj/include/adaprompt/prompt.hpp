#pragma once

#include <string>
#include <vector>

#include "adaprompt/data.hpp"
#include "adaprompt/rng.hpp"
#include "adaprompt/verbalizer.hpp"
#include "adaprompt/vocab.hpp"

namespace adaprompt {

// The two hand-crafted template forms. COPULA reads
//   [E1] subj [/E1] is [MASK] [E2] obj [/E2] .
// and RELATION_BETWEEN reads
//   the relation between [E1] subj [/E1] and [E2] obj [/E2] is [MASK] .
enum class TemplateForm { copula, relation_between };

TemplateForm template_form_from_string(const std::string& name);
const char* template_form_name(TemplateForm form);

struct PromptTemplate {
  TemplateForm form = TemplateForm::copula;
  MarkerSet markers;
};

// A rendered cloze input: [CLS] sentence-with-markers [SEP] template [SEP]
// with exactly one mask token, in the template's relation slot.
struct PromptInstance {
  std::vector<int> token_ids;
  int mask_position = -1;
  std::vector<int> subj_positions;  // sentence-region token positions of the subject
  std::vector<int> obj_positions;   // same for the object
  std::string source_id;
  bool truncated = false;
};

enum class MaskedEntity { subject, object };
enum class EntityChoice { subject, object, random };

// The entity-discrimination variant: the relation slot holds the gold
// label words (prediction is conditioned on the relation) and one entity's
// in-sentence tokens are replaced by mask ids.
struct EntityMaskedInstance {
  std::vector<int> token_ids;
  std::vector<int> masked_positions;
  std::vector<int> target_ids;  // original ids, aligned with masked_positions
  MaskedEntity masked_entity = MaskedEntity::subject;
  std::string source_id;
  bool truncated = false;
};

// Renders the cloze prompt. Truncation removes tokens from the left of the
// sentence only, never from the template; raises template_overflow when the
// template alone exceeds max_len and span_lost when truncation would cut an
// entity span or its markers.
PromptInstance render_prompt(const Example& example, const PromptTemplate& tmpl,
                             const Vocab& vocab, int max_len);

// Renders the entity-discrimination variant. gold_words must be resolved
// against the same vocabulary; their subword units fill the relation slot.
EntityMaskedInstance render_entity_masked(const Example& example, const PromptTemplate& tmpl,
                                          const Vocab& vocab, int max_len,
                                          const LabelWordSet& gold_words, EntityChoice which,
                                          SeededRng& rng);

// Token ids the relation slot receives for a resolved word set: the words'
// subword units concatenated in word order (words joined by single spaces at
// the text level).
std::vector<int> slot_ids_for(const LabelWordSet& resolved);

}  // namespace adaprompt
