// Copyright 2026 The evkb Authors.
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

#include "evkb/annotate/predicates.hpp"

#include <array>
#include <set>

namespace evkb::annotate {
namespace {

struct Irregular {
  std::string_view base;
  std::string_view past;
  std::string_view participle;
  std::string_view gerund;
};

constexpr std::array<Irregular, 14> kIrregular = {{
    {"buy", "bought", "bought", "buying"},
    {"sell", "sold", "sold", "selling"},
    {"resell", "resold", "resold", "reselling"},
    {"pay", "paid", "paid", "paying"},
    {"repay", "repaid", "repaid", "repaying"},
    {"prepay", "prepaid", "prepaid", "prepaying"},
    {"spend", "spent", "spent", "spending"},
    {"win", "won", "won", "winning"},
    {"lose", "lost", "lost", "losing"},
    {"lend", "lent", "lent", "lending"},
    {"get", "got", "gotten", "getting"},
    {"give", "gave", "given", "giving"},
    {"bid", "bid", "bid", "bidding"},
    {"underwrite", "underwrote", "underwritten", "underwriting"},
}};

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

std::string third_person(std::string_view lemma) {
  std::string s(lemma);
  if (s.ends_with("s") || s.ends_with("x") || s.ends_with("z") || s.ends_with("ch") ||
      s.ends_with("sh")) {
    return s + "es";
  }
  if (s.size() > 1 && s.back() == 'y' && !is_vowel(s[s.size() - 2])) {
    return s.substr(0, s.size() - 1) + "ies";
  }
  return s + "s";
}

std::string regular_past(std::string_view lemma) {
  std::string s(lemma);
  if (s.ends_with("e")) return s + "d";
  if (s.size() > 1 && s.back() == 'y' && !is_vowel(s[s.size() - 2])) {
    return s.substr(0, s.size() - 1) + "ied";
  }
  return s + "ed";
}

std::string regular_gerund(std::string_view lemma) {
  std::string s(lemma);
  if (s.size() > 2 && s.ends_with("e") && !s.ends_with("ee")) s.pop_back();
  return s + "ing";
}

std::string plural(std::string_view noun) {
  std::string s(noun);
  if (s.ends_with("s")) return s;
  return third_person(s);
}

const std::set<std::string, std::less<>>& determiners() {
  static const std::set<std::string, std::less<>> words = {
      "the", "a", "an", "its", "their", "his", "her", "our", "your", "this", "that",
      "these", "those", "any", "each", "every", "no", "'s", "’s", "whose", "my"};
  return words;
}

const std::set<std::string, std::less<>>& skippable_adverbs() {
  static const std::set<std::string, std::less<>> words = {
      "not", "n't", "also", "already", "still", "just", "never", "now", "then", "since"};
  return words;
}

bool is_adverb(std::string_view lower) {
  return skippable_adverbs().contains(lower) || (lower.size() > 4 && lower.ends_with("ly"));
}

bool is_be_form(std::string_view lower) {
  return lower == "is" || lower == "are" || lower == "was" || lower == "were" || lower == "be" ||
         lower == "been" || lower == "being" || lower == "am";
}

bool is_magnitude(std::string_view lower) {
  return lower == "thousand" || lower == "million" || lower == "billion" || lower == "trillion";
}

class Tagger {
 public:
  Tagger(const TokenizedSentence& sentence, const PredicateLexicon& lexicon, bool allow_nouns)
      : tokens_(sentence.tokens()), lexicon_(lexicon), allow_nouns_(allow_nouns) {
    for (const auto& t : tokens_) lower_.push_back(ascii_lower(t.text));
  }

  std::vector<PredicateToken> run() const {
    std::vector<PredicateToken> out;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].kind != TokenKind::word) continue;
      const VerbEntry* verb = lexicon_.verb(lower_[i]);
      const std::string* noun = lexicon_.noun(lower_[i]);
      if (verb == nullptr && noun == nullptr) continue;
      const bool noun_context = has_noun_context(i);
      if (noun != nullptr && (verb == nullptr || noun_context)) {
        if (!allow_nouns_) continue;
        PredicateToken p;
        p.token_index = i;
        p.mention = {*noun, true, Tense::unknown, tokens_[i].span};
        out.push_back(std::move(p));
        continue;
      }
      if (verb == nullptr || noun_context) continue;
      PredicateToken p;
      p.token_index = i;
      p.mention = {verb->label, false, infer_tense(i, *verb), tokens_[i].span};
      p.passive = is_passive(i, *verb);
      out.push_back(std::move(p));
    }
    return out;
  }

 private:
  // Determiner or money modifier before, or "of" after.
  bool has_noun_context(std::size_t i) const {
    if (i + 1 < tokens_.size() && lower_[i + 1] == "of") return true;
    if (i == 0) return false;
    const auto& prev = tokens_[i - 1];
    return determiners().contains(lower_[i - 1]) || prev.kind == TokenKind::number ||
           prev.kind == TokenKind::symbol || is_magnitude(lower_[i - 1]);
  }

  Tense infer_tense(std::size_t i, const VerbEntry& verb) const {
    for (std::size_t back = 1; back <= 4 && back <= i; ++back) {
      const std::size_t j = i - back;
      const std::string& w = lower_[j];
      if (tokens_[j].kind == TokenKind::punct) break;
      if (w == "will" || w == "shall" || w == "'ll" || w == "would" || w == "wo") {
        return Tense::future;
      }
      if (w == "to") return Tense::unknown;
      if (w == "was" || w == "were" || w == "had" || w == "did") return Tense::past;
      if (w == "is" || w == "are" || w == "am" || w == "has" || w == "have" || w == "does" ||
          w == "do") {
        return Tense::present;
      }
      if (w == "be" || w == "been" || w == "being" || is_adverb(w)) continue;
      break;
    }
    if (verb.has(VerbForm::past) || verb.has(VerbForm::past_participle)) return Tense::past;
    return Tense::present;
  }

  bool is_passive(std::size_t i, const VerbEntry& verb) const {
    if (!verb.has(VerbForm::past_participle)) return false;
    for (std::size_t back = 1; back <= 3 && back <= i; ++back) {
      const std::string& w = lower_[i - back];
      if (is_be_form(w)) return true;
      if (!is_adverb(w)) return false;
    }
    return false;
  }

  const std::vector<Token>& tokens_;
  const PredicateLexicon& lexicon_;
  bool allow_nouns_;
  std::vector<std::string> lower_;
};

}  // namespace

std::map<std::string, unsigned> inflect_verb(std::string_view lemma) {
  std::map<std::string, unsigned> forms;
  auto add = [&](std::string_view form, VerbForm bit) {
    forms[std::string(form)] |= static_cast<unsigned>(bit);
  };
  add(lemma, VerbForm::base);
  add(third_person(lemma), VerbForm::third_person);
  for (const auto& irr : kIrregular) {
    if (irr.base == lemma) {
      add(irr.past, VerbForm::past);
      add(irr.participle, VerbForm::past_participle);
      add(irr.gerund, VerbForm::gerund);
      return forms;
    }
  }
  add(regular_past(lemma), VerbForm::past);
  add(regular_past(lemma), VerbForm::past_participle);
  add(regular_gerund(lemma), VerbForm::gerund);
  return forms;
}

PredicateLexicon::PredicateLexicon(const oee::Ontology& ontology) {
  // Exact labels first so hyphenated labels never shadow them.
  std::vector<std::pair<std::string, std::string>> lemmas;  // (head word, label)
  for (const auto& [label, node] : ontology.nodes()) {
    if (label.find('-') == std::string::npos) lemmas.emplace_back(label, label);
  }
  for (const auto& [label, node] : ontology.nodes()) {
    const auto dash = label.find('-');
    if (dash == std::string::npos) continue;
    const std::string head = label.substr(0, dash);
    if (!ontology.contains(head)) lemmas.emplace_back(head, label);
  }
  for (const auto& [head, label] : lemmas) {
    for (const auto& [form, bits] : inflect_verb(head)) {
      auto [it, inserted] = verbs_.try_emplace(form, VerbEntry{label, bits});
      if (!inserted && it->second.label == label) it->second.forms |= bits;
    }
  }
  for (const auto& [noun, verb] : ontology.noun_lexicon()) {
    nouns_.try_emplace(noun, verb);
    nouns_.try_emplace(plural(noun), verb);
  }
}

const VerbEntry* PredicateLexicon::verb(std::string_view lower_token) const {
  auto it = verbs_.find(lower_token);
  return it == verbs_.end() ? nullptr : &it->second;
}

const std::string* PredicateLexicon::noun(std::string_view lower_token) const {
  auto it = nouns_.find(lower_token);
  return it == nouns_.end() ? nullptr : &it->second;
}

std::vector<PredicateToken> find_predicates(const TokenizedSentence& sentence,
                                            const PredicateLexicon& lexicon,
                                            bool allow_noun_predicates) {
  return Tagger(sentence, lexicon, allow_noun_predicates).run();
}

std::vector<PredicateMention> recognize_predicates(std::string_view sentence,
                                                   const oee::Ontology& ontology,
                                                   bool allow_noun_predicates) {
  const TokenizedSentence tokenized{std::string(sentence)};
  const PredicateLexicon lexicon(ontology);
  std::vector<PredicateMention> out;
  for (auto& p : find_predicates(tokenized, lexicon, allow_noun_predicates)) {
    out.push_back(std::move(p.mention));
  }
  return out;
}

}  // namespace evkb::annotate
