#include "tamilstem/light_stemmer.hpp"

namespace tamilstem {

namespace {

GraphemeWord apply_once(const GraphemeWord& word, const RuleSet& rules,
                        ClassSet allowed) {
  if (const SuffixRule* rule = rules.longest_match(word, allowed)) {
    return rule->apply(word);
  }
  return word;
}

}  // namespace

GraphemeWord strip_plural(const GraphemeWord& word, const RuleSet& rules) {
  return apply_once(word, rules, {SuffixClass::Plural});
}

GraphemeWord adjectival_to_verb(const GraphemeWord& word, const RuleSet& rules) {
  return apply_once(word, rules, {SuffixClass::AdjectivalParticiple});
}

GraphemeWord strip_tense(const GraphemeWord& word, const RuleSet& rules) {
  return apply_once(word, rules,
                    {SuffixClass::Tense, SuffixClass::PersonNumberGender,
                     SuffixClass::NegativeCompound});
}

StemResult light_stem(const GraphemeWord& word, const RuleSet& rules) {
  StemResult result{word, {}};
  for (std::size_t pass = 0;; ++pass) {
    const std::size_t steps_before = result.trace.size();
    ClassSet allowed = ClassSet::all();
    while (!allowed.empty()) {
      const SuffixRule* rule = rules.longest_match(result.stem, allowed);
      if (rule == nullptr) break;
      GraphemeWord next = rule->apply(result.stem);
      result.trace.push_back({*rule, result.stem, next, pass});
      result.stem = std::move(next);
      allowed = rule->next_classes;
    }
    if (result.trace.size() == steps_before) break;
  }
  return result;
}

std::vector<StemResult> light_stem_batch(std::span<const GraphemeWord> words,
                                         const RuleSet& rules) {
  std::vector<StemResult> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(light_stem(w, rules));
  return out;
}

}  // namespace tamilstem
