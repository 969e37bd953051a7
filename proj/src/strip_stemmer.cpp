#include "tamilstem/strip_stemmer.hpp"

namespace tamilstem {

StemResult strip_stem(const GraphemeWord& word, const RuleSet& rules) {
  StemResult result{word, {}};
  // Each rule lowers the phoneme count, so this loop is bounded.
  while (const SuffixRule* rule = rules.longest_match(result.stem, ClassSet::all())) {
    GraphemeWord next = rule->apply(result.stem);
    result.trace.push_back({*rule, result.stem, next, 0});
    result.stem = std::move(next);
  }
  return result;
}

std::vector<StemResult> stem_batch(std::span<const GraphemeWord> words,
                                   const RuleSet& rules) {
  std::vector<StemResult> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(strip_stem(w, rules));
  return out;
}

}  // namespace tamilstem
