#pragma once

#include <span>
#include <vector>

#include "tamilstem/rules.hpp"
#include "tamilstem/stem_result.hpp"

namespace tamilstem {

// Single-layer entry points. Each applies the longest rule of its classes
// once, or returns the word unchanged.

/// Plural -> singular (PeNgaL -> PeN, marangaL -> maram).
GraphemeWord strip_plural(const GraphemeWord& word, const RuleSet& rules);

/// Adjectival participle -> verb (Odiya -> Oodu).
GraphemeWord adjectival_to_verb(const GraphemeWord& word, const RuleSet& rules);

/// Tense, person/number/gender and negative endings.
GraphemeWord strip_tense(const GraphemeWord& word, const RuleSet& rules);

/// Transition-driven light stemmer.
///
/// A pass starts with every class allowed, applies the longest applicable
/// rule, and narrows the allowed set to that rule's next_classes, so outer
/// layers (case, vocative, person endings) come off before the plural or
/// participle beneath them. A pass stops at a terminal rule or when nothing
/// applies. Passes repeat until one applies no rule, which makes the result a
/// fixed point of light_stem.
StemResult light_stem(const GraphemeWord& word, const RuleSet& rules);

std::vector<StemResult> light_stem_batch(std::span<const GraphemeWord> words,
                                         const RuleSet& rules);

}  // namespace tamilstem
