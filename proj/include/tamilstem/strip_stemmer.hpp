#pragma once

#include <span>
#include <vector>

#include "tamilstem/rules.hpp"
#include "tamilstem/stem_result.hpp"

namespace tamilstem {

/// Baseline suffix stripper: repeatedly applies the longest applicable rule
/// from the whole inventory, ignoring classes and transitions, until nothing
/// applies. Equal-length patterns resolve by file order.
StemResult strip_stem(const GraphemeWord& word, const RuleSet& rules);

std::vector<StemResult> stem_batch(std::span<const GraphemeWord> words,
                                   const RuleSet& rules);

}  // namespace tamilstem
