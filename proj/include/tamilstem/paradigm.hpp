#pragma once

#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "tamilstem/script.hpp"

namespace tamilstem {

enum class Paradigm { Noun, Verb };

std::optional<Paradigm> parse_paradigm(std::string_view name) noexcept;

struct InflectedForm {
  GraphemeWord surface;
  GraphemeWord expected_stem;
  std::string label;  // e.g. "plural.dative", "present.1sg"
};

/// Inflects `root` through the noun declension (singular and plural, seven
/// oblique cases plus nominative and vocative) or the verb conjugation matrix
/// (four tenses by ten person/number/gender cells plus the non-future
/// negative). Every form's expected_stem is `root`.
///
/// Throws ParadigmError for roots under two clusters, and for noun endings
/// whose sandhi the rule inventory does not cover (short -u, long back vowels,
/// -ai, -y).
std::vector<InflectedForm> generate_forms(const GraphemeWord& root,
                                          Paradigm paradigm);

}  // namespace tamilstem
