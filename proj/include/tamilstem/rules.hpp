#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tamilstem/script.hpp"

namespace tamilstem {

enum class SuffixClass : std::uint8_t {
  Vocative,
  Case,
  Plural,
  AdjectivalParticiple,
  Tense,
  PersonNumberGender,
  NegativeCompound,
};

inline constexpr std::size_t kSuffixClassCount = 7;

inline constexpr std::array<SuffixClass, kSuffixClassCount> kAllSuffixClasses = {
    SuffixClass::Vocative,           SuffixClass::Case,
    SuffixClass::Plural,             SuffixClass::AdjectivalParticiple,
    SuffixClass::Tense,              SuffixClass::PersonNumberGender,
    SuffixClass::NegativeCompound};

std::string_view to_string(SuffixClass c) noexcept;
std::optional<SuffixClass> parse_suffix_class(std::string_view name) noexcept;

/// Small value set of suffix classes. Empty means "terminal" when used as a
/// rule's next_classes.
class ClassSet {
 public:
  constexpr ClassSet() = default;
  constexpr ClassSet(std::initializer_list<SuffixClass> classes) {
    for (auto c : classes) insert(c);
  }

  static constexpr ClassSet all() {
    ClassSet s;
    s.bits_ = (1u << kSuffixClassCount) - 1;
    return s;
  }

  constexpr void insert(SuffixClass c) { bits_ |= bit(c); }
  constexpr bool contains(SuffixClass c) const { return (bits_ & bit(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  /// Comma-separated class names in enum order ("" for the empty set).
  std::string to_string() const;

  friend constexpr bool operator==(ClassSet, ClassSet) = default;

 private:
  static constexpr std::uint8_t bit(SuffixClass c) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c));
  }
  std::uint8_t bits_ = 0;
};

struct SuffixRule {
  SuffixClass suffix_class = SuffixClass::Case;
  GraphemeWord pattern;
  GraphemeWord replacement;
  std::size_t min_stem = 2;
  ClassSet next_classes;
  std::size_t order = 0;  // position in the source file
  std::size_t line = 0;   // 1-based source line, 0 when built in code

  /// Length of `word` after this rule is applied to it.
  std::size_t result_length(const GraphemeWord& word) const noexcept {
    return word.size() - pattern.size() + replacement.size();
  }

  bool applies_to(const GraphemeWord& word) const noexcept {
    return ends_with(word, pattern) && result_length(word) >= min_stem;
  }

  GraphemeWord apply(const GraphemeWord& word) const {
    return word.replace_suffix(pattern.size(), replacement);
  }

  // Source line is provenance only and does not take part in equality.
  friend bool operator==(const SuffixRule& a, const SuffixRule& b) {
    return a.suffix_class == b.suffix_class && a.pattern == b.pattern &&
           a.replacement == b.replacement && a.min_stem == b.min_stem &&
           a.next_classes == b.next_classes && a.order == b.order;
  }
};

/// Validated, immutable rule collection. Lookups are indexed by the last
/// cluster of the pattern, and every index list is ordered longest pattern
/// first with source order breaking ties.
class RuleSet {
 public:
  RuleSet() = default;

  /// Validates and indexes. Throws RuleConflictError or TerminationError.
  explicit RuleSet(std::vector<SuffixRule> rules);

  const std::vector<SuffixRule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  /// Rules of one class, longest pattern first.
  std::vector<const SuffixRule*> by_class(SuffixClass c) const;

  /// All rules in `allowed` that apply to `word` (pattern is a suffix and the
  /// result keeps at least min_stem clusters), longest pattern first.
  std::vector<const SuffixRule*> candidates(const GraphemeWord& word,
                                            ClassSet allowed) const;

  /// First element of candidates(), without materializing the list.
  const SuffixRule* longest_match(const GraphemeWord& word,
                                  ClassSet allowed) const;

  friend bool operator==(const RuleSet& a, const RuleSet& b) {
    return a.rules_ == b.rules_;
  }

 private:
  std::vector<SuffixRule> rules_;
  std::array<std::vector<std::size_t>, kSuffixClassCount> by_class_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_last_cluster_;
};

enum class RuleDiagnosticKind { Syntax, Conflict, Termination };

struct RuleDiagnostic {
  RuleDiagnosticKind kind;
  std::size_t line;
  std::size_t other_line;  // first definition, for conflicts
  std::string message;
};

/// Parses the tab-separated rule format:
///   class <TAB> pattern <TAB> replacement <TAB> min_stem <TAB> next_classes
/// `#` starts a comment; blank lines are ignored. Throws ParseError,
/// RuleConflictError or TerminationError on the first problem.
RuleSet parse_rules(std::string_view text);

/// Collects every problem in a rule file instead of stopping at the first.
std::vector<RuleDiagnostic> validate_rules(std::string_view text);

/// Serializes to the rule file format; parse_rules(render_rules(r)) == r.
std::string render_rules(const RuleSet& rules);

/// The shipped noun and verb inventory.
const RuleSet& builtin_rules();

/// Rule-file text behind builtin_rules().
std::string builtin_rules_text();

}  // namespace tamilstem
