#include "tamilstem/rules.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <utility>

#include <unicode/uchar.h>

#include "tamilstem/error.hpp"
#include "utf8.hpp"

namespace tamilstem {

namespace {

constexpr std::array<std::string_view, kSuffixClassCount> kClassNames = {
    "Vocative",         "Case",  "Plural", "AdjectivalParticiple",
    "Tense", "PersonNumberGender", "NegativeCompound"};

bool sorts_before(const SuffixRule& a, const SuffixRule& b) {
  if (a.pattern.size() != b.pattern.size()) {
    return a.pattern.size() > b.pattern.size();
  }
  return a.order < b.order;
}

std::string check_termination(const SuffixRule& r) {
  if (r.replacement.size() > r.pattern.size() ||
      phoneme_count(r.replacement) >= phoneme_count(r.pattern)) {
    return "replacement '" + r.replacement.text() +
           "' is not shorter than pattern '" + r.pattern.text() + "'";
  }
  return {};
}

std::string describe(const SuffixRule& r) {
  return std::string(to_string(r.suffix_class)) + " '" + r.pattern.text() + "'";
}

bool starts_with_mark(std::string_view s) {
  if (s.empty()) return false;
  auto [cp, len] = utf8::decode(s, 0);
  if (len == 0) return false;
  const auto type = u_charType(static_cast<UChar32>(cp));
  return type == U_NON_SPACING_MARK || type == U_ENCLOSING_MARK ||
         type == U_COMBINING_SPACING_MARK;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Parsed {
  std::vector<SuffixRule> rules;
  std::vector<RuleDiagnostic> diagnostics;
};

// Parses every line, recording diagnostics instead of throwing. Rules with
// syntax errors are dropped; semantic checks run on the rest.
Parsed parse_all(std::string_view text) {
  Parsed out;
  auto syntax = [&](std::size_t line, std::string msg) {
    out.diagnostics.push_back({RuleDiagnosticKind::Syntax, line, 0, std::move(msg)});
  };

  std::map<std::pair<SuffixClass, std::string>, std::size_t> seen;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;

    if (auto bad = find_invalid_utf8(line); bad != std::string_view::npos) {
      syntax(line_no, "invalid UTF-8 at column byte " + std::to_string(bad));
      continue;
    }
    auto fields = split(line, '\t');
    if (fields.size() != 4 && fields.size() != 5) {
      syntax(line_no, "expected 5 tab-separated fields, got " +
                          std::to_string(fields.size()));
      continue;
    }

    SuffixRule rule;
    rule.line = line_no;
    auto cls = parse_suffix_class(trim(fields[0]));
    if (!cls) {
      syntax(line_no, "unknown class '" + std::string(trim(fields[0])) + "'");
      continue;
    }
    rule.suffix_class = *cls;

    const auto pattern_text = trim(fields[1]);
    const auto replacement_text = trim(fields[2]);
    if (pattern_text.empty()) {
      syntax(line_no, "empty pattern");
      continue;
    }
    if (starts_with_mark(pattern_text) || starts_with_mark(replacement_text)) {
      syntax(line_no, "pattern and replacement must not start with a combining mark");
      continue;
    }
    rule.pattern = make_word(pattern_text);
    rule.replacement = make_word(replacement_text);

    const auto min_text = trim(fields[3]);
    std::size_t min_stem = 0;
    auto [ptr, ec] = std::from_chars(min_text.data(),
                                     min_text.data() + min_text.size(), min_stem);
    if (ec != std::errc{} || ptr != min_text.data() + min_text.size() ||
        min_stem < 1) {
      syntax(line_no, "min_stem must be an integer >= 1, got '" +
                          std::string(min_text) + "'");
      continue;
    }
    rule.min_stem = min_stem;

    bool ok = true;
    if (fields.size() == 5 && !trim(fields[4]).empty()) {
      for (auto name : split(fields[4], ',')) {
        auto next = parse_suffix_class(trim(name));
        if (!next) {
          syntax(line_no, "unknown next class '" + std::string(trim(name)) + "'");
          ok = false;
          break;
        }
        rule.next_classes.insert(*next);
      }
    }
    if (!ok) continue;

    if (auto msg = check_termination(rule); !msg.empty()) {
      out.diagnostics.push_back(
          {RuleDiagnosticKind::Termination, line_no, 0, std::move(msg)});
      continue;
    }
    auto key = std::make_pair(rule.suffix_class, rule.pattern.text());
    if (auto it = seen.find(key); it != seen.end()) {
      out.diagnostics.push_back(
          {RuleDiagnosticKind::Conflict, line_no, it->second,
           "duplicate rule " + describe(rule) + " (first defined on line " +
               std::to_string(it->second) + ")"});
      continue;
    }
    seen.emplace(std::move(key), line_no);
    rule.order = out.rules.size();
    out.rules.push_back(std::move(rule));
  }
  return out;
}

}  // namespace

std::string_view to_string(SuffixClass c) noexcept {
  return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<SuffixClass> parse_suffix_class(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == name) return kAllSuffixClasses[i];
  }
  return std::nullopt;
}

std::string ClassSet::to_string() const {
  std::string out;
  for (auto c : kAllSuffixClasses) {
    if (!contains(c)) continue;
    if (!out.empty()) out += ',';
    out += tamilstem::to_string(c);
  }
  return out;
}

RuleSet::RuleSet(std::vector<SuffixRule> rules) : rules_(std::move(rules)) {
  std::map<std::pair<SuffixClass, std::string>, std::size_t> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    if (r.pattern.empty()) throw ParseError(r.line, "empty pattern");
    if (r.min_stem < 1) throw ParseError(r.line, "min_stem must be >= 1");
    if (auto msg = check_termination(r); !msg.empty()) {
      throw TerminationError(r.line, msg);
    }
    auto [it, inserted] =
        seen.emplace(std::make_pair(r.suffix_class, r.pattern.text()), i);
    if (!inserted) {
      const auto& first = rules_[it->second];
      throw RuleConflictError(first.line, r.line,
                              "duplicate rule " + describe(r) + " on lines " +
                                  std::to_string(first.line) + " and " +
                                  std::to_string(r.line));
    }
    by_class_[static_cast<std::size_t>(r.suffix_class)].push_back(i);
    by_last_cluster_[r.pattern.graphemes().back()].push_back(i);
  }
  auto cmp = [this](std::size_t a, std::size_t b) {
    return sorts_before(rules_[a], rules_[b]);
  };
  for (auto& v : by_class_) std::stable_sort(v.begin(), v.end(), cmp);
  for (auto& [_, v] : by_last_cluster_) std::stable_sort(v.begin(), v.end(), cmp);
}

std::vector<const SuffixRule*> RuleSet::by_class(SuffixClass c) const {
  std::vector<const SuffixRule*> out;
  for (auto i : by_class_[static_cast<std::size_t>(c)]) out.push_back(&rules_[i]);
  return out;
}

std::vector<const SuffixRule*> RuleSet::candidates(const GraphemeWord& word,
                                                   ClassSet allowed) const {
  std::vector<const SuffixRule*> out;
  if (word.empty() || allowed.empty()) return out;
  auto it = by_last_cluster_.find(word.graphemes().back());
  if (it == by_last_cluster_.end()) return out;
  for (auto i : it->second) {
    const auto& r = rules_[i];
    if (allowed.contains(r.suffix_class) && r.applies_to(word)) out.push_back(&r);
  }
  return out;
}

const SuffixRule* RuleSet::longest_match(const GraphemeWord& word,
                                         ClassSet allowed) const {
  if (word.empty() || allowed.empty()) return nullptr;
  auto it = by_last_cluster_.find(word.graphemes().back());
  if (it == by_last_cluster_.end()) return nullptr;
  for (auto i : it->second) {
    const auto& r = rules_[i];
    if (allowed.contains(r.suffix_class) && r.applies_to(word)) return &r;
  }
  return nullptr;
}

RuleSet parse_rules(std::string_view text) {
  auto parsed = parse_all(text);
  if (!parsed.diagnostics.empty()) {
    const auto& d = parsed.diagnostics.front();
    switch (d.kind) {
      case RuleDiagnosticKind::Syntax:
        throw ParseError(d.line, d.message);
      case RuleDiagnosticKind::Termination:
        throw TerminationError(d.line, d.message);
      case RuleDiagnosticKind::Conflict:
        throw RuleConflictError(d.other_line, d.line,
                                "line " + std::to_string(d.line) + ": " + d.message);
    }
  }
  return RuleSet(std::move(parsed.rules));
}

std::vector<RuleDiagnostic> validate_rules(std::string_view text) {
  return parse_all(text).diagnostics;
}

std::string render_rules(const RuleSet& rules) {
  std::ostringstream out;
  out << "# class\tpattern\treplacement\tmin_stem\tnext_classes\n";
  for (const auto& r : rules.rules()) {
    out << to_string(r.suffix_class) << '\t' << r.pattern.text() << '\t'
        << r.replacement.text() << '\t' << r.min_stem << '\t'
        << r.next_classes.to_string() << '\n';
  }
  return out.str();
}

}  // namespace tamilstem
