#include <set>
#include <sstream>
#include <string>

#include "morphology.hpp"
#include "tamilstem/rules.hpp"

namespace tamilstem {

namespace {

using namespace morphology;

class RuleWriter {
 public:
  void section(std::string_view title) { out_ << "\n# " << title << '\n'; }

  void rule(SuffixClass cls, const std::string& pattern,
            const std::string& replacement, ClassSet next) {
    // Several tables produce the same surface ending (e.g. the two future
    // 3rd-person cells); keep the first.
    if (!emitted_.insert({cls, pattern}).second) return;
    out_ << to_string(cls) << '\t' << pattern << '\t' << replacement << "\t2\t"
         << next.to_string() << '\n';
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
  std::set<std::pair<SuffixClass, std::string>> emitted_;
};

std::string pulli(std::string_view consonant) {
  return std::string(consonant) + std::string(tamil::kPulli);
}

}  // namespace

std::string builtin_rules_text() {
  const ClassSet kTerminal{};
  const ClassSet kAfterCase{SuffixClass::Plural};
  const ClassSet kAfterVerb{SuffixClass::AdjectivalParticiple};

  RuleWriter w;
  w.section("Plural: -kaL, and -m stems alternate to -ngaL (maram / marangaL)");
  w.rule(SuffixClass::Plural, std::string(kPlural), "", kTerminal);
  w.rule(SuffixClass::Plural, std::string(kAmPlural), pulli("ம"), kTerminal);

  w.section("Case: vowel-initial endings fused onto the stem-final consonant");
  for (const auto& c : tamil::consonants()) {
    if (c == "ய") continue;  // owned by the glide rules below
    for (const auto& cs : kAllCases) {
      w.rule(SuffixClass::Case, tamil::attach(pulli(c), cs.suffix), pulli(c),
             kAfterCase);
    }
  }

  w.section("Case: geminated short stems (peN -> peNNai)");
  for (auto c : kGeminating) {
    for (const auto& cs : kAllCases) {
      w.rule(SuffixClass::Case, pulli(c) + tamil::attach(pulli(c), cs.suffix),
             pulli(c), kAfterCase);
    }
  }

  w.section("Case: oblique -aththu of -am nouns (maram -> maraththai)");
  for (const auto& cs : kAllCases) {
    w.rule(SuffixClass::Case, tamil::attach(std::string(kAmOblique), cs.suffix),
           pulli("ம"), kAfterCase);
  }

  w.section("Case: y-glide after front vowels (kiLi -> kiLiyai, kiLikku)");
  w.rule(SuffixClass::Case, std::string(kGlideDative), "", kAfterCase);
  for (const auto& cs : kAllCases) {
    if (cs.name == kDative.name) continue;
    w.rule(SuffixClass::Case, tamil::attach(std::string(kGlide), cs.suffix), "",
           kAfterCase);
  }

  w.section("Vocative -e");
  for (const auto& c : tamil::consonants()) {
    if (c == "ய") continue;
    w.rule(SuffixClass::Vocative, tamil::attach(pulli(c), kVocative), pulli(c),
           kAfterCase);
  }
  for (auto c : kGeminating) {
    w.rule(SuffixClass::Vocative, pulli(c) + tamil::attach(pulli(c), kVocative),
           pulli(c), kAfterCase);
  }
  w.rule(SuffixClass::Vocative, tamil::attach(std::string(kGlide), kVocative), "",
         kAfterCase);

  w.section("Tense x person/number/gender cells");
  for (const auto& cell : kVerbCells) {
    if (cell.kind == VerbCellKind::Affirmative) {
      w.rule(SuffixClass::Tense, std::string(cell.suffix), "", kAfterVerb);
    }
  }
  for (auto p : kPresentParticiples) {
    w.rule(SuffixClass::Tense, std::string(p), "", kAfterVerb);
  }
  w.section("Tense: weak-verb -um (paadum -> paadu)");
  for (const auto& c : tamil::consonants()) {
    w.rule(SuffixClass::Tense, c + "ும்", c + "ு", kAfterVerb);
  }

  w.section("Negatives");
  for (const auto& cell : kVerbCells) {
    if (cell.kind == VerbCellKind::Negative) {
      w.rule(SuffixClass::NegativeCompound, std::string(cell.suffix), "",
             kAfterVerb);
    }
  }

  w.section("Adjectival participles restored to the verb (odiya -> oodu)");
  for (const auto& c : tamil::consonants()) {
    w.rule(SuffixClass::AdjectivalParticiple, c + "ிய", c + "ு", kTerminal);
  }
  w.rule(SuffixClass::AdjectivalParticiple, std::string(kPastParticiple), "",
         kTerminal);

  return w.str();
}

const RuleSet& builtin_rules() {
  static const RuleSet kRules = parse_rules(builtin_rules_text());
  return kRules;
}

}  // namespace tamilstem
