#include "tamilstem/paradigm.hpp"

#include <algorithm>

#include "morphology.hpp"
#include "tamilstem/error.hpp"
#include "utf8.hpp"

namespace tamilstem {

namespace {

using namespace morphology;

enum class NounClass { AmStem, Geminating, Consonant, Glide };

bool is_bare_consonant(std::string_view cluster) {
  auto [cp, len] = utf8::decode(cluster, 0);
  return len == cluster.size() && tamil::is_consonant(cp);
}

std::string base_consonant(std::string_view cluster) {
  auto [cp, len] = utf8::decode(cluster, 0);
  return std::string(cluster.substr(0, len));
}

// Vowel-sign endings that take the y-glide: -i, -ii, -e, -ee.
bool takes_glide(std::string_view cluster) {
  for (std::string_view sign : {"ி", "ீ", "ெ", "ே"}) {
    if (cluster.size() > sign.size() &&
        cluster.substr(cluster.size() - sign.size()) == sign) {
      return true;
    }
  }
  return false;
}

NounClass classify_noun(const GraphemeWord& root) {
  const auto& g = root.graphemes();
  const auto& last = g.back();
  if (last == "ம்" && is_bare_consonant(g[g.size() - 2])) return NounClass::AmStem;
  if (tamil::is_pulli_consonant(last)) {
    const auto c = base_consonant(last);
    if (c == "ய") {
      throw ParadigmError("noun root '" + root.text() +
                          "' ends in -y, which has no shipped case sandhi");
    }
    const bool geminates =
        std::find(kGeminating.begin(), kGeminating.end(), c) != kGeminating.end();
    if (geminates && g.size() == 2 && !tamil::has_long_vowel(g[0])) {
      return NounClass::Geminating;
    }
    return NounClass::Consonant;
  }
  if (takes_glide(last)) return NounClass::Glide;
  throw ParadigmError("noun root '" + root.text() +
                      "' has an ending with no shipped case sandhi");
}

std::vector<InflectedForm> noun_forms(const GraphemeWord& root) {
  const NounClass cls = classify_noun(root);
  const std::string& r = root.text();
  const auto& g = root.graphemes();

  std::string oblique;  // singular stem before a vowel-initial case
  std::string plural;
  switch (cls) {
    case NounClass::AmStem: {
      const std::string head = r.substr(0, r.size() - g.back().size());
      oblique = head + std::string(kAmOblique);
      plural = head + std::string(kAmPlural);
      break;
    }
    case NounClass::Geminating:
      oblique = r + g.back();
      plural = r + std::string(kPlural);
      break;
    case NounClass::Consonant:
      oblique = r;
      plural = r + std::string(kPlural);
      break;
    case NounClass::Glide:
      oblique = r + std::string(kGlide);
      plural = r + std::string(kPlural);
      break;
  }

  const auto& cases = cls == NounClass::AmStem
                          ? kInanimateCases
                          : kAnimateCases;

  std::vector<InflectedForm> out;
  auto emit = [&](std::string surface, std::string label) {
    out.push_back({make_word(surface), root, std::move(label)});
  };

  emit(r, "singular.nominative");
  for (const auto& cs : cases) {
    if (cls == NounClass::Glide && cs.name == kDative.name) {
      emit(r + std::string(kGlideDative), "singular.dative");
    } else {
      emit(tamil::attach(oblique, cs.suffix), "singular." + std::string(cs.name));
    }
  }
  // The vocative attaches to the nominative form, not the -aththu oblique.
  const std::string vocative_base = cls == NounClass::AmStem ? r : oblique;
  emit(tamil::attach(vocative_base, kVocative), "singular.vocative");

  emit(plural, "plural.nominative");
  for (const auto& cs : cases) {
    emit(tamil::attach(plural, cs.suffix), "plural." + std::string(cs.name));
  }
  emit(tamil::attach(plural, kVocative), "plural.vocative");
  return out;
}

std::vector<InflectedForm> verb_forms(const GraphemeWord& root) {
  std::vector<InflectedForm> out;
  out.reserve(kVerbCells.size());
  for (const auto& cell : kVerbCells) {
    out.push_back({make_word(tamil::attach(root.text(), cell.suffix)), root,
                   std::string(cell.tense) + "." + std::string(cell.person)});
  }
  return out;
}

}  // namespace

std::optional<Paradigm> parse_paradigm(std::string_view name) noexcept {
  if (name == "noun") return Paradigm::Noun;
  if (name == "verb") return Paradigm::Verb;
  return std::nullopt;
}

std::vector<InflectedForm> generate_forms(const GraphemeWord& root,
                                          Paradigm paradigm) {
  if (root.size() < 2) {
    throw ParadigmError("root '" + root.text() +
                        "' is shorter than 2 clusters");
  }
  return paradigm == Paradigm::Noun ? noun_forms(root) : verb_forms(root);
}

}  // namespace tamilstem
