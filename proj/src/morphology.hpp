#pragma once

// Suffix tables for the noun declension and the verb conjugation matrix.
// Shared by the built-in rule inventory and the paradigm generator.

#include <array>
#include <string_view>

namespace tamilstem::morphology {

struct CaseSuffix {
  std::string_view name;
  std::string_view suffix;  // vowel-initial; fused onto the stem by attach()
};

inline constexpr std::string_view kPlural = "கள்";
inline constexpr std::string_view kAmPlural = "ங்கள்";  // maram -> marangaL
inline constexpr std::string_view kAmOblique = "த்த்";  // maram -> marath-
inline constexpr std::string_view kGlide = "ய்";        // kiLi -> kiLiy-
inline constexpr std::string_view kGlideDative = "க்கு";  // kiLi -> kiLikku
inline constexpr std::string_view kVocative = "ஏ";

inline constexpr CaseSuffix kAccusative{"accusative", "ஐ"};
inline constexpr CaseSuffix kDative{"dative", "உக்கு"};
inline constexpr CaseSuffix kSociative{"sociative", "ஓடு"};
inline constexpr CaseSuffix kGenitive{"genitive", "உடைய"};
inline constexpr CaseSuffix kInstrumental{"instrumental", "ஆல்"};
inline constexpr CaseSuffix kLocativeAnimate{"locative", "இடம்"};
inline constexpr CaseSuffix kAblativeAnimate{"ablative", "இடமிருந்து"};
inline constexpr CaseSuffix kLocativeInanimate{"locative", "இல்"};
inline constexpr CaseSuffix kAblativeInanimate{"ablative", "இலிருந்து"};

// Every case ending the rule inventory knows about.
inline constexpr std::array<CaseSuffix, 9> kAllCases = {
    kAccusative,      kDative,           kSociative,
    kGenitive,        kInstrumental,     kLocativeAnimate,
    kAblativeAnimate, kLocativeInanimate, kAblativeInanimate};

// Declension order for one number: nominative is implicit, vocative separate.
inline constexpr std::array<CaseSuffix, 7> kAnimateCases = {
    kAccusative,   kDative,           kSociative,      kGenitive,
    kInstrumental, kLocativeAnimate, kAblativeAnimate};
inline constexpr std::array<CaseSuffix, 7> kInanimateCases = {
    kAccusative,   kDative,             kSociative,        kGenitive,
    kInstrumental, kLocativeInanimate, kAblativeInanimate};

enum class VerbCellKind { Affirmative, Negative };

struct VerbCell {
  std::string_view tense;
  std::string_view person;
  std::string_view suffix;
  VerbCellKind kind;
};

// padi-class augments: past -tt-, present -kkiR-, future -pp-/-kk-.
inline constexpr std::array<VerbCell, 41> kVerbCells = {{
    {"past", "1sg", "த்தேன்", VerbCellKind::Affirmative},
    {"past", "2sg", "த்தாய்", VerbCellKind::Affirmative},
    {"past", "3sg.m", "த்தான்", VerbCellKind::Affirmative},
    {"past", "3sg.f", "த்தாள்", VerbCellKind::Affirmative},
    {"past", "3sg.hon", "த்தார்", VerbCellKind::Affirmative},
    {"past", "3sg.n", "த்தது", VerbCellKind::Affirmative},
    {"past", "1pl", "த்தோம்", VerbCellKind::Affirmative},
    {"past", "2pl", "த்தீர்கள்", VerbCellKind::Affirmative},
    {"past", "3pl.an", "த்தார்கள்", VerbCellKind::Affirmative},
    {"past", "3pl.n", "த்தன", VerbCellKind::Affirmative},
    {"present", "1sg", "க்கிறேன்", VerbCellKind::Affirmative},
    {"present", "2sg", "க்கிறாய்", VerbCellKind::Affirmative},
    {"present", "3sg.m", "க்கிறான்", VerbCellKind::Affirmative},
    {"present", "3sg.f", "க்கிறாள்", VerbCellKind::Affirmative},
    {"present", "3sg.hon", "க்கிறார்", VerbCellKind::Affirmative},
    {"present", "3sg.n", "க்கிறது", VerbCellKind::Affirmative},
    {"present", "1pl", "க்கிறோம்", VerbCellKind::Affirmative},
    {"present", "2pl", "க்கிறீர்கள்", VerbCellKind::Affirmative},
    {"present", "3pl.an", "க்கிறார்கள்", VerbCellKind::Affirmative},
    {"present", "3pl.n", "க்கின்றன", VerbCellKind::Affirmative},
    {"future", "1sg", "ப்பேன்", VerbCellKind::Affirmative},
    {"future", "2sg", "ப்பாய்", VerbCellKind::Affirmative},
    {"future", "3sg.m", "ப்பான்", VerbCellKind::Affirmative},
    {"future", "3sg.f", "ப்பாள்", VerbCellKind::Affirmative},
    {"future", "3sg.hon", "ப்பார்", VerbCellKind::Affirmative},
    {"future", "3sg.n", "க்கும்", VerbCellKind::Affirmative},
    {"future", "1pl", "ப்போம்", VerbCellKind::Affirmative},
    {"future", "2pl", "ப்பீர்கள்", VerbCellKind::Affirmative},
    {"future", "3pl.an", "ப்பார்கள்", VerbCellKind::Affirmative},
    {"future", "3pl.n", "க்கும்", VerbCellKind::Affirmative},
    {"future-neg", "1sg", "க்கமாட்டேன்", VerbCellKind::Negative},
    {"future-neg", "2sg", "க்கமாட்டாய்", VerbCellKind::Negative},
    {"future-neg", "3sg.m", "க்கமாட்டான்", VerbCellKind::Negative},
    {"future-neg", "3sg.f", "க்கமாட்டாள்", VerbCellKind::Negative},
    {"future-neg", "3sg.hon", "க்கமாட்டார்", VerbCellKind::Negative},
    {"future-neg", "3sg.n", "க்காது", VerbCellKind::Negative},
    {"future-neg", "1pl", "க்கமாட்டோம்", VerbCellKind::Negative},
    {"future-neg", "2pl", "க்கமாட்டீர்கள்", VerbCellKind::Negative},
    {"future-neg", "3pl.an", "க்கமாட்டார்கள்", VerbCellKind::Negative},
    {"future-neg", "3pl.n", "க்காது", VerbCellKind::Negative},
    {"nonfuture-neg", "all", "க்கவில்லை", VerbCellKind::Negative},
}};

// Relative participles of weak (-u) verbs: paadukinra, paadum; and the
// strong-verb present participle.
inline constexpr std::array<std::string_view, 2> kPresentParticiples = {
    "கின்ற", "க்கின்ற"};
inline constexpr std::string_view kPastParticiple = "த்த";  // padiththa

// Consonants whose short monosyllabic stems geminate before a vowel
// (peN -> peNNai).
inline constexpr std::array<std::string_view, 2> kGeminating = {"ண", "ன"};

}  // namespace tamilstem::morphology
