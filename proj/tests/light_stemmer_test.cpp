#include "tamilstem/light_stemmer.hpp"

#include <gtest/gtest.h>

#include "support.hpp"
#include "tamilstem/strip_stemmer.hpp"

namespace tamilstem {
namespace {

RuleSet romanized() {
  return parse_rules(testing::read_text(std::string(TAMILSTEM_FIXTURES) + "/romanized.rules"));
}

std::string light(std::string_view w, const RuleSet& rules = builtin_rules()) {
  return light_stem(make_word(w), rules).stem.text();
}

TEST(SingleLayerTest, StripPlural) {
  const auto& rules = builtin_rules();
  EXPECT_EQ(strip_plural(make_word("பெண்கள்"), rules).text(), "பெண்");
  EXPECT_EQ(strip_plural(make_word("மரங்கள்"), rules).text(), "மரம்");
  EXPECT_EQ(strip_plural(make_word("மரம்"), rules).text(), "மரம்");
  // Only the plural layer: the case ending stays.
  EXPECT_EQ(strip_plural(make_word("பெண்ணை"), rules).text(), "பெண்ணை");
}

TEST(SingleLayerTest, AdjectivalToVerb) {
  const auto& rules = builtin_rules();
  EXPECT_EQ(adjectival_to_verb(make_word("ஓடிய"), rules).text(), "ஓடு");
  EXPECT_EQ(adjectival_to_verb(make_word("பாடிய"), rules).text(), "பாடு");
  EXPECT_EQ(adjectival_to_verb(make_word("படி"), rules).text(), "படி");
}

TEST(SingleLayerTest, StripTense) {
  const auto& rules = builtin_rules();
  EXPECT_EQ(strip_tense(make_word("பாடுகின்ற"), rules).text(), "பாடு");
  EXPECT_EQ(strip_tense(make_word("பாடும்"), rules).text(), "பாடு");
  EXPECT_EQ(strip_tense(make_word("படித்தேன்"), rules).text(), "படி");
  EXPECT_EQ(strip_tense(make_word("மரம்"), rules).text(), "மரம்");
}

TEST(LightStemTest, Examples) {
  EXPECT_EQ(light("பெண்களுக்கு"), "பெண்");
  EXPECT_EQ(light("மரங்களிலிருந்து"), "மரம்");
  EXPECT_EQ(light("மரத்தை"), "மரம்");
  EXPECT_EQ(light("படிக்கமாட்டேன்"), "படி");
  EXPECT_EQ(light("ஓடிய"), "ஓடு");
  EXPECT_EQ(light("படி"), "படி");
  EXPECT_EQ(light(""), "");
}

TEST(LightStemTest, CaseComesOffBeforePlural) {
  const auto r = light_stem(make_word("பெண்களுக்கு"), builtin_rules());
  ASSERT_EQ(r.trace.size(), 2u);
  EXPECT_EQ(r.trace[0].rule.suffix_class, SuffixClass::Case);
  EXPECT_EQ(r.trace[0].after.text(), "பெண்கள்");
  EXPECT_EQ(r.trace[1].rule.suffix_class, SuffixClass::Plural);
  EXPECT_EQ(r.trace[1].pass, 0u);
}

TEST(LightStemTest, RomanizedFixture) {
  const auto rules = romanized();
  EXPECT_EQ(light("PeNgaL", rules), "PeN");
  EXPECT_EQ(light("PeNgaLukku", rules), "PeN");
  EXPECT_EQ(light("marangaL", rules), "maram");
  EXPECT_EQ(light("Paadiya", rules), "Paadu");
  EXPECT_EQ(light("Paadukinra", rules), "Paadu");
  EXPECT_EQ(light("padiththEn", rules), "padi");
}

// Within one pass each rule's class must be allowed by the rule before it.
TEST(LightStemTest, TraceFollowsTransitions) {
  const auto& rules = builtin_rules();
  for (const auto& w : testing::fuzz_corpus(3000, 17)) {
    const auto r = light_stem(w, rules);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      const auto& prev = r.trace[i - 1];
      const auto& step = r.trace[i];
      ASSERT_EQ(step.before, prev.after);
      ASSERT_GE(step.pass, prev.pass);
      if (step.pass == prev.pass) {
        ASSERT_TRUE(prev.rule.next_classes.contains(step.rule.suffix_class)) << w.text();
      }
    }
    if (!r.trace.empty()) {
      EXPECT_EQ(r.trace.front().before, w);
      EXPECT_EQ(r.trace.back().after, r.stem);
    }
  }
}

TEST(LightStemTest, ParadigmRoundTrip) {
  const auto& rules = builtin_rules();
  for (const auto& f : testing::paradigm_corpus()) {
    EXPECT_EQ(light_stem(f.surface, rules).stem, f.expected_stem)
        << f.surface.text() << " (" << f.label << ")";
  }
}

TEST(LightStemTest, IdempotentAndBounded) {
  const auto& rules = builtin_rules();
  auto words = testing::fuzz_corpus(3000, 23);
  for (const auto& f : testing::paradigm_corpus()) words.push_back(f.surface);
  for (const auto& w : words) {
    const auto r = light_stem(w, rules);
    EXPECT_EQ(light_stem(r.stem, rules).stem, r.stem) << w.text();
    EXPECT_LE(r.trace.size(), w.size());
    for (const auto& step : r.trace) {
      EXPECT_LT(phoneme_count(step.after), phoneme_count(step.before));
      EXPECT_GE(step.after.size(), 2u);
    }
  }
}

TEST(LightStemTest, BatchMatchesSingleCalls) {
  const auto words = testing::fuzz_corpus(300, 29);
  const auto batch = light_stem_batch(words, builtin_rules());
  ASSERT_EQ(batch.size(), words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    EXPECT_EQ(batch[i].stem, light_stem(words[i], builtin_rules()).stem);
  }
}

TEST(LightStemTest, AtLeastAsAccurateAsStripOnBundledSets) {
  const auto& rules = builtin_rules();
  auto gold = testing::paradigm_gold();
  const auto hand = testing::hand_gold();
  gold.insert(gold.end(), hand.begin(), hand.end());
  const auto l = evaluate(light_stemmer(rules), gold);
  const auto s = evaluate(strip_stemmer(rules), gold);
  EXPECT_GE(l.n_correct, s.n_correct);
  EXPECT_GE(accuracy(s.n_correct, s.n_unique), 85.0);
}

}  // namespace
}  // namespace tamilstem
