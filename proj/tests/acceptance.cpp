// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "support.hpp"
#include "tamilstem/light_stemmer.hpp"
#include "tamilstem/strip_stemmer.hpp"

namespace {

using namespace tamilstem;
using boost::multiprecision::cpp_rational;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void check(const char* id, const char* title, const std::function<Outcome()>& fn) {
  const auto t0 = Clock::now();
  Outcome r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s %s %s: %s (%.3fs)\n", r.ok ? "PASS" : "FAIL", id, title,
              r.detail.c_str(), secs);
  if (!r.ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome ac1() {
  const auto t0 = Clock::now();
  const std::vector<std::tuple<std::size_t, std::size_t, std::string>> cases = {
      {30, 37, "81.0"}, {101, 118, "85.5"}, {152, 182, "83.5"}, {200, 237, "84.3"}};
  std::string got;
  bool ok = true;
  for (const auto& [c, n, want] : cases) {
    const auto s = format_accuracy(c, n);
    got += s + " ";
    ok = ok && s == want;
  }
  const double secs = seconds_since(t0);
  return {ok && secs < 1.0, got + "runtime " + std::to_string(secs) + "s < 1s"};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const auto nouns = testing::read_roots("roots_noun.txt");
  const auto verbs = testing::read_roots("roots_verb.txt");
  const bool has_maram =
      std::any_of(nouns.begin(), nouns.end(), [](const auto& r) { return r.text() == "மரம்"; });
  const auto forms = testing::paradigm_corpus();
  std::size_t hits = 0;
  for (const auto& f : forms) hits += light_stem(f.surface, builtin_rules()).stem == f.expected_stem;
  const double secs = seconds_since(t0);
  const bool ok = nouns.size() >= 10 && verbs.size() >= 10 && has_maram &&
                  forms.size() >= 800 && hits == forms.size() && secs < 5.0;
  return {ok, std::to_string(nouns.size()) + " nouns, " + std::to_string(verbs.size()) +
                  " verbs, " + std::to_string(hits) + "/" + std::to_string(forms.size()) +
                  " pairs recovered"};
}

Outcome ac3() {
  auto gold = testing::paradigm_gold();
  const auto hand = testing::hand_gold();
  gold.insert(gold.end(), hand.begin(), hand.end());
  const std::vector<std::size_t> chunks = {gold.size()};
  const auto report = compare(gold, chunks, builtin_rules());
  const bool ok = hand.size() >= 50 && report.avg_light >= report.avg_strip &&
                  report.avg_strip >= 85.0;
  return {ok, std::to_string(hand.size()) + " hand forms; light " +
                  format_percent(report.avg_light) + " >= strip " +
                  format_percent(report.avg_strip) + " >= 85"};
}

Outcome ac4() {
  const auto words = testing::fuzz_corpus(10000, 2024);
  const auto& rules = builtin_rules();
  std::size_t bad_light = 0, bad_strip = 0;
  for (const auto& w : words) {
    const auto l = light_stem(w, rules).stem;
    bad_light += light_stem(l, rules).stem != l;
    const auto s = strip_stem(w, rules).stem;
    bad_strip += strip_stem(s, rules).stem != s;
  }
  return {bad_light == 0 && bad_strip == 0,
          std::to_string(words.size()) + " words, violations light " +
              std::to_string(bad_light) + " strip " + std::to_string(bad_strip)};
}

// 30 rules taken from the largest last-letter groups, so patterns nest.
std::vector<SuffixRule> rule_subset() {
  std::map<std::string, std::vector<const SuffixRule*>> groups;
  for (const auto& r : builtin_rules().rules()) {
    groups[r.pattern.graphemes().back()].push_back(&r);
  }
  std::vector<std::vector<const SuffixRule*>> ordered;
  for (auto& [k, v] : groups) ordered.push_back(v);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<const SuffixRule*> picked;
  for (const auto& g : ordered) {
    // Half of each group, spread over its lengths, so several groups appear.
    for (std::size_t i = 0; i < g.size() && picked.size() < 30; i += 2) picked.push_back(g[i]);
  }
  std::sort(picked.begin(), picked.end(),
            [](const auto* a, const auto* b) { return a->order < b->order; });
  std::vector<SuffixRule> out;
  for (const auto* r : picked) out.push_back(*r);
  return out;
}

Outcome ac5() {
  const RuleSet subset(rule_subset());
  const auto& rules = subset.rules();
  const std::vector<std::string> filler = {"ப", "டி", "க"};

  std::vector<std::vector<std::string>> prefixes = {{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const auto& p : std::vector(prefixes)) {
      if (p.size() != len - 1) continue;
      for (const auto& f : filler) {
        auto q = p;
        q.push_back(f);
        prefixes.push_back(q);
      }
    }
  }
  std::set<std::vector<std::string>> tails = {{}};
  for (const auto& a : rules) {
    const auto& ag = a.pattern.graphemes();
    for (std::size_t i = 1; i < ag.size(); ++i) {
      tails.insert({ag.begin() + static_cast<std::ptrdiff_t>(i), ag.end()});
      for (const auto& f : filler) {
        auto miss = ag;
        miss[i - 1] = f;
        tails.insert(miss);
      }
    }
    for (const auto& b : rules) {
      auto t = a.pattern.graphemes();
      const auto& bg = b.pattern.graphemes();
      t.insert(t.end(), bg.begin(), bg.end());
      tails.insert(t);
    }
  }

  std::size_t checked = 0, violations = 0, matched = 0;
  for (const auto& p : prefixes) {
    for (const auto& t : tails) {
      if (p.size() + t.size() > 8) continue;
      auto clusters = p;
      clusters.insert(clusters.end(), t.begin(), t.end());
      const auto word = GraphemeWord::from_clusters(clusters);

      const SuffixRule* best = nullptr;
      for (const auto& r : rules) {
        const auto& pat = r.pattern.graphemes();
        if (pat.size() > clusters.size()) continue;
        const std::vector<std::string> tail(clusters.end() - static_cast<std::ptrdiff_t>(pat.size()),
                                            clusters.end());
        if (tail != pat) continue;
        if (clusters.size() - pat.size() + r.replacement.size() < r.min_stem) continue;
        if (best == nullptr || pat.size() > best->pattern.size()) best = &r;
      }
      const auto result = strip_stem(word, subset);
      const bool ok = best == nullptr ? result.trace.empty()
                                      : !result.trace.empty() && result.trace[0].rule == *best;
      violations += !ok;
      matched += best != nullptr;
      ++checked;
    }
  }
  return {violations == 0 && rules.size() == 30,
          std::to_string(rules.size()) + " rules, " + std::to_string(checked) + " words (" +
              std::to_string(matched) + " matching), " + std::to_string(violations) +
              " violations"};
}

Outcome ac6() {
  std::vector<std::string> texts;
  for (const auto& f : testing::paradigm_corpus()) texts.push_back(f.surface.text());
  for (const auto& g : testing::hand_gold()) texts.push_back(g.surface.text());
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cp(0x0B82, 0x0BCD), len(1, 10);
  while (texts.size() < 1000) {
    std::string raw;
    for (int k = len(rng); k > 0; --k) {
      const int c = cp(rng);
      raw += static_cast<char>(0xE0 | (c >> 12));
      raw += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      raw += static_cast<char>(0x80 | (c & 0x3F));
    }
    texts.push_back(normalize(raw));
  }
  texts.resize(1000);
  std::size_t bad = 0;
  for (const auto& t : texts) {
    const auto word = segment(t);
    std::string joined;
    for (const auto& g : word.graphemes()) joined += g;
    bad += joined != t;
  }
  const auto maram = segment("மரம்").size();
  return {bad == 0 && maram == 3, std::to_string(texts.size()) + " words, " +
                                      std::to_string(bad) + " mismatches; மரம் has " +
                                      std::to_string(maram) + " clusters"};
}

Outcome ac7() {
  auto gold = testing::paradigm_gold();
  std::shuffle(gold.begin(), gold.end(), std::mt19937(7));
  const auto hand = testing::hand_gold();
  gold.insert(gold.begin() + 100, hand.begin(), hand.end());
  gold.resize(700);
  const std::vector<std::size_t> chunks = {200, 400, 600, 700};
  const auto& rules = builtin_rules();
  const auto report = compare(gold, chunks, rules);

  cpp_rational sum_s = 0, sum_l = 0;
  for (std::size_t k : chunks) {
    const std::span<const GoldEntry> prefix(gold.data(), k);
    const auto s = evaluate(strip_stemmer(rules), prefix);
    const auto l = evaluate(light_stemmer(rules), prefix);
    sum_s += cpp_rational(s.n_correct * 100, s.n_unique);
    sum_l += cpp_rational(l.n_correct * 100, l.n_unique);
  }
  const double want_s = static_cast<double>(sum_s / chunks.size());
  const double want_l = static_cast<double>(sum_l / chunks.size());
  const double rel = std::max(std::abs(report.avg_strip - want_s) / want_s,
                              std::abs(report.avg_light - want_l) / want_l);

  const auto csv = render(report, ReportFormat::Csv);
  const auto back = parse_report_csv(csv);
  bool same = back.rows.size() == report.rows.size() && render(back, ReportFormat::Csv) == csv;
  for (std::size_t i = 0; same && i < back.rows.size(); ++i) {
    const auto &a = back.rows[i], &b = report.rows[i];
    same = a.n_words == b.n_words && a.n_unique == b.n_unique &&
           a.n_correct_strip == b.n_correct_strip && a.n_correct_light == b.n_correct_light &&
           a.acc_strip == b.acc_strip && a.acc_light == b.acc_light;
  }
  same = same && std::abs(back.avg_strip - report.avg_strip) <= 1e-12 * want_s &&
         std::abs(back.avg_light - report.avg_light) <= 1e-12 * want_l;
  const bool has_avg = csv.find("\navg,") != std::string::npos;

  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", rel);
  return {report.rows.size() == 4 && has_avg && same && rel <= 1e-12,
          std::to_string(report.rows.size()) + " rows + average, csv round trip " +
              (same ? "exact" : "lossy") + ", relative error " + buf};
}

Outcome ac8() {
  const auto words = testing::fuzz_corpus(10000, 8);
  const auto& rules = builtin_rules();
  const auto t0 = Clock::now();
  std::size_t steps = 0;
  for (const auto& w : words) steps += light_stem(w, rules).trace.size();
  const double secs = seconds_since(t0);
  return {secs < 1.0, std::to_string(words.size()) + " words, " + std::to_string(steps) +
                          " rule applications in " + std::to_string(secs) + "s < 1s"};
}

}  // namespace

int main() {
  check("AC1", "accuracy formula", ac1);
  check("AC2", "paradigm round trip", ac2);
  check("AC3", "light vs strip ordering", ac3);
  check("AC4", "idempotence", ac4);
  check("AC5", "longest-match oracle", ac5);
  check("AC6", "grapheme round trip", ac6);
  check("AC7", "report shape", ac7);
  check("AC8", "throughput", ac8);
  return failures == 0 ? 0 : 1;
}
