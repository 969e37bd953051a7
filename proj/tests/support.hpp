#pragma once

// Corpus builders shared by the unit and acceptance suites.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tamilstem/eval.hpp"
#include "tamilstem/paradigm.hpp"
#include "tamilstem/rules.hpp"
#include "tamilstem/script.hpp"

namespace tamilstem::testing {

inline std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(TAMILSTEM_DATA) + "/" + name;
}

inline std::vector<GraphemeWord> read_roots(const std::string& name) {
  std::vector<GraphemeWord> roots;
  std::istringstream in(read_text(data_path(name)));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    roots.push_back(make_word(line));
  }
  return roots;
}

inline std::vector<InflectedForm> paradigm_corpus() {
  std::vector<InflectedForm> out;
  for (const auto& [file, p] : {std::pair{"roots_noun.txt", Paradigm::Noun},
                                std::pair{"roots_verb.txt", Paradigm::Verb}}) {
    for (const auto& root : read_roots(file)) {
      auto forms = generate_forms(root, p);
      out.insert(out.end(), forms.begin(), forms.end());
    }
  }
  return out;
}

inline std::vector<GoldEntry> paradigm_gold() {
  std::vector<GoldEntry> gold;
  for (auto& f : paradigm_corpus()) gold.push_back({f.surface, f.expected_stem});
  return gold;
}

inline std::vector<GoldEntry> hand_gold() {
  return load_gold(read_text(data_path("hand_gold.tsv")));
}

/// Random cluster sequences drawn from the letters of the rule patterns plus
/// plain consonants, and paradigm forms with one cluster substituted,
/// inserted or deleted.
inline std::vector<GraphemeWord> fuzz_corpus(std::size_t n, unsigned seed) {
  std::vector<std::string> letters;
  for (const auto& r : builtin_rules().rules()) {
    for (const auto& g : r.pattern.graphemes()) letters.push_back(g);
  }
  for (const auto& c : tamil::consonants()) letters.push_back(c);
  for (const char* v : {"அ", "ஆ", "இ", "உ", "ஏ", "ஐ", "ஓ"}) letters.push_back(v);
  const auto forms = paradigm_corpus();

  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> form(0, forms.size() - 1);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> op(0, 2);

  std::vector<GraphemeWord> out;
  out.reserve(n);
  while (out.size() < n) {
    std::vector<std::string> clusters;
    if (out.size() % 2 == 0) {
      for (int k = len(rng); k > 0; --k) clusters.push_back(letters[letter(rng)]);
    } else {
      clusters = forms[form(rng)].surface.graphemes();
      std::uniform_int_distribution<std::size_t> pos(0, clusters.size() - 1);
      const auto at = pos(rng);
      switch (op(rng)) {
        case 0: clusters[at] = letters[letter(rng)]; break;
        case 1: clusters.insert(clusters.begin() + at, letters[letter(rng)]); break;
        default:
          if (clusters.size() > 1) clusters.erase(clusters.begin() + at);
          break;
      }
    }
    out.push_back(GraphemeWord::from_clusters(std::move(clusters)));
  }
  return out;
}

}  // namespace tamilstem::testing
