#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tamilstem {

/// A word as a sequence of orthographic grapheme clusters. For Tamil a
/// cluster is one letter: an independent vowel, or a consonant together with
/// its vowel sign or pulli. Concatenating the clusters reproduces text().
class GraphemeWord {
 public:
  GraphemeWord() = default;

  /// Builds a word from pre-split clusters. Empty clusters are dropped.
  static GraphemeWord from_clusters(std::vector<std::string> clusters);

  const std::vector<std::string>& graphemes() const noexcept { return clusters_; }
  const std::string& text() const noexcept { return text_; }
  std::size_t size() const noexcept { return clusters_.size(); }
  bool empty() const noexcept { return clusters_.empty(); }
  const std::string& operator[](std::size_t i) const { return clusters_[i]; }

  /// Drops the last `drop` clusters and appends `tail`.
  GraphemeWord replace_suffix(std::size_t drop, const GraphemeWord& tail) const;

  friend bool operator==(const GraphemeWord& a, const GraphemeWord& b) {
    return a.text_ == b.text_ && a.clusters_ == b.clusters_;
  }

 private:
  std::vector<std::string> clusters_;
  std::string text_;
};

/// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t find_invalid_utf8(std::string_view text) noexcept;

/// Canonical composed normalization (NFC). Throws DecodeError on malformed
/// UTF-8.
std::string normalize(std::string_view text);

/// Splits already-normalized text into grapheme clusters.
GraphemeWord segment(std::string_view text);

/// normalize() followed by segment().
GraphemeWord make_word(std::string_view text);

bool ends_with(const GraphemeWord& word, const GraphemeWord& suffix) noexcept;

/// Phoneme count of one cluster: a Tamil consonant carrying a vowel (inherent
/// or sign) counts 2, everything else counts 1.
int phoneme_count(std::string_view cluster) noexcept;
int phoneme_count(const GraphemeWord& word) noexcept;

/// Tamil letter helpers shared by the rule tables and the paradigm generator.
namespace tamil {

inline constexpr std::string_view kPulli = "்";

/// The 18 Tamil consonants, bare (inherent a).
const std::vector<std::string>& consonants();

bool is_consonant(char32_t cp) noexcept;
bool is_independent_vowel(char32_t cp) noexcept;

/// True for a cluster ending in pulli (a bare consonant sound).
bool is_pulli_consonant(std::string_view cluster) noexcept;

/// True if the cluster carries a long vowel (ஆ ஈ ஊ ஏ ஐ ஓ ஔ or their signs).
bool has_long_vowel(std::string_view cluster) noexcept;

/// Appends `suffix` to `base` with orthographic vowel fusion: a base ending in
/// a pulli consonant followed by a suffix starting with an independent vowel
/// becomes consonant + vowel sign (பெண் + ஐ -> பெணை). Otherwise plain
/// concatenation.
std::string attach(std::string_view base, std::string_view suffix);

}  // namespace tamil

}  // namespace tamilstem
