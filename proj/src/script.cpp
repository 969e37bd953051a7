#include "tamilstem/script.hpp"

#include <memory>

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utext.h>

#include "tamilstem/error.hpp"
#include "utf8.hpp"

namespace tamilstem {

GraphemeWord GraphemeWord::from_clusters(std::vector<std::string> clusters) {
  GraphemeWord word;
  word.clusters_.reserve(clusters.size());
  for (auto& c : clusters) {
    if (c.empty()) continue;
    word.text_ += c;
    word.clusters_.push_back(std::move(c));
  }
  return word;
}

GraphemeWord GraphemeWord::replace_suffix(std::size_t drop,
                                          const GraphemeWord& tail) const {
  if (drop > clusters_.size()) drop = clusters_.size();
  GraphemeWord out;
  const std::size_t keep = clusters_.size() - drop;
  out.clusters_.reserve(keep + tail.size());
  out.clusters_.assign(clusters_.begin(), clusters_.begin() + keep);
  out.clusters_.insert(out.clusters_.end(), tail.clusters_.begin(),
                       tail.clusters_.end());
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < keep; ++i) bytes += clusters_[i].size();
  out.text_.reserve(bytes + tail.text_.size());
  out.text_.assign(text_, 0, bytes);
  out.text_ += tail.text_;
  return out;
}

std::size_t find_invalid_utf8(std::string_view text) noexcept {
  std::size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = utf8::decode(text, i);
    if (len == 0) return i;
    i += len;
  }
  return std::string_view::npos;
}

namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw Error(std::string("ICU NFC unavailable: ") + u_errorName(status));
  }
  return *n;
}

bool is_ascii(std::string_view text) noexcept {
  for (unsigned char c : text) {
    if (c >= 0x80) return false;
  }
  return true;
}

// BreakIterator instances are not thread-safe; keep one per thread.
icu::BreakIterator& character_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> it = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> bi(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                    status));
    if (U_FAILURE(status)) {
      throw Error(std::string("ICU break iterator unavailable: ") +
                  u_errorName(status));
    }
    return bi;
  }();
  return *it;
}

}  // namespace

std::string normalize(std::string_view text) {
  if (auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw DecodeError(bad, "invalid UTF-8 at byte offset " + std::to_string(bad));
  }
  if (is_ascii(text)) return std::string(text);

  auto src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  const auto& norm = nfc();
  if (norm.isNormalized(src, status) && U_SUCCESS(status)) {
    return std::string(text);
  }
  status = U_ZERO_ERROR;
  icu::UnicodeString dst = norm.normalize(src, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("normalization failed: ") + u_errorName(status));
  }
  std::string out;
  dst.toUTF8String(out);
  return out;
}

GraphemeWord segment(std::string_view text) {
  std::vector<std::string> clusters;
  if (text.empty()) return GraphemeWord{};
  if (is_ascii(text)) {
    clusters.reserve(text.size());
    // CR LF is the only multi-byte ASCII cluster.
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
        clusters.emplace_back("\r\n");
        ++i;
      } else {
        clusters.emplace_back(1, text[i]);
      }
    }
    return GraphemeWord::from_clusters(std::move(clusters));
  }

  UErrorCode status = U_ZERO_ERROR;
  UText* ut = utext_openUTF8(nullptr, text.data(),
                             static_cast<int64_t>(text.size()), &status);
  if (U_FAILURE(status)) {
    throw Error(std::string("utext_openUTF8 failed: ") + u_errorName(status));
  }
  auto& bi = character_iterator();
  bi.setText(ut, status);
  if (U_FAILURE(status)) {
    utext_close(ut);
    throw Error(std::string("BreakIterator::setText failed: ") +
                u_errorName(status));
  }
  // With a UTF-8 UText the boundaries are byte offsets.
  int32_t start = bi.first();
  for (int32_t end = bi.next(); end != icu::BreakIterator::DONE;
       start = end, end = bi.next()) {
    clusters.emplace_back(text.substr(static_cast<std::size_t>(start),
                                      static_cast<std::size_t>(end - start)));
  }
  // Detach before the UText goes away.
  bi.setText(icu::UnicodeString());
  utext_close(ut);
  return GraphemeWord::from_clusters(std::move(clusters));
}

GraphemeWord make_word(std::string_view text) { return segment(normalize(text)); }

bool ends_with(const GraphemeWord& word, const GraphemeWord& suffix) noexcept {
  const auto& w = word.graphemes();
  const auto& s = suffix.graphemes();
  if (s.size() > w.size()) return false;
  const std::size_t off = w.size() - s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (w[off + i] != s[i]) return false;
  }
  return true;
}

int phoneme_count(std::string_view cluster) noexcept {
  if (cluster.empty()) return 0;
  auto [first, len] = utf8::decode(cluster, 0);
  if (len == 0 || !tamil::is_consonant(first)) return 1;
  return tamil::is_pulli_consonant(cluster) ? 1 : 2;
}

int phoneme_count(const GraphemeWord& word) noexcept {
  int n = 0;
  for (const auto& c : word.graphemes()) n += phoneme_count(c);
  return n;
}

namespace tamil {

const std::vector<std::string>& consonants() {
  static const std::vector<std::string> kConsonants = {
      "க", "ங", "ச", "ஞ", "ட", "ண", "த", "ந", "ப",
      "ம", "ய", "ர", "ல", "வ", "ழ", "ள", "ற", "ன"};
  return kConsonants;
}

bool is_consonant(char32_t cp) noexcept { return cp >= 0x0B95 && cp <= 0x0BB9; }

bool is_independent_vowel(char32_t cp) noexcept {
  return cp >= 0x0B85 && cp <= 0x0B94;
}

bool is_pulli_consonant(std::string_view cluster) noexcept {
  return cluster.size() >= kPulli.size() &&
         cluster.substr(cluster.size() - kPulli.size()) == kPulli;
}

bool has_long_vowel(std::string_view cluster) noexcept {
  std::size_t i = 0;
  while (i < cluster.size()) {
    auto [cp, len] = utf8::decode(cluster, i);
    if (len == 0) return false;
    switch (cp) {
      case 0x0B86: case 0x0B88: case 0x0B8A: case 0x0B8F: case 0x0B90:
      case 0x0B93: case 0x0B94:  // ஆ ஈ ஊ ஏ ஐ ஓ ஔ
      case 0x0BBE: case 0x0BC0: case 0x0BC2: case 0x0BC7: case 0x0BC8:
      case 0x0BCB: case 0x0BCC:  // ா ீ ூ ே ை ோ ௌ
        return true;
      default:
        break;
    }
    i += len;
  }
  return false;
}

namespace {

// Vowel sign for an independent vowel; U+0000 means the inherent a.
char32_t vowel_sign(char32_t vowel) noexcept {
  switch (vowel) {
    case 0x0B85: return 0;       // அ
    case 0x0B86: return 0x0BBE;  // ஆ
    case 0x0B87: return 0x0BBF;  // இ
    case 0x0B88: return 0x0BC0;  // ஈ
    case 0x0B89: return 0x0BC1;  // உ
    case 0x0B8A: return 0x0BC2;  // ஊ
    case 0x0B8E: return 0x0BC6;  // எ
    case 0x0B8F: return 0x0BC7;  // ஏ
    case 0x0B90: return 0x0BC8;  // ஐ
    case 0x0B92: return 0x0BCA;  // ஒ
    case 0x0B93: return 0x0BCB;  // ஓ
    case 0x0B94: return 0x0BCC;  // ஔ
    default: return 0xFFFF;
  }
}

}  // namespace

std::string attach(std::string_view base, std::string_view suffix) {
  std::string out(base);
  if (suffix.empty()) return out;
  auto [first, len] = utf8::decode(suffix, 0);
  if (len == 0 || !is_independent_vowel(first) || !is_pulli_consonant(base)) {
    out += suffix;
    return out;
  }
  char32_t sign = vowel_sign(first);
  if (sign == 0xFFFF) {
    out += suffix;
    return out;
  }
  out.resize(out.size() - kPulli.size());
  if (sign != 0) utf8::append(out, sign);
  out += suffix.substr(len);
  return out;
}

}  // namespace tamil

}  // namespace tamilstem
