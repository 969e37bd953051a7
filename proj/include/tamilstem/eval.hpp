#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tamilstem/rules.hpp"
#include "tamilstem/script.hpp"

namespace tamilstem {

struct GoldEntry {
  GraphemeWord surface;
  GraphemeWord expected_stem;
};

/// Parses `surface <TAB> stem` lines. `#` comments and blank lines are
/// skipped. Throws ParseError (with line number) on a wrong field count or an
/// empty field, DecodeError on malformed UTF-8.
std::vector<GoldEntry> load_gold(std::string_view text);

/// Serializes to the gold file format.
std::string render_gold(std::span<const GoldEntry> gold);

struct DatasetStats {
  std::size_t total_words = 0;
  std::size_t unique_words = 0;
  std::size_t min_len = 0;  // grapheme clusters; 0 for empty input
  std::size_t max_len = 0;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats dataset_stats(std::span<const GraphemeWord> words);

/// Correctly stemmed / unique words * 100. Throws MetricError when
/// n_unique == 0 and std::invalid_argument when n_correct > n_unique.
double accuracy(std::size_t n_correct, std::size_t n_unique);

/// accuracy() truncated toward zero to one decimal ("81.0" for 30/37). Uses
/// integer arithmetic, so boundary cases are exact.
std::string format_accuracy(std::size_t n_correct, std::size_t n_unique);

/// A percentage truncated toward zero to one decimal.
std::string format_percent(double percent);

using StemFn = std::function<GraphemeWord(const GraphemeWord&)>;

StemFn strip_stemmer(const RuleSet& rules);
StemFn light_stemmer(const RuleSet& rules);

struct EvalCounts {
  std::size_t n_unique = 0;
  std::size_t n_correct = 0;
  /// Surfaces listed with more than one expected stem; the first one wins.
  std::vector<std::string> conflicts;
};

/// Deduplicates gold by surface and counts exact stem matches.
EvalCounts evaluate(const StemFn& stemmer, std::span<const GoldEntry> gold);

struct EvalRow {
  std::size_t n_words = 0;
  std::size_t n_unique = 0;
  std::size_t n_correct_strip = 0;
  std::size_t n_correct_light = 0;
  double acc_strip = 0.0;
  double acc_light = 0.0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  double avg_strip = 0.0;  // mean of row accuracies
  double avg_light = 0.0;
  std::vector<std::string> conflicts;
};

/// Evaluates both stemmers on the first k gold entries for every k in
/// `chunk_sizes` (ascending, each <= gold.size()); throws
/// std::invalid_argument otherwise.
EvalReport compare(std::span<const GoldEntry> gold,
                   std::span<const std::size_t> chunk_sizes,
                   const StemFn& strip, const StemFn& light);

EvalReport compare(std::span<const GoldEntry> gold,
                   std::span<const std::size_t> chunk_sizes,
                   const RuleSet& rules);

enum class ReportFormat { Table, Csv, Json };

/// Table and CSV print truncated one-decimal percentages; JSON keeps full
/// precision.
std::string render(const EvalReport& report, ReportFormat format);

/// Reads the CSV produced by render(); accuracies are recomputed from counts.
EvalReport parse_report_csv(std::string_view csv);

}  // namespace tamilstem
