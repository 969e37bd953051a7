#include "tamilstem/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "tamilstem/error.hpp"
#include "tamilstem/light_stemmer.hpp"
#include "tamilstem/strip_stemmer.hpp"

namespace tamilstem {

namespace {

constexpr std::string_view kCsvHeader =
    "n_words,n_unique,correct_strip,acc_strip,correct_light,acc_light";

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto pos = text.find('\n', start);
    if (pos == std::string_view::npos) {
      if (start < text.size()) out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  for (auto& line : out) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return out;
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
  const auto b = s.find_first_not_of(' ');
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

std::string tenths_to_string(std::uint64_t tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::size_t parse_count(std::string_view field, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected a count, got '" + std::string(field) + "'");
  }
  return v;
}

void finish_averages(EvalReport& report) {
  if (report.rows.empty()) {
    report.avg_strip = report.avg_light = 0.0;
    return;
  }
  double s = 0.0, l = 0.0;
  for (const auto& r : report.rows) {
    s += r.acc_strip;
    l += r.acc_light;
  }
  report.avg_strip = s / static_cast<double>(report.rows.size());
  report.avg_light = l / static_cast<double>(report.rows.size());
}

}  // namespace

std::vector<GoldEntry> load_gold(std::string_view text) {
  std::vector<GoldEntry> out;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    auto fields = split(line, '\t');
    for (auto& f : fields) f = trim(f);
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 'surface<TAB>stem', got " +
                                    std::to_string(fields.size()) + " field(s)");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "empty field");
    }
    try {
      out.push_back({make_word(fields[0]), make_word(fields[1])});
    } catch (const DecodeError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

std::string render_gold(std::span<const GoldEntry> gold) {
  std::string out;
  for (const auto& e : gold) {
    out += e.surface.text();
    out += '\t';
    out += e.expected_stem.text();
    out += '\n';
  }
  return out;
}

DatasetStats dataset_stats(std::span<const GraphemeWord> words) {
  DatasetStats stats;
  if (words.empty()) return stats;
  std::unordered_map<std::string_view, bool> seen;
  stats.total_words = words.size();
  stats.min_len = words.front().size();
  stats.max_len = words.front().size();
  for (const auto& w : words) {
    seen.emplace(w.text(), true);
    stats.min_len = std::min(stats.min_len, w.size());
    stats.max_len = std::max(stats.max_len, w.size());
  }
  stats.unique_words = seen.size();
  return stats;
}

double accuracy(std::size_t n_correct, std::size_t n_unique) {
  if (n_unique == 0) throw MetricError("accuracy is undefined for 0 unique words");
  if (n_correct > n_unique) {
    throw std::invalid_argument("correct count exceeds unique count");
  }
  return static_cast<double>(n_correct) / static_cast<double>(n_unique) * 100.0;
}

std::string format_accuracy(std::size_t n_correct, std::size_t n_unique) {
  accuracy(n_correct, n_unique);  // precondition checks
  return tenths_to_string(static_cast<std::uint64_t>(n_correct) * 1000 / n_unique);
}

std::string format_percent(double percent) {
  if (!(percent > 0.0)) return "0.0";
  // The nudge absorbs representation error at exact tenths (e.g. 84.99999...).
  return tenths_to_string(static_cast<std::uint64_t>(std::floor(percent * 10.0 + 1e-9)));
}

StemFn strip_stemmer(const RuleSet& rules) {
  return [&rules](const GraphemeWord& w) { return strip_stem(w, rules).stem; };
}

StemFn light_stemmer(const RuleSet& rules) {
  return [&rules](const GraphemeWord& w) { return light_stem(w, rules).stem; };
}

EvalCounts evaluate(const StemFn& stemmer, std::span<const GoldEntry> gold) {
  EvalCounts counts;
  std::unordered_map<std::string_view, const GoldEntry*> first;
  std::vector<const GoldEntry*> unique;
  for (const auto& e : gold) {
    auto [it, inserted] = first.emplace(e.surface.text(), &e);
    if (inserted) {
      unique.push_back(&e);
    } else if (it->second->expected_stem.text() != e.expected_stem.text()) {
      counts.conflicts.push_back(e.surface.text() + ": '" +
                                 it->second->expected_stem.text() + "' vs '" +
                                 e.expected_stem.text() + "'");
    }
  }
  counts.n_unique = unique.size();
  for (const auto* e : unique) {
    if (stemmer(e->surface).text() == e->expected_stem.text()) ++counts.n_correct;
  }
  return counts;
}

EvalReport compare(std::span<const GoldEntry> gold,
                   std::span<const std::size_t> chunk_sizes,
                   const StemFn& strip, const StemFn& light) {
  for (std::size_t i = 0; i < chunk_sizes.size(); ++i) {
    const auto k = chunk_sizes[i];
    if (k == 0 || k > gold.size()) {
      throw std::invalid_argument("chunk size " + std::to_string(k) +
                                  " outside 1.." + std::to_string(gold.size()));
    }
    if (i > 0 && k <= chunk_sizes[i - 1]) {
      throw std::invalid_argument("chunk sizes must be ascending (" +
                                  std::to_string(chunk_sizes[i - 1]) + ", " +
                                  std::to_string(k) + ")");
    }
  }

  // Rows are cumulative, so each surface is stemmed once.
  std::unordered_map<std::string, std::string> strip_cache;
  std::unordered_map<std::string, std::string> light_cache;
  auto memo = [](const StemFn& fn, std::unordered_map<std::string, std::string>& cache) {
    return [f = &fn, c = &cache](const GraphemeWord& w) {
      auto it = c->find(w.text());
      if (it == c->end()) it = c->emplace(w.text(), (*f)(w).text()).first;
      return segment(it->second);
    };
  };
  const StemFn strip_memo = memo(strip, strip_cache);
  const StemFn light_memo = memo(light, light_cache);

  EvalReport report;
  for (const auto k : chunk_sizes) {
    auto chunk = gold.first(k);
    auto s = evaluate(strip_memo, chunk);
    auto l = evaluate(light_memo, chunk);
    EvalRow row;
    row.n_words = k;
    row.n_unique = s.n_unique;
    row.n_correct_strip = s.n_correct;
    row.n_correct_light = l.n_correct;
    row.acc_strip = accuracy(s.n_correct, s.n_unique);
    row.acc_light = accuracy(l.n_correct, l.n_unique);
    report.rows.push_back(row);
    if (k == chunk_sizes.back()) report.conflicts = std::move(s.conflicts);
  }
  finish_averages(report);
  return report;
}

EvalReport compare(std::span<const GoldEntry> gold,
                   std::span<const std::size_t> chunk_sizes,
                   const RuleSet& rules) {
  return compare(gold, chunk_sizes, strip_stemmer(rules), light_stemmer(rules));
}

std::string render(const EvalReport& report, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : report.rows) {
        out << r.n_words << ',' << r.n_unique << ',' << r.n_correct_strip << ','
            << format_accuracy(r.n_correct_strip, r.n_unique) << ','
            << r.n_correct_light << ','
            << format_accuracy(r.n_correct_light, r.n_unique) << '\n';
      }
      if (!report.rows.empty()) {
        out << "avg,,," << format_percent(report.avg_strip) << ",,"
            << format_percent(report.avg_light) << '\n';
      }
      break;

    case ReportFormat::Table: {
      out << std::setw(8) << "words" << std::setw(8) << "unique" << std::setw(15)
          << "correct_strip" << std::setw(8) << "strip" << std::setw(15)
          << "correct_light" << std::setw(8) << "light" << '\n';
      for (const auto& r : report.rows) {
        out << std::setw(8) << r.n_words << std::setw(8) << r.n_unique
            << std::setw(15) << r.n_correct_strip << std::setw(7)
            << format_accuracy(r.n_correct_strip, r.n_unique) << '%'
            << std::setw(15) << r.n_correct_light << std::setw(7)
            << format_accuracy(r.n_correct_light, r.n_unique) << "%\n";
      }
      out << std::setw(8) << "average" << std::setw(8) << "" << std::setw(15) << ""
          << std::setw(7) << format_percent(report.avg_strip) << '%'
          << std::setw(15) << "" << std::setw(7)
          << format_percent(report.avg_light) << "%\n";
      break;
    }

    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : report.rows) {
        j["rows"].push_back({{"n_words", r.n_words},
                             {"n_unique", r.n_unique},
                             {"correct_strip", r.n_correct_strip},
                             {"acc_strip", r.acc_strip},
                             {"correct_light", r.n_correct_light},
                             {"acc_light", r.acc_light}});
      }
      j["avg_strip"] = report.avg_strip;
      j["avg_light"] = report.avg_light;
      if (!report.conflicts.empty()) j["conflicts"] = report.conflicts;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

EvalReport parse_report_csv(std::string_view csv) {
  auto lines = split_lines(csv);
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw ParseError(1, "missing CSV header");
  }
  EvalReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto fields = split(lines[i], ',');
    if (fields.size() != 6) {
      throw ParseError(line_no, "expected 6 columns, got " + std::to_string(fields.size()));
    }
    if (fields[0] == "avg") continue;
    EvalRow row;
    row.n_words = parse_count(fields[0], line_no);
    row.n_unique = parse_count(fields[1], line_no);
    row.n_correct_strip = parse_count(fields[2], line_no);
    row.n_correct_light = parse_count(fields[4], line_no);
    row.acc_strip = accuracy(row.n_correct_strip, row.n_unique);
    row.acc_light = accuracy(row.n_correct_light, row.n_unique);
    report.rows.push_back(row);
  }
  finish_averages(report);
  return report;
}

}  // namespace tamilstem
