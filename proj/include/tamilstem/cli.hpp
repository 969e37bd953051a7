#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tamilstem/eval.hpp"
#include "tamilstem/paradigm.hpp"

namespace tamilstem::cli {

enum class Command { Stem, Eval, Compare, RulesValidate, Generate };
enum class Algorithm { Light, Strip };

// Exit codes (sysexits.h values for the error classes).
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuleConflicts = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataErr = 65;
inline constexpr int kExitNoInput = 66;

struct CliConfig {
  Command command = Command::Stem;
  Algorithm algo = Algorithm::Light;
  std::optional<std::string> rules_path;  // built-in rules when empty
  std::optional<std::string> gold_path;   // stdin when empty
  bool trace = false;
  ReportFormat format = ReportFormat::Table;
  std::vector<std::size_t> chunk_sizes;  // compare only; empty = whole set
  Paradigm paradigm = Paradigm::Noun;
};

/// Parses argv-style arguments (without the program name). On failure or
/// --help returns std::nullopt after writing usage to `err` / `out` and
/// storing the exit code in `exit_code`.
std::optional<CliConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out, std::ostream& err,
                                    int& exit_code);

int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err);

/// parse_args() + run().
int main(const std::vector<std::string>& args, std::istream& in,
         std::ostream& out, std::ostream& err);

}  // namespace tamilstem::cli
