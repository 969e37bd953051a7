#include "tamilstem/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tamilstem/error.hpp"
#include "tamilstem/light_stemmer.hpp"
#include "tamilstem/rules.hpp"
#include "tamilstem/strip_stemmer.hpp"

namespace tamilstem::cli {

namespace {

// Thrown inside run() to unwind with a specific exit code.
struct Exit {
  int code;
};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot read '" << path << "'\n";
    throw Exit{kExitNoInput};
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RuleSet load_rules(const CliConfig& config, std::ostream& err) {
  if (!config.rules_path) return builtin_rules();
  const std::string text = read_file(*config.rules_path, err);
  try {
    return parse_rules(text);
  } catch (const Error& e) {
    err << "error: " << *config.rules_path << ": " << e.what() << '\n';
    throw Exit{kExitDataErr};
  }
}

std::vector<GoldEntry> load_gold_input(const CliConfig& config, std::istream& in,
                                       std::ostream& err) {
  const std::string text =
      config.gold_path ? read_file(*config.gold_path, err) : read_all(in);
  try {
    return load_gold(text);
  } catch (const Error& e) {
    err << "error: " << config.gold_path.value_or("<stdin>") << ": " << e.what()
        << '\n';
    throw Exit{kExitDataErr};
  }
}

int run_stem(const CliConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const RuleSet rules = load_rules(config, err);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    GraphemeWord word;
    try {
      word = make_word(line);
    } catch (const DecodeError& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kExitDataErr;
    }
    StemResult result;
    if (!word.empty()) {
      result = config.algo == Algorithm::Light ? light_stem(word, rules)
                                               : strip_stem(word, rules);
    }
    out << word.text() << '\t' << result.stem.text() << '\n';
    if (config.trace) {
      for (const auto& step : result.trace) {
        out << "#\t" << step.pass << '\t' << to_string(step.rule.suffix_class)
            << '\t' << step.rule.pattern.text() << '\t'
            << step.rule.replacement.text() << '\t' << step.before.text() << '\t'
            << step.after.text() << '\n';
      }
    }
  }
  return kExitOk;
}

int run_eval(const CliConfig& config, std::istream& in, std::ostream& out,
             std::ostream& err) {
  const RuleSet rules = load_rules(config, err);
  const auto gold = load_gold_input(config, in, err);
  if (gold.empty()) {
    err << "error: gold set is empty\n";
    return kExitDataErr;
  }
  const StemFn stemmer = config.algo == Algorithm::Light ? light_stemmer(rules)
                                                         : strip_stemmer(rules);
  const auto counts = evaluate(stemmer, gold);
  for (const auto& c : counts.conflicts) err << "warning: conflicting gold stems " << c << '\n';
  out << "n_unique\t" << counts.n_unique << '\n'
      << "n_correct\t" << counts.n_correct << '\n'
      << "accuracy\t" << format_accuracy(counts.n_correct, counts.n_unique) << '\n';
  return kExitOk;
}

int run_compare(const CliConfig& config, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const RuleSet rules = load_rules(config, err);
  const auto gold = load_gold_input(config, in, err);
  if (gold.empty()) {
    err << "error: gold set is empty\n";
    return kExitDataErr;
  }
  std::vector<std::size_t> chunks = config.chunk_sizes;
  if (chunks.empty()) chunks.push_back(gold.size());
  EvalReport report;
  try {
    report = compare(gold, chunks, rules);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataErr;
  }
  for (const auto& c : report.conflicts) err << "warning: conflicting gold stems " << c << '\n';
  out << render(report, config.format);
  return kExitOk;
}

int run_rules_validate(const CliConfig& config, std::ostream& out,
                       std::ostream& err) {
  const std::string text =
      config.rules_path ? read_file(*config.rules_path, err) : builtin_rules_text();
  const std::string name = config.rules_path.value_or("<builtin>");
  const auto diagnostics = validate_rules(text);
  bool syntax = false;
  for (const auto& d : diagnostics) {
    const char* kind = d.kind == RuleDiagnosticKind::Syntax        ? "syntax"
                       : d.kind == RuleDiagnosticKind::Conflict    ? "conflict"
                                                                   : "termination";
    out << name << ":" << d.line << ": " << kind << ": " << d.message << '\n';
    syntax = syntax || d.kind == RuleDiagnosticKind::Syntax;
  }
  if (syntax) return kExitDataErr;
  if (!diagnostics.empty()) return kExitRuleConflicts;
  out << name << ": ok, " << parse_rules(text).size() << " rules\n";
  return kExitOk;
}

int run_generate(const CliConfig& config, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      for (const auto& form : generate_forms(make_word(line), config.paradigm)) {
        out << form.surface.text() << '\t' << form.expected_stem.text() << '\n';
      }
    } catch (const Error& e) {
      err << "error: line " << line_no << ": " << e.what() << '\n';
      return kExitDataErr;
    }
  }
  return kExitOk;
}

}  // namespace

std::optional<CliConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  CliConfig config;
  CLI::App app{"Tamil light stemmer and suffix-stripping baseline", "tamilstem"};
  app.require_subcommand(1);

  const std::map<std::string, Algorithm> algos{{"light", Algorithm::Light},
                                               {"strip", Algorithm::Strip}};
  const std::map<std::string, ReportFormat> formats{{"table", ReportFormat::Table},
                                                    {"csv", ReportFormat::Csv},
                                                    {"json", ReportFormat::Json}};
  const std::map<std::string, Paradigm> paradigms{{"noun", Paradigm::Noun},
                                                  {"verb", Paradigm::Verb}};
  std::string rules_path, gold_path;

  auto add_rules = [&](CLI::App* sub) {
    sub->add_option("--rules", rules_path, "Rule file (default: built-in rules)");
  };
  auto add_algo = [&](CLI::App* sub) {
    sub->add_option("--algo", config.algo, "Stemmer: light or strip")
        ->transform(CLI::CheckedTransformer(algos, CLI::ignore_case));
  };
  auto add_gold = [&](CLI::App* sub) {
    sub->add_option("--gold", gold_path, "Gold file (default: stdin)");
  };

  auto* stem = app.add_subcommand("stem", "Stem one word per stdin line");
  add_algo(stem);
  add_rules(stem);
  stem->add_flag("--trace", config.trace, "Print applied rules as # lines");

  auto* eval = app.add_subcommand("eval", "Accuracy of one stemmer on a gold set");
  add_algo(eval);
  add_rules(eval);
  add_gold(eval);

  auto* cmp = app.add_subcommand("compare", "Chunked comparison of both stemmers");
  add_rules(cmp);
  add_gold(cmp);
  cmp->add_option("--format", config.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmp->add_option("--chunks", config.chunk_sizes, "Cumulative chunk sizes, e.g. 200,400")
      ->delimiter(',');

  auto* validate = app.add_subcommand("rules-validate", "Check a rule file");
  add_rules(validate);

  auto* gen = app.add_subcommand("generate", "Inflect roots from stdin into gold pairs");
  gen->add_option("--paradigm", config.paradigm, "noun or verb")
      ->required()
      ->transform(CLI::CheckedTransformer(paradigms, CLI::ignore_case));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    exit_code = kExitUsage;
    return std::nullopt;
  }

  if (stem->parsed()) config.command = Command::Stem;
  if (eval->parsed()) config.command = Command::Eval;
  if (cmp->parsed()) config.command = Command::Compare;
  if (validate->parsed()) config.command = Command::RulesValidate;
  if (gen->parsed()) config.command = Command::Generate;
  if (!rules_path.empty()) config.rules_path = rules_path;
  if (!gold_path.empty()) config.gold_path = gold_path;
  exit_code = kExitOk;
  return config;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Stem: return run_stem(config, in, out, err);
      case Command::Eval: return run_eval(config, in, out, err);
      case Command::Compare: return run_compare(config, in, out, err);
      case Command::RulesValidate: return run_rules_validate(config, out, err);
      case Command::Generate: return run_generate(config, in, out, err);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}

int main(const std::vector<std::string>& args, std::istream& in,
         std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  auto config = parse_args(args, out, err, code);
  if (!config) return code;
  return run(*config, in, out, err);
}

}  // namespace tamilstem::cli
