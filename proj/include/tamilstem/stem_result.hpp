#pragma once

#include <cstddef>
#include <vector>

#include "tamilstem/rules.hpp"
#include "tamilstem/script.hpp"

namespace tamilstem {

struct TraceStep {
  SuffixRule rule;
  GraphemeWord before;
  GraphemeWord after;
  std::size_t pass = 0;  // light stemmer pass index; always 0 for strip
};

struct StemResult {
  GraphemeWord stem;
  std::vector<TraceStep> trace;
};

}  // namespace tamilstem
