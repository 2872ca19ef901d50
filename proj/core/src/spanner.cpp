#include "pairspan/spanner.hpp"

#include <algorithm>
#include <cmath>

namespace pairspan {

double ladder_gamma(int n, double beta, int k) {
  return static_cast<double>(
      powl(3.0L * static_cast<long double>(real_npow(n, 1.0 - beta)),
           1.0L / static_cast<long double>(k)));
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::subsetwise: return "subsetwise";
    case Construction::sourcewise: return "sourcewise";
    case Construction::pairwise_near: return "pairwise-near";
    case Construction::pairwise_pure: return "pairwise-pure";
    case Construction::mult: return "mult";
    case Construction::preserver: return "preserver";
  }
  return "?";
}

std::optional<Construction> construction_from_string(const std::string& name) {
  static const std::pair<const char*, Construction> table[] = {
      {"subsetwise", Construction::subsetwise},
      {"sourcewise", Construction::sourcewise},
      {"pairwise-near", Construction::pairwise_near},
      {"pairwise-pure", Construction::pairwise_pure},
      {"mult", Construction::mult},
      {"preserver", Construction::preserver},
  };
  for (const auto& [key, value] : table)
    if (name == key) return value;
  return std::nullopt;
}

int BuyLedger::max_contribution() const {
  int best = 0;
  for (const auto& [key, count] : contributions) best = std::max(best, count);
  return best;
}

int BuyLedger::max_contribution_low32() const {
  std::unordered_map<std::uint32_t, int> totals;
  for (const auto& [key, count] : contributions)
    totals[static_cast<std::uint32_t>(key & 0xffffffffu)] += count;
  int best = 0;
  for (const auto& [key, count] : totals) best = std::max(best, count);
  return best;
}

}  // namespace pairspan
