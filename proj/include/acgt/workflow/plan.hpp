#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>

#include "acgt/bigint.hpp"
#include "acgt/error.hpp"

namespace acgt::workflow {

inline constexpr std::size_t kProblemTypes = 5;  // a..e
inline constexpr std::size_t kGroups = 3;

using GroupShares = std::array<BigRational, kGroups>;
// rows: groups 1..3, columns: problem types a..e; each row sums to 1
using PropensityMatrix = std::array<std::array<BigRational, kProblemTypes>, kGroups>;

inline PropensityMatrix default_propensity() {
  auto pct = [](int p) { return BigRational(p, 100); };
  return {{{pct(10), pct(25), pct(25), pct(20), pct(20)},
           {pct(30), pct(25), pct(25), pct(10), pct(10)},
           {pct(60), pct(15), pct(15), pct(5), pct(5)}}};
}

struct ExercisePlan {
  std::uint64_t total = 0;
  std::array<std::uint64_t, kProblemTypes> counts{};

  friend bool operator==(const ExercisePlan&, const ExercisePlan&) = default;

  std::string to_table() const {
    std::ostringstream out;
    out << "type  count\n";
    for (std::size_t t = 0; t < kProblemTypes; ++t)
      out << std::setw(4) << static_cast<char>('a' + t) << std::setw(7) << counts[t] << "\n";
    out << "total" << std::setw(6) << total << "\n";
    return out.str();
  }
};

inline BigInt floor_of(const BigRational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

// Raw share of type t is total * sum_g pct(g) M[g][t]. Counts come from
// largest-remainder rounding (remainder desc, then floor asc, then type
// order). For total >= 5 every type gets at least one exercise: each unit
// needed is taken from the type with count >= 2 whose count most exceeds
// its raw share (ties to the later type).
inline ExercisePlan plan_exercises(const GroupShares& shares, std::uint64_t total,
                                   const PropensityMatrix& m = default_propensity()) {
  BigRational sum = 0;
  for (const auto& s : shares) {
    if (s < 0) throw Error(Errc::invalid_percentages, "group percentages must be nonnegative");
    sum += s;
  }
  if (sum != 1) throw Error(Errc::invalid_percentages, "group percentages must sum to 1");
  if (total < 1) throw Error(Errc::invalid_parameter, "total must be at least 1");

  std::array<BigRational, kProblemTypes> raw;
  std::array<BigRational, kProblemTypes> rem;
  ExercisePlan plan{total, {}};
  std::uint64_t assigned = 0;
  for (std::size_t t = 0; t < kProblemTypes; ++t) {
    BigRational share = 0;
    for (std::size_t g = 0; g < kGroups; ++g) share += shares[g] * m[g][t];
    raw[t] = share * total;
    auto fl = floor_of(raw[t]);
    plan.counts[t] = static_cast<std::uint64_t>(fl);
    rem[t] = raw[t] - BigRational(fl);
    assigned += plan.counts[t];
  }
  std::array<std::size_t, kProblemTypes> order;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rem[a] != rem[b]) return rem[a] > rem[b];
    if (plan.counts[a] != plan.counts[b]) return plan.counts[a] < plan.counts[b];
    return a < b;
  });
  for (std::size_t i = 0; assigned < total; ++i, ++assigned) ++plan.counts[order[i % kProblemTypes]];

  if (total >= kProblemTypes) {
    for (std::size_t z = 0; z < kProblemTypes; ++z) {
      if (plan.counts[z] != 0) continue;
      std::size_t donor = kProblemTypes;
      BigRational best;
      for (std::size_t t = 0; t < kProblemTypes; ++t) {
        if (plan.counts[t] < 2) continue;
        BigRational surplus = BigRational(plan.counts[t]) - raw[t];
        if (donor == kProblemTypes || surplus >= best) {
          donor = t;
          best = surplus;
        }
      }
      --plan.counts[donor];
      plan.counts[z] = 1;
    }
  }
  return plan;
}

// "0.2,0.3,0.5", "1/5,3/10,1/2" or percentages "20,30,50" (a sum of 100
// is read as percent).
inline GroupShares parse_group_shares(std::string_view text) {
  GroupShares out;
  std::size_t i = 0;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto part = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (i == kGroups) throw Error(Errc::invalid_percentages, "expected three group shares");
    out[i++] = parse_rational(part);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (i != kGroups) throw Error(Errc::invalid_percentages, "expected three group shares");
  if (out[0] + out[1] + out[2] == 100)
    for (auto& s : out) s /= 100;
  return out;
}

}  // namespace acgt::workflow
