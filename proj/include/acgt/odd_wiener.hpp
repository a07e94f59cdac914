#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "acgt/bigint.hpp"
#include "acgt/distance.hpp"
#include "acgt/error.hpp"
#include "acgt/families.hpp"

namespace acgt {

// Wiener index of the odd graph O_n, n = 1..17 (OEIS A136328, offset 1).
inline constexpr std::array<std::string_view, 17> kA136328{
    "0",
    "3",
    "75",
    "1435",
    "25515",
    "436821",
    "7339332",
    "121782375",
    "2005392675",
    "32835436777",
    "535550923908",
    "8707954925033",
    "141270179732500",
    "2287544190032700",
    "36988236910737360",
    "597341791692978975",
    "9637351741503033075",
};

inline BigInt a136328_reference(std::size_t n) {
  if (n < 1 || n > kA136328.size())
    throw Error(Errc::invalid_parameter, "reference terms cover n = 1..17");
  return BigInt(std::string(kA136328[n - 1]));
}

// Intersection-array route. O_n is distance-regular with
//   b_m = n - floor(m/2),  c_m = ceil(m/2),  m = 1..n-1,
// so the number of vertices at distance j from a fixed vertex is the
// product of b_r / c_r for r <= j. Halving binom(2n-1, n-1) times that
// gives the Hosoya-Wiener coefficients; the Wiener index is H'(1).
// For n = 1 the array is empty: O_1 is a single vertex and H = 0.
inline HosoyaWienerPolynomial odd_hosoya_wiener(std::int64_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "odd graph requires n >= 1");
  const auto un = static_cast<std::uint64_t>(n);
  const BigRational half_order = BigRational(binomial(2 * un - 1, un - 1)) / 2;
  std::map<std::uint64_t, BigInt> coeffs;
  BigRational layer = 1;
  for (std::uint64_t j = 1; j < un; ++j) {
    BigRational b = BigRational(un - j / 2);
    BigRational c = BigRational((j + 1) / 2);
    layer *= b / c;
    BigRational coeff = half_order * layer;
    if (!is_integer(coeff))
      throw Error(Errc::invalid_parameter, "non-integral Hosoya-Wiener coefficient");
    coeffs.emplace(j, to_integer(coeff));
  }
  return HosoyaWienerPolynomial(std::move(coeffs));
}

inline BigInt odd_wiener_deutsch(std::int64_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "odd_wiener_deutsch requires n >= 1");
  return odd_hosoya_wiener(n).derivative_at_one();
}

// Summation route:
//   D(k) = k * ( sum_{j=0}^{floor(k/2)-1} (2j+1) C(k-1,j)^2 / (j+1)
//              + 2 sum_{j=floor(k/2)}^{k-2} (k-1-j) C(k-1,j)^2 / (j+1) )
//   a(n) = C(2n-1, n-1) * D(n) / 2.
// The first range is the integer range 0..(k/2 - 1), which for odd k stops
// at (k-3)/2.
inline BigInt odd_wiener_mathar(std::int64_t n) {
  if (n < 1) throw Error(Errc::invalid_parameter, "odd_wiener_mathar requires n >= 1");
  const auto k = static_cast<std::uint64_t>(n);
  BigRational inner = 0;
  for (std::uint64_t j = 0; j + 1 <= k / 2; ++j) {
    BigInt c = binomial(k - 1, j);
    inner += BigRational(BigInt(2 * j + 1) * c * c, BigInt(j + 1));
  }
  for (std::uint64_t j = k / 2; j + 2 <= k; ++j) {
    BigInt c = binomial(k - 1, j);
    inner += 2 * BigRational(BigInt(k - 1 - j) * c * c, BigInt(j + 1));
  }
  BigRational a = BigRational(binomial(2 * k - 1, k - 1)) * BigRational(k) * inner / 2;
  if (!is_integer(a)) throw Error(Errc::invalid_parameter, "non-integral A136328 term");
  return to_integer(a);
}

struct SequenceRow {
  std::size_t n = 0;
  BigInt reference;
  BigInt deutsch;
  BigInt mathar;
  std::optional<BigInt> brute;     // absent when skipped
  std::string brute_note;          // "skipped: size" / "skipped: n < 2" / ""
  bool pass = false;
};

struct SequenceReport {
  std::vector<SequenceRow> rows;
  double seconds = 0.0;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return !rows.empty();
  }

  std::size_t passes() const {
    std::size_t k = 0;
    for (const auto& r : rows) k += r.pass ? 1 : 0;
    return k;
  }

  // Aligned "n value status" rows.
  std::string to_table() const {
    std::size_t width = 5;
    for (const auto& r : rows) width = std::max(width, r.reference.str().size());
    std::ostringstream out;
    auto pad = [](std::string s, std::size_t w) {
      return s.size() < w ? std::string(w - s.size(), ' ') + s : s;
    };
    out << pad("n", 3) << "  " << pad("value", width) << "  status\n";
    for (const auto& r : rows) {
      out << pad(std::to_string(r.n), 3) << "  " << pad(r.reference.str(), width) << "  "
          << (r.pass ? "pass" : "FAIL") << " [";
      std::string methods = "deutsch,mathar";
      if (r.brute) methods += ",brute";
      out << methods << "]";
      if (!r.brute_note.empty()) out << " (" << r.brute_note << ")";
      out << "\n";
    }
    return out.str();
  }
};

inline constexpr std::size_t kBruteForceMaxN = 6;

// Compares both closed forms, plus BFS on the explicit O_n for small n,
// against the embedded reference terms. Mismatches are reported, not thrown.
inline SequenceReport verify_a136328(std::int64_t max_n, bool brute_force = true) {
  if (max_n < 1 || max_n > static_cast<std::int64_t>(kA136328.size()))
    throw Error(Errc::invalid_parameter, "max_n must lie in 1..17");
  auto start = std::chrono::steady_clock::now();
  SequenceReport report;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    SequenceRow row;
    row.n = static_cast<std::size_t>(n);
    row.reference = a136328_reference(row.n);
    row.mathar = odd_wiener_mathar(n);
    row.deutsch = odd_wiener_deutsch(n);
    bool ok = row.mathar == row.reference && row.deutsch == row.reference;
    if (n < 2) {
      row.brute_note = "skipped: n < 2";
    } else if (!brute_force) {
      row.brute_note = "skipped: disabled";
    } else if (static_cast<std::size_t>(n) > kBruteForceMaxN) {
      row.brute_note = "skipped: size";
    } else {
      row.brute = wiener(odd_graph(static_cast<std::size_t>(n)));
      ok = ok && *row.brute == row.reference;
    }
    row.pass = ok;
    report.rows.push_back(std::move(row));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace acgt
