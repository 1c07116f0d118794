#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace leafcoh {

/// Half-integer weight m, stored as the integer 2m so that all arithmetic is exact.
struct Weight {
  int twice = 0;

  constexpr Weight() = default;
  constexpr explicit Weight(int twice_m) : twice(twice_m) {}

  static constexpr Weight integral(int m) { return Weight(2 * m); }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integral() const { return twice % 2 == 0; }

  constexpr Weight shifted(int steps) const { return Weight(twice + 2 * steps); }
  constexpr Weight next() const { return shifted(1); }
  constexpr Weight prev() const { return shifted(-1); }

  /// m(m+1) and m(m-1), exact in double for any |2m| < 2^26.
  constexpr double m_m_plus_1() const { return 0.25 * double(twice) * double(twice + 2); }
  constexpr double m_m_minus_1() const { return 0.25 * double(twice) * double(twice - 2); }

  friend constexpr auto operator<=>(Weight, Weight) = default;
  friend constexpr bool operator==(Weight, Weight) = default;
};

std::string to_string(Weight m);

/// Closed interval of weights [lo, hi] walked in unit steps from lo.
struct WeightInterval {
  Weight lo;
  Weight hi;

  constexpr bool contains(Weight m) const {
    return lo <= m && m <= hi && (m.twice - lo.twice) % 2 == 0;
  }
  /// Number of weights lo, lo+1, ..., <= hi.
  constexpr int count() const { return hi < lo ? 0 : (hi.twice - lo.twice) / 2 + 1; }

  friend constexpr bool operator==(const WeightInterval&, const WeightInterval&) = default;
};

}  // namespace leafcoh
