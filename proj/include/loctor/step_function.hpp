#pragma once

// Integer-valued step functions on the unit circle with rational-angle
// breakpoints.  Angles are rational turn counts in [0,1) ("u/n" means the
// point exp(2*pi*i*u/n)).  Arcs are indexed by the breakpoint they end at:
// arc i is the open arc from breakpoints[i-1] to breakpoints[i], and arc 0
// wraps through angle 0 from the last breakpoint to the first; with no
// breakpoints there is a single arc covering the whole circle.

#include <loctor/numeric.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctor {

struct Angle {
  Rat turns;  // canonical in [0,1)

  Angle() : turns(0) {}
  explicit Angle(const Rat& t) : turns(mod1(t)) {}
  static Angle parse(const std::string& s) { return Angle(parse_rat(s)); }

  std::string str() const { return format_rat(turns); }
  friend bool operator==(const Angle& a, const Angle& b) {
    return a.turns == b.turns;
  }
  friend bool operator<(const Angle& a, const Angle& b) {
    return a.turns < b.turns;
  }
};

struct StepFunction {
  std::vector<Angle> breakpoints;  // sorted, distinct
  std::vector<int> arc_values;     // size max(1, #breakpoints)
  std::vector<int> point_values;   // size #breakpoints

  int value_on_arc(size_t i) const { return arc_values[i]; }

  /// Value at an exact angle (breakpoints get their point value).
  int value_at(const Angle& w) const {
    if (breakpoints.empty()) return arc_values[0];
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), w);
    if (it != breakpoints.end() && *it == w)
      return point_values[static_cast<size_t>(it - breakpoints.begin())];
    size_t idx = static_cast<size_t>(it - breakpoints.begin());
    return arc_values[idx % breakpoints.size()];
  }

  /// Value on the open arc containing a non-breakpoint angle given as a
  /// double (used by sampling tests; callers keep away from breakpoints).
  int value_near(double w) const {
    if (breakpoints.empty()) return arc_values[0];
    size_t idx = 0;
    while (idx < breakpoints.size() &&
           static_cast<double>(breakpoints[idx].turns) < w)
      ++idx;
    return arc_values[idx % breakpoints.size()];
  }

  /// Normalized total integral (circle measure 1); breakpoints carry none.
  Rat integral() const {
    if (breakpoints.empty()) return Rat(arc_values[0]);
    Rat total = 0;
    size_t m = breakpoints.size();
    for (size_t i = 0; i < m; ++i) {
      Rat len = i == 0 ? Rat(breakpoints[0].turns + 1 - breakpoints[m - 1].turns)
                       : Rat(breakpoints[i].turns - breakpoints[i - 1].turns);
      total += Rat(arc_values[i]) * len;
    }
    return total;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    auto bps = nlohmann::ordered_json::array();
    for (const auto& b : breakpoints) bps.push_back(b.str());
    j["breakpoints"] = std::move(bps);
    j["arc_values"] = arc_values;
    j["point_values"] = point_values;
    return j;
  }
};

}  // namespace loctor
