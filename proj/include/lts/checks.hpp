#pragma once

#include <map>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "lts/propagate.hpp"
#include "lts/reach.hpp"

namespace lts {

struct Witness {
  std::vector<int> pair;  // tracked start pair, when the check has one
  std::string entry;
  std::string expected;
  std::string got;
};

// Exact mode compares rationals for equality; interval mode passes when every
// target is within `tolerance` of the computed enclosure (distance from the
// target to the interval, zero when contained).
struct Verdict {
  std::string check;
  std::string mode;  // "exact" or "interval"
  bool pass = false;
  double tolerance = 0.0;
  double max_interval_width = 0.0;
  std::optional<Witness> witness;
  std::map<std::string, std::string> details;
};

struct CheckOptions {
  double tol = 1e-9;
  int precision_bits = 128;
  int jobs = 0;
};

// every entry of the single-element marginal equals 1/n
Verdict check_strong1(const Network& net, const CheckOptions& opts = {});
// the tracked pair (x, y) lands uniformly on ordered pairs: 1/(n(n-1)) each
Verdict check_pair_uniform(const Network& net, int x, int y, const CheckOptions& opts = {});
// pair uniformity for every ordered start pair
Verdict check_strong2(const Network& net, const CheckOptions& opts = {});
// every start pair splits across the halves of [n] with the divided profile:
// both-low and both-high 1/4 - 1/(4(n-1)), each crossing orientation
// 1/4 + 1/(4(n-1)); details carry the summed-crossing view as well
Verdict check_division(const Network& net, const CheckOptions& opts = {});
// the full distribution over S_n is uniform (exact, n <= 7)
Verdict check_full_uniform(const Network& net, const CheckOptions& opts = {});
// the pair digraph reaches every ordered pair
Verdict check_reachability(const TranspositionSeq& seq);

void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const Verdict& v);

}  // namespace lts
