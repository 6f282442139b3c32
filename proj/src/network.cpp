#include "lts/network.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace lts {

LazySwap::LazySwap(int a_, int b_, ProbScalar p_) : a(a_), b(b_), p(std::move(p_)) {
  if (a == b) throw std::invalid_argument("swap: positions must differ");
  if (a < 1 || b < 1) throw std::invalid_argument("swap: positions are 1-based");
  if (a > b) std::swap(a, b);
  if (!p.in_unit()) throw std::invalid_argument("swap: probability outside [0, 1]");
}

Network::Network(int n_, std::vector<LazySwap> swaps_) : n(n_), swaps(std::move(swaps_)) {
  if (n < 1) throw std::invalid_argument("network: ground set must be nonempty");
  for (const auto& s : swaps)
    if (s.b > n) throw std::invalid_argument("network: swap position exceeds ground set");
}

bool Network::is_rational() const {
  return std::all_of(swaps.begin(), swaps.end(),
                     [](const LazySwap& s) { return s.p.is_rational(); });
}

TranspositionSeq::TranspositionSeq(int n_, std::vector<std::pair<int, int>> swaps_)
    : n(n_), swaps(std::move(swaps_)) {
  if (n < 1) throw std::invalid_argument("sequence: ground set must be nonempty");
  for (auto& [a, b] : swaps) {
    if (a == b) throw std::invalid_argument("sequence: positions must differ");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw std::invalid_argument("sequence: position out of range");
  }
}

Network reverse_network(const Network& net) {
  Network out = net;
  std::reverse(out.swaps.begin(), out.swaps.end());
  return out;
}

Network relabel(const Network& net, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != net.n)
    throw std::invalid_argument("relabel: map size must equal ground set size");
  std::vector<bool> hit(net.n, false);
  for (int v : perm) {
    if (v < 1 || v > net.n || hit[v - 1])
      throw std::invalid_argument("relabel: map is not a bijection on [n]");
    hit[v - 1] = true;
  }
  std::vector<LazySwap> swaps;
  swaps.reserve(net.swaps.size());
  for (const auto& s : net.swaps) swaps.emplace_back(perm[s.a - 1], perm[s.b - 1], s.p);
  return Network(net.n, std::move(swaps));
}

Network concat(const Network& x, const Network& y) {
  if (x.n != y.n)
    throw std::invalid_argument("concat: ground sets differ; embed or relabel first");
  std::vector<LazySwap> swaps = x.swaps;
  swaps.insert(swaps.end(), y.swaps.begin(), y.swaps.end());
  return Network(x.n, std::move(swaps));
}

Network embed(const Network& net, int m) {
  if (m < net.n) throw std::invalid_argument("embed: target ground set is smaller");
  return Network(m, net.swaps);
}

static constexpr const char* kConvention = "execution-order";

void to_json(nlohmann::json& j, const Network& net) {
  nlohmann::json swaps = nlohmann::json::array();
  for (const auto& s : net.swaps) swaps.push_back({{"a", s.a}, {"b", s.b}, {"p", s.p}});
  j = nlohmann::json{{"convention", kConvention}, {"n", net.n}, {"swaps", std::move(swaps)}};
}

void from_json(const nlohmann::json& j, Network& net) {
  if (!j.contains("convention") || j.at("convention").get<std::string>() != kConvention)
    throw std::invalid_argument("network: missing or unknown convention field");
  const int n = j.at("n").get<int>();
  std::vector<LazySwap> swaps;
  for (const auto& js : j.at("swaps"))
    swaps.emplace_back(js.at("a").get<int>(), js.at("b").get<int>(), js.at("p").get<ProbScalar>());
  net = Network(n, std::move(swaps));
}

void to_json(nlohmann::json& j, const TranspositionSeq& seq) {
  nlohmann::json swaps = nlohmann::json::array();
  for (const auto& [a, b] : seq.swaps) swaps.push_back({a, b});
  j = nlohmann::json{{"n", seq.n}, {"swaps", std::move(swaps)}};
}

void from_json(const nlohmann::json& j, TranspositionSeq& seq) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> swaps;
  for (const auto& js : j.at("swaps")) {
    if (!js.is_array() || js.size() != 2)
      throw std::invalid_argument("sequence: each swap must be a pair");
    swaps.emplace_back(js[0].get<int>(), js[1].get<int>());
  }
  seq = TranspositionSeq(n, std::move(swaps));
}

std::string encode(const Network& net) {
  nlohmann::json j = net;
  return j.dump(2) + "\n";
}

Network decode_network(const std::string& bytes) {
  return nlohmann::json::parse(bytes).get<Network>();
}

std::string encode(const TranspositionSeq& seq) {
  nlohmann::json j = seq;
  return j.dump(2) + "\n";
}

TranspositionSeq decode_seq(const std::string& bytes) {
  return nlohmann::json::parse(bytes).get<TranspositionSeq>();
}

}  // namespace lts
