#pragma once

// Experiment sweeps: generate one hypergraph per (n, seed), measure the weight
// sums and emit one CSV row each. Output depends only on the configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"
#include "berge/weight.hpp"

namespace berge {

/// Size bound that may depend on n: "7", "n", or "n/4" (floor).
class SizeBound {
 public:
  static auto parse(std::string_view text) -> SizeBound;
  auto at(int n) const -> int;
  auto text() const -> const std::string& { return text_; }

 private:
  std::string text_;
  int constant_ = 0;
  int divisor_ = 0;  // 0: constant
};

enum class Generator { Kr, SingleEdge, Greedy };

auto parse_generator(std::string_view name) -> Generator;
auto generator_name(Generator g) -> std::string_view;

struct SweepConfig {
  Generator generator = Generator::Kr;
  int r = 3;                      // kr
  std::string pattern_spec = "K3";  // greedy
  WeightFunction weight = WeightFunction::size();
  SizeBound s_min = SizeBound::parse("2");
  SizeBound s_max = SizeBound::parse("2");
  std::vector<int> ns;
  std::vector<std::uint64_t> seeds{1};
  int draws_per_n2 = 10;
  int threads = 1;

  /// Throws on an empty or non-increasing n list or an empty seed list.
  void validate() const;
};

struct SweepRow {
  int n = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";
  std::int64_t hyperedges = 0;
  std::int64_t sum_size = 0;
  std::int64_t sum_size_sq = 0;
  std::int64_t sum_size_cube = 0;
  std::int64_t sum_weight = 0;
  std::int64_t threshold = 0;  // floor(sqrt(n)): |h| <= sqrt(n) iff |h| <= threshold
  std::int64_t weight_below = 0;
  std::int64_t weight_above = 0;
  std::optional<std::int64_t> predicted_sum_size;

  auto n_squared() const -> std::int64_t { return static_cast<std::int64_t>(n) * n; }
  auto ratio_weight() const -> double { return static_cast<double>(sum_weight) / static_cast<double>(n_squared()); }
};

auto run_sweep(const SweepConfig& config) -> std::vector<SweepRow>;
auto sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) -> std::string;

/// Parses "6,12,18" or "20:60:10" (inclusive range with step).
auto parse_int_list(std::string_view text) -> std::vector<int>;
auto parse_seed_list(std::string_view text) -> std::vector<std::uint64_t>;

auto floor_sqrt(std::int64_t x) -> std::int64_t;
auto ceil_sqrt(std::int64_t x) -> std::int64_t;

}  // namespace berge
