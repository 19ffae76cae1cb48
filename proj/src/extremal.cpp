#include "berge/extremal.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "berge/berge.hpp"
#include "berge/embed.hpp"
#include "berge/error.hpp"
#include "berge/graph_enum.hpp"
#include "berge/io.hpp"

namespace berge {
namespace {

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point start) -> double {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

auto mask_vertices(std::uint32_t mask) -> std::vector<int> {
  std::vector<int> out;
  for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

class HyperSearch {
 public:
  HyperSearch(int n, const Graph& pattern, const WeightFunction& w, const HyperSearchOptions& options, int cap)
      : n_(n), pattern_(pattern), options_(options), cap_(cap), current_(n) {
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      const int size = std::popcount(mask);
      if (size < options.s_min || size > options.s_max) continue;
      masks_.push_back(mask);
      weights_.push_back(w(size));
    }
    index_of_.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < masks_.size(); ++i) index_of_[masks_[i]] = static_cast<int>(i);

    suffix_.assign(masks_.size() + 1, 0);
    for (std::size_t i = masks_.size(); i-- > 0;)
      suffix_[i] = checked_add(suffix_[i + 1], checked_mul(weights_[i], cap_));

    // block_[i] = largest k such that candidates 0..i-1 are exactly the
    // subsets of {0..k-1}; the prefix may then be tested against Sym(k).
    block_.assign(masks_.size() + 1, 0);
    for (int k = 1; k <= n; ++k) {
      const auto end = static_cast<std::size_t>(
          std::lower_bound(masks_.begin(), masks_.end(), 1U << k) - masks_.begin());
      block_[end] = k;
    }
    if (options.isomorph_rejection && n <= 8) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int k = 2; k <= n; ++k) {
        auto& list = perms_[k];
        perm.resize(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) list.push_back(perm);
      }
    }
    multiplicity_.assign(masks_.size(), 0);
  }

  void run() { descend(0, 0); }

  std::int64_t best = -1;
  std::vector<int> best_multiplicity;
  std::uint64_t nodes = 0;
  bool truncated = false;

 private:
  auto descend(std::size_t i, std::int64_t weight) -> bool {
    if (options_.max_nodes != 0 && nodes >= options_.max_nodes) {
      truncated = true;
      return false;
    }
    ++nodes;
    if (weight + suffix_[i] <= best) return true;
    if (block_[i] >= 2 && !perms_[block_[i]].empty() && !prefix_canonical(i, block_[i])) return true;
    if (i == masks_.size()) {
      best = weight;
      best_multiplicity = multiplicity_;
      return true;
    }

    const Hypergraph base = current_;
    const auto vertices = mask_vertices(masks_[i]);
    int feasible = 0;
    std::vector<Hypergraph> states;
    states.push_back(base);
    for (int k = 1; k <= cap_; ++k) {
      Hypergraph next = states.back().with_edge(vertices);
      if (contains_berge_using(next, pattern_, next.edge_count() - 1)) break;
      states.push_back(std::move(next));
      feasible = k;
    }
    for (int k = feasible; k >= 0; --k) {
      current_ = states[static_cast<std::size_t>(k)];
      multiplicity_[i] = k;
      if (!descend(i + 1, weight + weights_[i] * k)) return false;
    }
    multiplicity_[i] = 0;
    current_ = base;
    return true;
  }

  // Lexicographically maximal multiplicity vector among its images under
  // permutations of {0..k-1}; candidates 0..end-1 are the subsets of that set.
  auto prefix_canonical(std::size_t end, int k) -> bool {
    std::vector<int> image(end);
    for (const auto& perm : perms_[k]) {
      std::fill(image.begin(), image.end(), 0);
      for (std::size_t j = 0; j < end; ++j) {
        if (multiplicity_[j] == 0) continue;
        std::uint32_t mapped = 0;
        for (std::uint32_t bits = masks_[j]; bits != 0; bits &= bits - 1)
          mapped |= 1U << perm[static_cast<std::size_t>(std::countr_zero(bits))];
        image[static_cast<std::size_t>(index_of_[mapped])] = multiplicity_[j];
      }
      for (std::size_t j = 0; j < end; ++j) {
        if (image[j] > multiplicity_[j]) return false;
        if (image[j] < multiplicity_[j]) break;
      }
    }
    return true;
  }

  int n_;
  const Graph& pattern_;
  const HyperSearchOptions& options_;
  int cap_;
  Hypergraph current_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int64_t> weights_;
  std::vector<int> index_of_;
  std::vector<std::int64_t> suffix_;
  std::vector<int> block_;
  std::vector<std::vector<int>> perms_[9];
  std::vector<int> multiplicity_;

 public:
  auto witness() const -> Hypergraph {
    std::vector<std::vector<int>> edges;
    for (std::size_t i = 0; i < masks_.size(); ++i)
      for (int k = 0; k < best_multiplicity[i]; ++k) edges.push_back(mask_vertices(masks_[i]));
    return Hypergraph(n_, std::move(edges));
  }
};

auto best_on_level(const OrderlyGraphSearch& search) -> const SmallGraph* {
  const SmallGraph* best = nullptr;
  for (const auto& g : search.classes())
    if (best == nullptr || g.edge_count() > best->edge_count()) best = &g;
  return best;
}

void require_pattern_edges(const Graph& pattern) {
  if (pattern.edge_count() == 0)
    throw Error(ErrorCode::InvalidArgument, "ex(n, F) needs a pattern with at least one edge");
}

}  // namespace

auto to_json(const SearchReport& report) -> nlohmann::json {
  nlohmann::json j{{"optimum", report.optimum},
                   {"exhaustive", report.exhaustive},
                   {"optimum_is_lower_bound", !report.exhaustive},
                   {"nodes_explored", report.nodes_explored},
                   {"wall_time_seconds", report.wall_seconds}};
  if (const auto* h = std::get_if<Hypergraph>(&report.witness)) {
    j["witness_kind"] = "hypergraph";
    j["witness"] = format_hypergraph(*h);
  } else {
    j["witness_kind"] = "graph";
    j["witness"] = format_graph(std::get<Graph>(report.witness));
  }
  return j;
}

auto max_weight_berge_free(int n, const Graph& pattern, const WeightFunction& w, const HyperSearchOptions& options)
    -> SearchReport {
  const auto start = Clock::now();
  if (n < 1 || n > options.max_vertices || n > 20)
    throw Error(ErrorCode::ExceedsCap, "max_weight_berge_free supports 1 <= n <= " + std::to_string(options.max_vertices));
  if (options.s_min < 2 || options.s_min > options.s_max || options.s_max > n)
    throw Error(ErrorCode::InvalidArgument, "hyperedge sizes need 2 <= s_min <= s_max <= n");
  if (contains_berge(Hypergraph(n), pattern))
    throw Error(ErrorCode::InvalidArgument, "every hypergraph on " + std::to_string(n) +
                                                " vertices contains this pattern; no Berge-F-free hypergraph exists");
  int cap = options.set_semantics ? 1 : options.multiplicity_cap.value_or(static_cast<int>(pattern.edge_count()) - 1);
  cap = std::max(cap, 0);

  HyperSearch search(n, pattern, w, options, cap);
  search.run();
  SearchReport report;
  report.nodes_explored = search.nodes;
  report.exhaustive = !search.truncated;
  if (search.best < 0) {
    report.optimum = 0;
    report.witness = Hypergraph(n);
  } else {
    report.optimum = search.best;
    report.witness = search.witness();
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

auto max_f_free_edges(int n, const Graph& pattern, const GraphSearchOptions& options) -> SearchReport {
  const auto start = Clock::now();
  require_pattern_edges(pattern);
  if (n < 0 || n > options.max_vertices || n > OrderlyGraphSearch::kMaxVertices)
    throw Error(ErrorCode::ExceedsCap, "max_f_free_edges supports 0 <= n <= " + std::to_string(options.max_vertices));
  OrderlyGraphSearch search({&pattern, nullptr, options.max_nodes});
  bool complete = true;
  while (search.vertex_count() < n) {
    if (!search.advance()) {
      complete = false;
      break;
    }
  }
  SearchReport report;
  report.nodes_explored = search.nodes();
  report.exhaustive = complete;
  const SmallGraph* best = best_on_level(search);
  Graph witness = best->to_graph();
  if (!complete) {
    // Pad the deepest finished level with isolated vertices when that stays F-free.
    std::vector<Edge> edges(witness.edges().begin(), witness.edges().end());
    Graph padded(n, std::move(edges));
    witness = find_copy(padded, pattern) ? Graph(n) : padded;
  }
  report.optimum = static_cast<std::int64_t>(witness.edge_count());
  report.witness = std::move(witness);
  report.wall_seconds = seconds_since(start);
  return report;
}

auto verify_extremal_margin(const Graph& pattern, int n_min, int n_max, const GraphSearchOptions& options)
    -> std::vector<MarginRow> {
  require_pattern_edges(pattern);
  if (n_min < pattern.vertex_count())
    throw Error(ErrorCode::PreconditionViolated, "the margin check needs n >= |V(F)| = " + std::to_string(pattern.vertex_count()));
  if (n_max > options.max_vertices)
    throw Error(ErrorCode::ExceedsCap, "max_f_free_edges supports n <= " + std::to_string(options.max_vertices));
  OrderlyGraphSearch search({&pattern, nullptr, options.max_nodes});
  std::vector<MarginRow> rows;
  while (search.vertex_count() < n_max) {
    if (!search.advance())
      throw Error(ErrorCode::BudgetExhausted, "ex(n, F) search ran out of budget at n=" + std::to_string(search.vertex_count() + 1));
    const int n = search.vertex_count();
    if (n < n_min) continue;
    MarginRow row;
    row.n = n;
    row.ex = best_on_level(search)->edge_count();
    row.pairs = binomial2(n);
    row.ratio = row.pairs == 0 ? 0.0 : static_cast<double>(row.ex) / static_cast<double>(row.pairs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace berge
