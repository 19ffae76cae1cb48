#include "berge/berge.hpp"

#include <algorithm>
#include <unordered_map>

#include "berge/detail/embedder.hpp"
#include "berge/embed.hpp"
#include "berge/error.hpp"
#include "berge/matching.hpp"

namespace berge {
namespace {

// Above this many pattern edges a complete embedding is matched in one
// Hopcroft-Karp pass instead of incrementally.
constexpr std::size_t kIncrementalEdgeLimit = 64;

class CoverCache {
 public:
  explicit CoverCache(const Hypergraph& h) : h_(h), dense_(h.vertex_count() <= 512) {
    if (dense_) {
      const auto n = static_cast<std::size_t>(h.vertex_count());
      lists_.resize(n * n);
      ready_.assign(n * n, 0);
    }
  }

  auto get(int u, int v) -> std::span<const std::uint32_t> {
    if (u > v) std::swap(u, v);
    const std::size_t key = static_cast<std::size_t>(u) * static_cast<std::size_t>(h_.vertex_count()) + v;
    if (dense_) {
      if (!ready_[key]) {
        lists_[key] = h_.covering(u, v);
        ready_[key] = 1;
      }
      return lists_[key];
    }
    auto [it, inserted] = sparse_.try_emplace(key);
    if (inserted) it->second = h_.covering(u, v);
    return it->second;
  }

 private:
  const Hypergraph& h_;
  bool dense_;
  std::vector<std::vector<std::uint32_t>> lists_;
  std::vector<char> ready_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> sparse_;
};

class BergeSearch {
 public:
  BergeSearch(const Hypergraph& h, const Graph& pattern, const EmbeddingPlan& plan, CoverCache& covers)
      : h_(h),
        pattern_(pattern),
        plan_(plan),
        covers_(covers),
        incremental_(pattern.edge_count() <= kIncrementalEdgeLimit),
        sdr_(h.edge_count(), static_cast<int>(pattern.edge_count())),
        snapshots_(static_cast<std::size_t>(plan.size()) + 1,
                   std::vector<int>(pattern.edge_count(), -1)) {}

  /// Restricts pattern edge `edge` to the single hyperedge `index`.
  void force(int edge, std::uint32_t index) {
    forced_edge_ = edge;
    forced_[0] = index;
  }

  /// Keep searching after a witness, one witness per copy.
  void collect_all(const std::vector<VertexMap>* auts) {
    auts_ = auts;
    collect_ = true;
  }

  bool extend(int pos, std::span<const int> map) {
    if (incremental_) sdr_.restore(snapshots_[pos]);
    for (int e : plan_.completed_edges(pos)) {
      const auto cover = cover_of(e, map);
      if (cover.empty()) return false;
      if (incremental_ && !sdr_.insert(e, cover)) return false;
    }
    if (incremental_) snapshots_[pos + 1] = sdr_.assignment();
    return true;
  }

  bool complete(std::span<const int> map) {
    if (collect_ && !is_canonical_copy(map, *auts_)) return true;
    std::vector<int> assignment;
    if (incremental_) {
      assignment = sdr_.assignment();
    } else {
      std::vector<std::vector<std::uint32_t>> adjacency;
      for (std::size_t e = 0; e < pattern_.edge_count(); ++e) {
        auto cover = cover_of(static_cast<int>(e), map);
        adjacency.emplace_back(cover.begin(), cover.end());
      }
      assignment = hopcroft_karp(adjacency, h_.edge_count());
      if (std::find(assignment.begin(), assignment.end(), -1) != assignment.end()) return true;
    }
    BergeWitness w;
    for (int x = 0; x < pattern_.vertex_count(); ++x) w.vertex_map.emplace_back(x, map[x]);
    const auto edges = pattern_.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) w.edge_assignment.emplace_back(edges[e], assignment[e]);
    witnesses_.push_back(std::move(w));
    return collect_;
  }

  auto witnesses() -> std::vector<BergeWitness>& { return witnesses_; }

 private:
  auto cover_of(int e, std::span<const int> map) -> std::span<const std::uint32_t> {
    if (e == forced_edge_) return forced_;
    const Edge pe = pattern_.edges()[e];
    return covers_.get(map[pe.u], map[pe.v]);
  }

  const Hypergraph& h_;
  const Graph& pattern_;
  const EmbeddingPlan& plan_;
  CoverCache& covers_;
  bool incremental_;
  IncrementalSdr sdr_;
  std::vector<std::vector<int>> snapshots_;
  int forced_edge_ = -1;
  std::uint32_t forced_[1] = {0};
  bool collect_ = false;
  const std::vector<VertexMap>* auts_ = nullptr;
  std::vector<BergeWitness> witnesses_;
};

}  // namespace

auto detect_berge(const Hypergraph& h, const Graph& pattern, const DetectOptions& options) -> DetectResult {
  DetectResult result;
  if (pattern.edge_count() > h.edge_count() || pattern.vertex_count() > h.vertex_count()) return result;
  const Graph host = shadow(h);
  EmbeddingPlan plan(pattern);
  CoverCache covers(h);
  BergeSearch search(h, pattern, plan, covers);
  const auto outcome =
      detail::search_embeddings(plan, HostView::of(host), {}, search, options.max_nodes, &result.nodes);
  if (!search.witnesses().empty()) {
    result.status = Detection::Found;
    result.witness = std::move(search.witnesses().front());
  } else {
    result.status = outcome == detail::SearchOutcome::Truncated ? Detection::Truncated : Detection::Free;
  }
  return result;
}

auto contains_berge(const Hypergraph& h, const Graph& pattern) -> std::optional<BergeWitness> {
  return detect_berge(h, pattern).witness;
}

auto contains_berge_using(const Hypergraph& h, const Graph& pattern, std::size_t index)
    -> std::optional<BergeWitness> {
  if (index >= h.edge_count()) throw Error(ErrorCode::InvalidArgument, "hyperedge index out of range");
  const Graph host = shadow(h);
  CoverCache covers(h);
  const auto hyperedge = h.edge(index);
  const auto edges = pattern.edges();
  const auto auts = automorphisms(pattern);

  // One oriented pattern edge per orbit of the automorphism group suffices:
  // composing a witness with an automorphism gives another witness.
  std::vector<std::pair<int, int>> reps;
  std::vector<std::pair<int, int>> covered;
  for (const Edge& e : edges) {
    for (const auto& oriented : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (std::find(covered.begin(), covered.end(), oriented) != covered.end()) continue;
      reps.push_back(oriented);
      for (const auto& sigma : auts) covered.emplace_back(sigma[oriented.first], sigma[oriented.second]);
    }
  }

  for (const auto& [x, y] : reps) {
    const int pinned_vertices[2] = {x, y};
    EmbeddingPlan plan(pattern, pinned_vertices);
    const auto e = static_cast<int>(std::find(edges.begin(), edges.end(), Edge::make(x, y)) - edges.begin());
    BergeSearch search(h, pattern, plan, covers);
    search.force(e, static_cast<std::uint32_t>(index));
    for (int a : hyperedge) {
      for (int b : hyperedge) {
        if (a == b) continue;
        const int images[2] = {a, b};
        detail::search_embeddings(plan, HostView::of(host), images, search);
        if (!search.witnesses().empty()) return std::move(search.witnesses().front());
      }
    }
  }
  return std::nullopt;
}

auto is_berge_f_free(const Hypergraph& h, const Graph& pattern) -> bool { return !contains_berge(h, pattern); }

auto all_berge_witnesses(const Hypergraph& h, const Graph& pattern) -> std::vector<BergeWitness> {
  const Graph host = shadow(h);
  const auto auts = automorphisms(pattern);
  EmbeddingPlan plan(pattern);
  CoverCache covers(h);
  BergeSearch search(h, pattern, plan, covers);
  search.collect_all(&auts);
  detail::search_embeddings(plan, HostView::of(host), {}, search);
  return std::move(search.witnesses());
}

auto check_witness(const Hypergraph& h, const Graph& pattern, const BergeWitness& w) -> bool {
  const int k = pattern.vertex_count();
  if (static_cast<int>(w.vertex_map.size()) != k) return false;
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  for (const auto& [x, v] : w.vertex_map) {
    if (x < 0 || x >= k || image[x] != -1 || v < 0 || v >= h.vertex_count()) return false;
    image[x] = v;
  }
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y)
      if (image[x] == image[y]) return false;

  if (w.edge_assignment.size() != pattern.edge_count()) return false;
  std::vector<Edge> seen_edges;
  std::vector<int> used;
  for (const auto& [e, idx] : w.edge_assignment) {
    if (!pattern.has_edge(e.u, e.v)) return false;
    if (idx < 0 || static_cast<std::size_t>(idx) >= h.edge_count()) return false;
    if (std::find(used.begin(), used.end(), idx) != used.end()) return false;
    if (std::find(seen_edges.begin(), seen_edges.end(), Edge::make(e.u, e.v)) != seen_edges.end()) return false;
    const auto hyperedge = h.edge(static_cast<std::size_t>(idx));
    if (!std::binary_search(hyperedge.begin(), hyperedge.end(), image[e.u]) ||
        !std::binary_search(hyperedge.begin(), hyperedge.end(), image[e.v]))
      return false;
    used.push_back(idx);
    seen_edges.push_back(Edge::make(e.u, e.v));
  }
  return true;
}

auto to_json(const BergeWitness& w) -> nlohmann::json {
  auto vm = nlohmann::json::array();
  for (const auto& [x, v] : w.vertex_map) vm.push_back({x, v});
  auto ea = nlohmann::json::array();
  for (const auto& [e, idx] : w.edge_assignment) ea.push_back({nlohmann::json::array({e.u, e.v}), idx});
  return {{"vertex_map", vm}, {"edge_assignment", ea}};
}

auto witness_from_json(const nlohmann::json& j) -> BergeWitness {
  try {
    BergeWitness w;
    for (const auto& pair : j.at("vertex_map")) w.vertex_map.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    for (const auto& item : j.at("edge_assignment"))
      w.edge_assignment.emplace_back(Edge::make(item.at(0).at(0).get<int>(), item.at(0).at(1).get<int>()),
                                     item.at(1).get<int>());
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedLine, std::string("witness JSON: ") + e.what());
  }
}

}  // namespace berge
