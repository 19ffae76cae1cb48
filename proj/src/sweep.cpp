#include "berge/sweep.hpp"

#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include "berge/catalog.hpp"
#include "berge/constructions.hpp"
#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {
namespace {

template <class T>
auto parse_number(std::string_view s, const char* what) -> T {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

auto format_ratio(double x) -> std::string {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::fixed, 6);
  return std::string(buffer, ptr);
}

auto make_row(const SweepConfig& config, const Graph* pattern, int n, std::uint64_t seed) -> SweepRow {
  SweepRow row;
  row.n = n;
  row.seed = seed;
  row.threshold = floor_sqrt(n);
  try {
    Hypergraph h;
    switch (config.generator) {
      case Generator::Kr:
        if (n % config.r != 0) {
          row.status = "skipped: r does not divide n";
          return row;
        }
        h = kr_construction(n, config.r);
        row.predicted_sum_size = static_cast<std::int64_t>(n) * n / config.r;
        break;
      case Generator::SingleEdge:
        h = single_edge(n);
        row.predicted_sum_size = n;
        break;
      case Generator::Greedy: {
        const int lo = config.s_min.at(n);
        const int hi = config.s_max.at(n);
        if (lo < 2 || lo > hi || hi > n) {
          row.status = "skipped: empty size range [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
          return row;
        }
        h = greedy_maximal(n, *pattern, {lo, hi, seed, config.draws_per_n2}).hypergraph;
        break;
      }
    }
    row.hyperedges = static_cast<std::int64_t>(h.edge_count());
    row.sum_size = power_sum(h, 1);
    row.sum_size_sq = power_sum(h, 2);
    row.sum_size_cube = power_sum(h, 3);
    const WeightReport w = weigh(h, config.weight, row.threshold);
    row.sum_weight = w.total;
    row.weight_below = w.below_threshold;
    row.weight_above = w.above_threshold;
  } catch (const Error& e) {
    row.status = std::string("error: ") + to_string(e.code()) + ": " + e.what();
  }
  return row;
}

}  // namespace

auto SizeBound::parse(std::string_view text) -> SizeBound {
  SizeBound b;
  b.text_ = std::string(text);
  if (text == "n") {
    b.divisor_ = 1;
  } else if (text.starts_with("n/")) {
    b.divisor_ = parse_number<int>(text.substr(2), "size bound divisor");
    if (b.divisor_ < 1) throw Error(ErrorCode::InvalidArgument, "size bound divisor must be positive");
  } else {
    b.constant_ = parse_number<int>(text, "size bound");
  }
  return b;
}

auto SizeBound::at(int n) const -> int { return divisor_ == 0 ? constant_ : n / divisor_; }

auto parse_generator(std::string_view name) -> Generator {
  if (name == "kr") return Generator::Kr;
  if (name == "single" || name == "single_edge") return Generator::SingleEdge;
  if (name == "greedy") return Generator::Greedy;
  throw Error(ErrorCode::InvalidArgument, "unknown generator '" + std::string(name) + "' (kr, single, greedy)");
}

auto generator_name(Generator g) -> std::string_view {
  switch (g) {
    case Generator::Kr: return "kr";
    case Generator::SingleEdge: return "single";
    case Generator::Greedy: return "greedy";
  }
  return "?";
}

void SweepConfig::validate() const {
  if (ns.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one n");
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1]) throw Error(ErrorCode::InvalidArgument, "sweep n values must be strictly increasing");
  if (ns.front() < 1) throw Error(ErrorCode::InvalidArgument, "sweep n values must be positive");
  if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one seed");
  if (generator == Generator::Kr && r < 2) throw Error(ErrorCode::InvalidArgument, "kr sweep needs r >= 2");
  if (threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be positive");
}

auto run_sweep(const SweepConfig& config) -> std::vector<SweepRow> {
  config.validate();
  std::optional<Graph> pattern;
  if (config.generator == Generator::Greedy) pattern = catalog::pattern(config.pattern_spec);

  struct Job {
    int n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n : config.ns)
    for (std::uint64_t seed : config.seeds) jobs.push_back({n, seed});
  std::vector<SweepRow> rows(jobs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      rows[i] = make_row(config, pattern ? &*pattern : nullptr, jobs[i].n, jobs[i].seed);
  };
  const auto workers = static_cast<std::size_t>(config.threads);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(workers, jobs.size()); ++t) pool.emplace_back(worker);
  }
  return rows;
}

auto sweep_csv(const SweepConfig& config, const std::vector<SweepRow>& rows) -> std::string {
  std::ostringstream out;
  out << "n,generator,seed,weight,hyperedges,sum_size,sum_size_sq,sum_weight,sum_size_cube,threshold,"
         "weight_below,weight_above,n_sq,ratio_size,ratio_size_sq,ratio_weight,predicted_sum_size,status\n";
  for (const auto& row : rows) {
    const double n2 = static_cast<double>(row.n_squared());
    out << row.n << ',' << generator_name(config.generator) << ',' << row.seed << ',' << config.weight.describe() << ','
        << row.hyperedges << ',' << row.sum_size << ',' << row.sum_size_sq << ',' << row.sum_weight << ','
        << row.sum_size_cube << ',' << row.threshold << ',' << row.weight_below << ',' << row.weight_above << ','
        << row.n_squared() << ',' << format_ratio(static_cast<double>(row.sum_size) / n2) << ','
        << format_ratio(static_cast<double>(row.sum_size_sq) / n2) << ',' << format_ratio(row.ratio_weight()) << ',';
    if (row.predicted_sum_size) out << *row.predicted_sum_size;
    out << ',' << '"' << row.status << '"' << '\n';
  }
  return out.str();
}

auto parse_int_list(std::string_view text) -> std::vector<int> {
  std::vector<int> out;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    const auto second = text.find(':', colon + 1);
    const int lo = parse_number<int>(text.substr(0, colon), "range start");
    const int hi = parse_number<int>(text.substr(colon + 1, second == std::string_view::npos ? std::string_view::npos : second - colon - 1), "range end");
    const int step = second == std::string_view::npos ? 1 : parse_number<int>(text.substr(second + 1), "range step");
    if (step < 1) throw Error(ErrorCode::InvalidArgument, "range step must be positive");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_number<int>(text.substr(0, comma), "integer"));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

auto parse_seed_list(std::string_view text) -> std::vector<std::uint64_t> {
  std::vector<std::uint64_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_number<std::uint64_t>(text.substr(0, comma), "seed"));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

auto floor_sqrt(std::int64_t x) -> std::int64_t {
  if (x < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative number");
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

auto ceil_sqrt(std::int64_t x) -> std::int64_t {
  const std::int64_t r = floor_sqrt(x);
  return r * r == x ? r : r + 1;
}

}  // namespace berge
