#include <doctest.h>

#include <sstream>

#include "berge/error.hpp"
#include "berge/sweep.hpp"

using namespace berge;

namespace {

auto column(const std::string& csv, const std::string& name) -> std::vector<std::string> {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    for (std::string cell; std::getline(h, cell, ',');) header.push_back(cell);
  }
  const auto at = std::find(header.begin(), header.end(), name) - header.begin();
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    for (long i = 0; i <= at; ++i) std::getline(row, cell, ',');
    out.push_back(cell);
  }
  return out;
}

}  // namespace

TEST_CASE("kr sweep") {
  SweepConfig c;
  c.generator = Generator::Kr;
  c.r = 3;
  c.ns = {6, 12, 18};
  const auto csv = sweep_csv(c, run_sweep(c));
  CHECK(column(csv, "sum_size") == std::vector<std::string>{"12", "48", "108"});
  CHECK(column(csv, "predicted_sum_size") == std::vector<std::string>{"12", "48", "108"});
  CHECK(column(csv, "n_sq") == std::vector<std::string>{"36", "144", "324"});
  CHECK(column(csv, "ratio_size") == std::vector<std::string>{"0.333333", "0.333333", "0.333333"});
}

TEST_CASE("single edge sweep") {
  SweepConfig c;
  c.generator = Generator::SingleEdge;
  c.weight = WeightFunction::size_squared();
  c.ns = {3, 5, 10};
  const auto rows = run_sweep(c);
  for (const auto& row : rows) {
    CHECK(row.sum_weight == row.n_squared());
    CHECK(row.ratio_weight() == doctest::Approx(1.0));
    CHECK(row.weight_below + row.weight_above == row.sum_weight);
  }
  CHECK(column(sweep_csv(c, rows), "ratio_weight") == std::vector<std::string>{"1.000000", "1.000000", "1.000000"});
}

TEST_CASE("greedy sweep rows and reproducibility") {
  SweepConfig c;
  c.generator = Generator::Greedy;
  c.pattern_spec = "K3";
  c.s_min = SizeBound::parse("5");
  c.s_max = SizeBound::parse("n/4");
  c.ns = {12, 20, 24};
  c.seeds = {1, 2};
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].status.starts_with("skipped"));
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i].status == "ok");
    CHECK(rows[i].ratio_weight() < 1.0 / 3.0);
  }
  c.threads = 3;
  CHECK(sweep_csv(c, run_sweep(c)) == sweep_csv(c, rows));
}

TEST_CASE("kr rows where r does not divide n are marked") {
  SweepConfig c;
  c.ns = {6, 7};
  const auto rows = run_sweep(c);
  CHECK(rows[0].status == "ok");
  CHECK(rows[1].status.starts_with("skipped"));
}

TEST_CASE("config validation and parsing") {
  SweepConfig c;
  CHECK_THROWS_AS(run_sweep(c), Error);
  c.ns = {6, 6};
  CHECK_THROWS_AS(run_sweep(c), Error);
  c.ns = {6};
  c.seeds = {};
  CHECK_THROWS_AS(run_sweep(c), Error);
  CHECK(parse_int_list("20:60:10") == std::vector<int>{20, 30, 40, 50, 60});
  CHECK(parse_int_list("6,12") == std::vector<int>{6, 12});
  CHECK(parse_seed_list("3,9") == std::vector<std::uint64_t>{3, 9});
  CHECK_THROWS_AS(parse_int_list("6,x"), Error);
  CHECK(SizeBound::parse("n/4").at(30) == 7);
  CHECK(SizeBound::parse("n").at(30) == 30);
  CHECK(SizeBound::parse("5").at(30) == 5);
  CHECK_THROWS_AS(SizeBound::parse("n/0"), Error);
  CHECK(floor_sqrt(24) == 4);
  CHECK(floor_sqrt(25) == 5);
  CHECK(ceil_sqrt(24) == 5);
  CHECK(ceil_sqrt(25) == 5);
}
