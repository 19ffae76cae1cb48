#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace berge {

/**
 * Weight of a hyperedge as a function of its size m >= 1. Values are exact
 * non-negative 64-bit integers; arithmetic overflow and negative results are
 * reported as errors rather than wrapped or clamped.
 *
 * Text form (CLI and config files):
 *   size            w(m) = m
 *   size2           w(m) = m^2
 *   size-minus:C    w(m) = max(m - C, 0)
 *   table:1=0,2=1   explicit values; sizes not listed are undefined
 *   expr:<formula>  integer formula in m with + - * / % ^, min, max, sqrt, log2
 */
class WeightFunction {
 public:
  enum class Kind { Size, SizeSquared, SizeMinusC, Table, Custom };

  static auto size() -> WeightFunction;
  static auto size_squared() -> WeightFunction;
  static auto size_minus(std::int64_t c) -> WeightFunction;
  static auto table(std::vector<std::pair<int, std::int64_t>> values) -> WeightFunction;
  static auto custom(std::string_view expression) -> WeightFunction;
  static auto parse(std::string_view spec) -> WeightFunction;

  auto operator()(int m) const -> std::int64_t;
  auto kind() const -> Kind { return kind_; }
  auto describe() const -> std::string;

  /// True when w(m+1) > w(m) is guaranteed for all m (Size, SizeSquared).
  auto strictly_increasing() const -> bool { return kind_ == Kind::Size || kind_ == Kind::SizeSquared; }

  struct Expr;

 private:
  Kind kind_ = Kind::Size;
  std::int64_t offset_ = 0;
  std::vector<std::pair<int, std::int64_t>> table_;
  std::string source_;
  std::shared_ptr<const Expr> expr_;
};

}  // namespace berge
