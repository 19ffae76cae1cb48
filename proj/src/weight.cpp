#include "berge/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

struct WeightFunction::Expr {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Mod, Pow, Neg, Min, Max, Sqrt, Log2 };
  Op op = Op::Const;
  std::int64_t value = 0;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

namespace {

using Expr = WeightFunction::Expr;
using Op = Expr::Op;

auto node(Op op, std::unique_ptr<Expr> lhs = nullptr, std::unique_ptr<Expr> rhs = nullptr) -> std::unique_ptr<Expr> {
  auto e = std::make_unique<Expr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

// Recursive descent; '^' is right associative and binds tighter than unary minus.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  auto parse() -> std::unique_ptr<Expr> {
    auto e = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  auto accept(char c) -> bool {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::InvalidArgument,
                "weight expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  auto sum() -> std::unique_ptr<Expr> {
    auto e = product();
    for (;;) {
      if (accept('+')) e = node(Op::Add, std::move(e), product());
      else if (accept('-')) e = node(Op::Sub, std::move(e), product());
      else return e;
    }
  }

  auto product() -> std::unique_ptr<Expr> {
    auto e = unary();
    for (;;) {
      if (accept('*')) e = node(Op::Mul, std::move(e), unary());
      else if (accept('/')) e = node(Op::Div, std::move(e), unary());
      else if (accept('%')) e = node(Op::Mod, std::move(e), unary());
      else return e;
    }
  }

  auto unary() -> std::unique_ptr<Expr> {
    if (accept('-')) return node(Op::Neg, unary());
    return power();
  }

  auto power() -> std::unique_ptr<Expr> {
    auto base = primary();
    if (accept('^')) return node(Op::Pow, std::move(base), unary());
    return base;
  }

  auto primary() -> std::unique_ptr<Expr> {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      auto e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc()) fail("bad integer literal");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      auto e = node(Op::Const);
      e->value = value;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "m") return node(Op::Var);
      Op op;
      int arity = 1;
      if (name == "min") op = Op::Min, arity = 2;
      else if (name == "max") op = Op::Max, arity = 2;
      else if (name == "sqrt") op = Op::Sqrt;
      else if (name == "log2") op = Op::Log2;
      else fail("unknown identifier '" + std::string(name) + "'");
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      auto a = sum();
      std::unique_ptr<Expr> b;
      if (arity == 2) {
        if (!accept(',')) fail("expected ','");
        b = sum();
      }
      if (!accept(')')) fail("expected ')'");
      return node(op, std::move(a), std::move(b));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

auto isqrt(std::int64_t x) -> std::int64_t {
  std::int64_t r = 0;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

auto evaluate(const Expr& e, std::int64_t m) -> std::int64_t {
  switch (e.op) {
    case Op::Const: return e.value;
    case Op::Var: return m;
    case Op::Add: return checked_add(evaluate(*e.lhs, m), evaluate(*e.rhs, m));
    case Op::Sub: {
      std::int64_t r = 0;
      if (__builtin_sub_overflow(evaluate(*e.lhs, m), evaluate(*e.rhs, m), &r))
        throw Error(ErrorCode::Overflow, "64-bit overflow in weight expression");
      return r;
    }
    case Op::Mul: return checked_mul(evaluate(*e.lhs, m), evaluate(*e.rhs, m));
    case Op::Div:
    case Op::Mod: {
      const std::int64_t a = evaluate(*e.lhs, m);
      const std::int64_t b = evaluate(*e.rhs, m);
      if (b == 0) throw Error(ErrorCode::UndefinedWeight, "division by zero in weight expression at m=" + std::to_string(m));
      return e.op == Op::Div ? a / b : a % b;
    }
    case Op::Pow: {
      const std::int64_t base = evaluate(*e.lhs, m);
      const std::int64_t exp = evaluate(*e.rhs, m);
      if (exp < 0) throw Error(ErrorCode::UndefinedWeight, "negative exponent in weight expression");
      std::int64_t r = 1;
      for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
      return r;
    }
    case Op::Neg: return -evaluate(*e.lhs, m);
    case Op::Min: return std::min(evaluate(*e.lhs, m), evaluate(*e.rhs, m));
    case Op::Max: return std::max(evaluate(*e.lhs, m), evaluate(*e.rhs, m));
    case Op::Sqrt: {
      const std::int64_t a = evaluate(*e.lhs, m);
      if (a < 0) throw Error(ErrorCode::UndefinedWeight, "sqrt of a negative value in weight expression");
      return isqrt(a);
    }
    case Op::Log2: {
      const std::int64_t a = evaluate(*e.lhs, m);
      if (a <= 0) throw Error(ErrorCode::UndefinedWeight, "log2 of a non-positive value in weight expression");
      std::int64_t r = 0;
      for (std::int64_t x = a; x > 1; x >>= 1) ++r;
      return r;
    }
  }
  return 0;
}

auto parse_int(std::string_view s, const char* what) -> std::int64_t {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + std::string(s) + "'");
  return value;
}

}  // namespace

auto WeightFunction::size() -> WeightFunction { return {}; }

auto WeightFunction::size_squared() -> WeightFunction {
  WeightFunction w;
  w.kind_ = Kind::SizeSquared;
  return w;
}

auto WeightFunction::size_minus(std::int64_t c) -> WeightFunction {
  if (c < 0) throw Error(ErrorCode::InvalidArgument, "size-minus offset must be non-negative");
  WeightFunction w;
  w.kind_ = Kind::SizeMinusC;
  w.offset_ = c;
  return w;
}

auto WeightFunction::table(std::vector<std::pair<int, std::int64_t>> values) -> WeightFunction {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].first < 1) throw Error(ErrorCode::InvalidArgument, "weight table sizes must be positive");
    if (values[i].second < 0) throw Error(ErrorCode::NegativeWeight, "weight table values must be non-negative");
    if (i > 0 && values[i].first == values[i - 1].first)
      throw Error(ErrorCode::InvalidArgument, "weight table lists size " + std::to_string(values[i].first) + " twice");
  }
  WeightFunction w;
  w.kind_ = Kind::Table;
  w.table_ = std::move(values);
  return w;
}

auto WeightFunction::custom(std::string_view expression) -> WeightFunction {
  WeightFunction w;
  w.kind_ = Kind::Custom;
  w.source_ = std::string(expression);
  w.expr_ = ExprParser(w.source_).parse();
  return w;
}

auto WeightFunction::parse(std::string_view spec) -> WeightFunction {
  if (spec == "size" || spec == "m") return size();
  if (spec == "size2" || spec == "size^2" || spec == "m^2") return size_squared();
  if (spec.starts_with("size-minus:")) return size_minus(parse_int(spec.substr(11), "size-minus offset"));
  if (spec.starts_with("table:")) {
    std::vector<std::pair<int, std::int64_t>> values;
    std::string_view rest = spec.substr(6);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos)
        throw Error(ErrorCode::InvalidArgument, "weight table entry '" + std::string(item) + "' needs m=w");
      values.emplace_back(static_cast<int>(parse_int(item.substr(0, eq), "table size")),
                          parse_int(item.substr(eq + 1), "table weight"));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return table(std::move(values));
  }
  if (spec.starts_with("expr:")) return custom(spec.substr(5));
  throw Error(ErrorCode::InvalidArgument, "unknown weight function '" + std::string(spec) + "'");
}

auto WeightFunction::operator()(int m) const -> std::int64_t {
  if (m < 1) throw Error(ErrorCode::UndefinedWeight, "weight functions are defined on sizes >= 1");
  switch (kind_) {
    case Kind::Size: return m;
    case Kind::SizeSquared: return static_cast<std::int64_t>(m) * m;
    case Kind::SizeMinusC: return std::max<std::int64_t>(m - offset_, 0);
    case Kind::Table: {
      auto it = std::lower_bound(table_.begin(), table_.end(), std::pair<int, std::int64_t>{m, INT64_MIN});
      if (it == table_.end() || it->first != m)
        throw Error(ErrorCode::UndefinedWeight, "weight table has no entry for size " + std::to_string(m));
      return it->second;
    }
    case Kind::Custom: {
      const std::int64_t value = evaluate(*expr_, m);
      if (value < 0)
        throw Error(ErrorCode::NegativeWeight,
                    "weight expression '" + source_ + "' is negative at m=" + std::to_string(m));
      return value;
    }
  }
  return 0;
}

auto WeightFunction::describe() const -> std::string {
  switch (kind_) {
    case Kind::Size: return "size";
    case Kind::SizeSquared: return "size2";
    case Kind::SizeMinusC: return "size-minus:" + std::to_string(offset_);
    case Kind::Table: {
      std::string s = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(table_[i].first) + "=" + std::to_string(table_[i].second);
      }
      return s;
    }
    case Kind::Custom: return "expr:" + source_;
  }
  return "?";
}

}  // namespace berge
