#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace berge::kernels {
namespace {

auto cpu_has_avx2() -> bool {
#if defined(BERGE_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

auto initial_table() -> const KernelTable* {
  const KernelTable* best = avx2_table();
  if (const char* forced = std::getenv("BERGE_ISA")) {
    if (std::string_view(forced) == "scalar") return &scalar_table();
  }
  return best != nullptr ? best : &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

auto scalar_table() -> const KernelTable& {
  static const KernelTable table = detail::make_scalar_table();
  return table;
}

auto avx2_table() -> const KernelTable* {
#if defined(BERGE_HAVE_AVX2_KERNELS)
  static const KernelTable table = detail::make_avx2_table();
  static const bool usable = cpu_has_avx2();
  return usable ? &table : nullptr;
#else
  return nullptr;
#endif
}

auto active() -> const KernelTable& { return *current().load(std::memory_order_relaxed); }

auto select(Isa isa) -> bool {
  const KernelTable* table = isa == Isa::Scalar ? &scalar_table() : avx2_table();
  if (table == nullptr) return false;
  current().store(table, std::memory_order_relaxed);
  return true;
}

auto isa_name(Isa isa) -> std::string_view { return isa == Isa::Scalar ? "scalar" : "avx2"; }

}  // namespace berge::kernels
