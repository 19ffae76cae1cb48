#pragma once

#include "berge/kernels.hpp"

namespace berge::kernels::detail {

auto make_scalar_table() -> KernelTable;
#if defined(BERGE_HAVE_AVX2_KERNELS)
auto make_avx2_table() -> KernelTable;
#endif

}  // namespace berge::kernels::detail
