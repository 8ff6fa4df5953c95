#include <cstdlib>
#include <string_view>

#include "fullgraph/kernels.hpp"

namespace fullgraph::kernels {

#ifndef FULLGRAPH_HAVE_AVX2_TU
const KernelTable* avx2_table() noexcept { return nullptr; }
#endif

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(FULLGRAPH_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* table_for(Isa isa) noexcept {
  if (!isa_supported(isa)) return nullptr;
  return isa == Isa::avx2 ? avx2_table() : &scalar_table();
}

namespace {

const KernelTable& select() noexcept {
  const char* env = std::getenv("FULLGRAPH_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
  if (const KernelTable* t = table_for(Isa::avx2)) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace fullgraph::kernels
