#pragma once

// Word-parallel bitset kernels. A scalar reference implementation is always
// available; an AVX2 variant is compiled on x86-64 and selected at runtime
// when the CPU supports it. Set FULLGRAPH_SIMD=scalar to force the reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fullgraph::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  std::size_t (*popcount)(const Word* a, std::size_t n);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
  void (*and_into)(Word* dst, const Word* src, std::size_t n);
  void (*andnot_into)(Word* dst, const Word* src, std::size_t n);
  void (*or_into)(Word* dst, const Word* src, std::size_t n);
  bool (*intersects)(const Word* a, const Word* b, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
const KernelTable* avx2_table() noexcept;  // nullptr when not compiled in

bool isa_supported(Isa isa) noexcept;
const KernelTable* table_for(Isa isa) noexcept;  // nullptr when unsupported
const KernelTable& active() noexcept;
std::string_view isa_name(Isa isa) noexcept;

inline std::size_t popcount(std::span<const Word> a) noexcept {
  return active().popcount(a.data(), a.size());
}

// |a & b|; spans must have equal length.
inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().and_popcount(a.data(), b.data(), a.size());
}

inline void and_into(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().and_into(dst.data(), src.data(), dst.size());
}

// dst &= ~src
inline void andnot_into(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().andnot_into(dst.data(), src.data(), dst.size());
}

inline void or_into(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().or_into(dst.data(), src.data(), dst.size());
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().intersects(a.data(), b.data(), a.size());
}

}  // namespace fullgraph::kernels
