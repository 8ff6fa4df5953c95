#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fullgraph/kernels.hpp"

namespace fullgraph::bits {

using kernels::Word;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t nbits) noexcept {
  return (nbits + kWordBits - 1) / kWordBits;
}

inline bool test(std::span<const Word> w, std::size_t i) noexcept {
  return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void set(std::span<Word> w, std::size_t i) noexcept {
  w[i / kWordBits] |= Word{1} << (i % kWordBits);
}

inline void reset(std::span<Word> w, std::size_t i) noexcept {
  w[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

// All bits 0..nbits-1 set, padding clear.
inline std::vector<Word> full(std::size_t nbits) {
  std::vector<Word> w(words_for(nbits), ~Word{0});
  if (nbits % kWordBits != 0) w.back() = (Word{1} << (nbits % kWordBits)) - 1;
  return w;
}

inline bool none(std::span<const Word> w) noexcept {
  for (Word x : w)
    if (x) return false;
  return true;
}

// Index of the lowest set bit, or w.size()*64 when empty.
inline std::size_t first(std::span<const Word> w) noexcept {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w[i]));
  return w.size() * kWordBits;
}

template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w[i];
    while (x) {
      f(i * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

}  // namespace fullgraph::bits
