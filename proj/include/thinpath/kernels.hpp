#pragma once

// Word-level bit-set kernels used by cover arithmetic.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The active table is chosen once at startup from CPUID and
// can be overridden (tests force each ISA to check equivalence).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace thinpath::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  // popcount(a | b) without materialising the union
  std::size_t (*union_popcount)(const Word* a, const Word* b, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const Word* a, const Word* b, std::size_t words);
};

const KernelTable& scalar_table() noexcept;
// Null when the binary was built without AVX2 support.
const KernelTable* avx2_table() noexcept;

bool cpu_has_avx2() noexcept;

// Currently selected table.
const KernelTable& active() noexcept;

// Force a specific ISA. Returns false (and leaves the selection unchanged) if
// the ISA is unavailable on this machine.
bool select(Isa isa) noexcept;
// Re-run automatic selection.
void select_best() noexcept;

std::string_view isa_name(Isa isa) noexcept;

inline void or_into(std::span<Word> dst, std::span<const Word> src) noexcept {
  active().or_into(dst.data(), src.data(), dst.size());
}
inline std::size_t popcount(std::span<const Word> a) noexcept {
  return active().popcount(a.data(), a.size());
}
inline std::size_t union_popcount(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().union_popcount(a.data(), b.data(), a.size());
}
inline bool is_subset(std::span<const Word> a, std::span<const Word> b) noexcept {
  return active().is_subset(a.data(), b.data(), a.size());
}

}  // namespace thinpath::kernels
