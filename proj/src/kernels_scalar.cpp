#include "thinpath/kernels.hpp"

#include <bit>

namespace thinpath::kernels {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t union_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
  return total;
}

bool is_subset_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

constexpr KernelTable kScalar{Isa::scalar, or_into_scalar, popcount_scalar,
                              union_popcount_scalar, is_subset_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace thinpath::kernels
