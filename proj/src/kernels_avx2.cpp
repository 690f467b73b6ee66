#include "thinpath/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define THINPATH_HAVE_AVX2_KERNELS 1
#include <immintrin.h>

#include <bit>
#endif

namespace thinpath::kernels {

#if THINPATH_HAVE_AVX2_KERNELS
namespace {

#define THINPATH_AVX2 __attribute__((target("avx2")))

// Nibble-table popcount of each byte, summed into four 64-bit lanes.
THINPATH_AVX2 inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                         _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

THINPATH_AVX2 inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

THINPATH_AVX2 void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const auto* s = reinterpret_cast<const __m256i*>(src + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

THINPATH_AVX2 std::size_t popcount_avx2(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(v));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

THINPATH_AVX2 std::size_t union_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_or_si256(va, vb)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] | b[i]));
  return total;
}

THINPATH_AVX2 bool is_subset_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(b, a) == 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

#undef THINPATH_AVX2

constexpr KernelTable kAvx2{Isa::avx2, or_into_avx2, popcount_avx2, union_popcount_avx2,
                            is_subset_avx2};

}  // namespace

const KernelTable* avx2_table() noexcept { return &kAvx2; }

bool cpu_has_avx2() noexcept { return __builtin_cpu_supports("avx2"); }

#else

const KernelTable* avx2_table() noexcept { return nullptr; }
bool cpu_has_avx2() noexcept { return false; }

#endif

}  // namespace thinpath::kernels
