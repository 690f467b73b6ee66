#include "thinpath/kernels.hpp"

#include <atomic>

namespace thinpath::kernels {
namespace {

const KernelTable* best_available() noexcept {
  if (const KernelTable* t = avx2_table(); t != nullptr && cpu_has_avx2()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{best_available()};
  return current;
}

}  // namespace

const KernelTable& active() noexcept { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      slot().store(&scalar_table(), std::memory_order_relaxed);
      return true;
    case Isa::avx2:
      if (const KernelTable* t = avx2_table(); t != nullptr && cpu_has_avx2()) {
        slot().store(t, std::memory_order_relaxed);
        return true;
      }
      return false;
  }
  return false;
}

void select_best() noexcept { slot().store(best_available(), std::memory_order_relaxed); }

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace thinpath::kernels
