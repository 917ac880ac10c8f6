#include <atomic>
#include <cstdlib>
#include <string_view>

#include "crossn/kernels.hpp"

namespace crossn::kernels {
namespace {

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return &scalar_table();
    case Isa::Avx2:
#if defined(CROSSN_HAVE_AVX2)
      return &avx2_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(CROSSN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_table() noexcept {
  if (const char* env = std::getenv("CROSSN_KERNELS")) {
    const std::string_view want(env);
    if (want == "scalar") return &scalar_table();
    if (want == "avx2" && supported(Isa::Avx2)) return table_for(Isa::Avx2);
  }
  if (supported(Isa::Avx2)) return table_for(Isa::Avx2);
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() noexcept {
  static std::atomic<const KernelTable*> current{initial_table()};
  return current;
}

}  // namespace

bool supported(Isa isa) noexcept { return table_for(isa) != nullptr && cpu_has(isa); }

std::vector<const KernelTable*> available() noexcept {
  std::vector<const KernelTable*> out{&scalar_table()};
  if (supported(Isa::Avx2)) out.push_back(table_for(Isa::Avx2));
  return out;
}

const KernelTable& active() noexcept { return *slot().load(std::memory_order_acquire); }

bool select(Isa isa) noexcept {
  if (!supported(isa)) return false;
  slot().store(table_for(isa), std::memory_order_release);
  return true;
}

}  // namespace crossn::kernels
