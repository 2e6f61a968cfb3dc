#include <atomic>
#include <cstdlib>
#include <string_view>

#include "extendkit/kernels.hpp"
#include "extendkit/point.hpp"

namespace extendkit::kernels {

#ifndef EXTENDKIT_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(EXTENDKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

namespace {

const KernelTable& table_for(Isa isa) {
  return isa == Isa::avx2 ? *avx2_table() : scalar_table();
}

const KernelTable* initial_table() {
  if (const char* forced = std::getenv("EXTENDKIT_ISA")) {
    if (std::string_view(forced) == "scalar") return &scalar_table();
  }
  return &table_for(detected_isa());
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable& active() { return *active_slot().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw InputError(std::string("kernel variant not available: ") + to_string(isa));
  }
  active_slot().store(&table_for(isa), std::memory_order_release);
}

}  // namespace extendkit::kernels
