#include <vector>

#include "kernels_variants.hpp"

namespace suitescore::kernels {
namespace {

std::vector<const KernelTable*> detect() {
  std::vector<const KernelTable*> tables{&scalar::table()};
#if defined(SUITESCORE_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    tables.push_back(&avx2::table());
  }
#endif
#if defined(SUITESCORE_HAVE_NEON)
  tables.push_back(&neon::table());
#endif
  return tables;
}

}  // namespace

std::span<const KernelTable* const> available() {
  static const std::vector<const KernelTable*> kTables = detect();
  return kTables;
}

const KernelTable& active() {
  static const KernelTable& kActive = *available().back();
  return kActive;
}

}  // namespace suitescore::kernels
