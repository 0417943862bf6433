// AArch64 always has Advanced SIMD, so this variant needs no runtime probe.
// Four two-lane accumulators reproduce the scalar reference's eight lanes.

#include <arm_neon.h>

#include <cmath>

#include "kernels_variants.hpp"

namespace suitescore::kernels::neon {
namespace {

// ((l0+l4)+(l2+l6)) + ((l1+l5)+(l3+l7)) with acc0 = l0,l1 ... acc3 = l6,l7.
inline double fold(float64x2_t acc0, float64x2_t acc1, float64x2_t acc2, float64x2_t acc3) {
  const float64x2_t s01 = vaddq_f64(acc0, acc2);
  const float64x2_t s23 = vaddq_f64(acc1, acc3);
  return vaddvq_f64(vaddq_f64(s01, s23));
}

template <typename Step, typename Tail>
double reduce(std::size_t n, Step step, Tail tail) {
  float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
  float64x2_t acc2 = vdupq_n_f64(0.0), acc3 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = step(i, acc0);
    acc1 = step(i + 2, acc1);
    acc2 = step(i + 4, acc2);
    acc3 = step(i + 6, acc3);
  }
  if (i + 4 <= n) {
    acc0 = step(i, acc0);
    acc1 = step(i + 2, acc1);
    i += 4;
  }
  double acc = fold(acc0, acc1, acc2, acc3);
  for (; i < n; ++i) acc = tail(i, acc);
  return acc;
}

}  // namespace

double sum(const double* x, std::size_t n) {
  return reduce(
      n, [x](std::size_t i, float64x2_t acc) { return vaddq_f64(acc, vld1q_f64(x + i)); },
      [x](std::size_t i, double acc) { return acc + x[i]; });
}

double sum_reciprocal(const double* x, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  return reduce(
      n,
      [x, one](std::size_t i, float64x2_t acc) {
        return vaddq_f64(acc, vdivq_f64(one, vld1q_f64(x + i)));
      },
      [x](std::size_t i, double acc) { return acc + 1.0 / x[i]; });
}

double sum_squares(const double* x, std::size_t n) {
  return reduce(
      n,
      [x](std::size_t i, float64x2_t acc) {
        const float64x2_t v = vld1q_f64(x + i);
        return vfmaq_f64(acc, v, v);
      },
      [x](std::size_t i, double acc) { return std::fma(x[i], x[i], acc); });
}

double dot(const double* a, const double* b, std::size_t n) {
  return reduce(
      n,
      [a, b](std::size_t i, float64x2_t acc) {
        return vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
      },
      [a, b](std::size_t i, double acc) { return std::fma(a[i], b[i], acc); });
}

const KernelTable& table() {
  static constexpr KernelTable kTable{Isa::Neon, "neon", &sum, &sum_reciprocal,
                                      &sum_squares, &dot};
  return kTable;
}

}  // namespace suitescore::kernels::neon
