#pragma once

// Reduction kernels behind the boosting metrics and effect contrasts.
//
// Every kernel has a scalar reference implementation. Vector variants (AVX2
// on x86-64, NEON on AArch64) are compiled when the toolchain supports them
// and selected at runtime from CPU features. Variants may reassociate the
// summation, so results agree with the scalar reference to rounding, not
// bit-for-bit.

#include <cstddef>
#include <span>

namespace suitescore::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  const char* name;
  // Σ x_i
  double (*sum)(const double* x, std::size_t n);
  // Σ 1/x_i
  double (*sum_reciprocal)(const double* x, std::size_t n);
  // Σ x_i²
  double (*sum_squares)(const double* x, std::size_t n);
  // Σ a_i·b_i
  double (*dot)(const double* a, const double* b, std::size_t n);
};

namespace scalar {
double sum(const double* x, std::size_t n);
double sum_reciprocal(const double* x, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
const KernelTable& table();
}  // namespace scalar

// Variants compiled into this build whose instruction set the running CPU
// supports; the scalar table is always first.
std::span<const KernelTable* const> available();

// Best supported variant, resolved once.
const KernelTable& active();

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double sum_reciprocal(std::span<const double> x) {
  return active().sum_reciprocal(x.data(), x.size());
}
inline double sum_squares(std::span<const double> x) {
  return active().sum_squares(x.data(), x.size());
}
// Precondition: a.size() == b.size().
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

}  // namespace suitescore::kernels
