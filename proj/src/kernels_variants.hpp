#pragma once

#include "suitescore/kernels.hpp"

namespace suitescore::kernels {

#if defined(SUITESCORE_HAVE_AVX2)
namespace avx2 {
double sum(const double* x, std::size_t n);
double sum_reciprocal(const double* x, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
const KernelTable& table();
}  // namespace avx2
#endif

#if defined(SUITESCORE_HAVE_NEON)
namespace neon {
double sum(const double* x, std::size_t n);
double sum_reciprocal(const double* x, std::size_t n);
double sum_squares(const double* x, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
const KernelTable& table();
}  // namespace neon
#endif

}  // namespace suitescore::kernels
