#include <cmath>

#include "suitescore/kernels.hpp"

// Every variant reduces in the same order, so results are bit-identical
// whichever one the dispatcher picks: eight lane accumulators fed in blocks of
// eight (a trailing block of four feeds lanes 0-3), lanes folded as
// ((l0+l4)+(l2+l6)) + ((l1+l5)+(l3+l7)), then the remaining elements added in
// sequence. Products are always fused.

namespace suitescore::kernels::scalar {
namespace {

template <typename Term>
double reduce(std::size_t n, Term term) {
  double lane[8] = {};
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    for (std::size_t j = 0; j < 8; ++j) lane[j] = term(i + j, lane[j]);
  }
  if (i + 4 <= n) {
    for (std::size_t j = 0; j < 4; ++j) lane[j] = term(i + j, lane[j]);
    i += 4;
  }
  double s[4];
  for (std::size_t j = 0; j < 4; ++j) s[j] = lane[j] + lane[j + 4];
  double acc = (s[0] + s[2]) + (s[1] + s[3]);
  for (; i < n; ++i) acc = term(i, acc);
  return acc;
}

}  // namespace

double sum(const double* x, std::size_t n) {
  return reduce(n, [x](std::size_t i, double acc) { return acc + x[i]; });
}

double sum_reciprocal(const double* x, std::size_t n) {
  return reduce(n, [x](std::size_t i, double acc) { return acc + 1.0 / x[i]; });
}

double sum_squares(const double* x, std::size_t n) {
  return reduce(n, [x](std::size_t i, double acc) { return std::fma(x[i], x[i], acc); });
}

double dot(const double* a, const double* b, std::size_t n) {
  return reduce(n, [a, b](std::size_t i, double acc) { return std::fma(a[i], b[i], acc); });
}

const KernelTable& table() {
  static constexpr KernelTable kTable{Isa::Scalar, "scalar", &sum, &sum_reciprocal,
                                      &sum_squares, &dot};
  return kTable;
}

}  // namespace suitescore::kernels::scalar
