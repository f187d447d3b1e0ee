#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "weil/cyclo.hpp"
#include "weil/cyclo_matrix.hpp"

namespace weil::kernels {

/// Matrix over Q(zeta_N) in factored form `scale * E`, where each entry of E
/// is an integer vector in the group ring Z[x]/(x^N - 1). Multiplying by a
/// root of unity is a cyclic shift here, so products with monomial matrices
/// (the Weil generators) cost additions only.
struct RingMatrix {
  int order = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  CyclotomicNumber scale{mpq_class(1)};
  std::vector<mpz_class> coeffs;  // entry (r, c), power j at (r * cols + c) * order + j

  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols, int order);

  mpz_class* entry(std::size_t r, std::size_t c) { return coeffs.data() + (r * cols + c) * static_cast<std::size_t>(order); }
  const mpz_class* entry(std::size_t r, std::size_t c) const {
    return coeffs.data() + (r * cols + c) * static_cast<std::size_t>(order);
  }

  /// Same value in Z[x]/(x^M - 1), M a multiple of order.
  RingMatrix lift(int target_order) const;
};

RingMatrix to_ring(const CycloMatrix& m);
CycloMatrix from_ring(const RingMatrix& m);

/// Canonicalises every entry modulo the cyclotomic polynomial (OpenMP over entries).
void reduce(RingMatrix& m);
void reduce_serial(RingMatrix& m);

/// Product with reduced output entries; parallel over output entries.
RingMatrix multiply(const RingMatrix& a, const RingMatrix& b);
/// Same algorithm, single thread.
RingMatrix multiply_serial(const RingMatrix& a, const RingMatrix& b);

/// Textbook triple loop over CyclotomicNumber; the reference the kernels are tested against.
CycloMatrix multiply_reference(const CycloMatrix& a, const CycloMatrix& b);

}  // namespace weil::kernels
