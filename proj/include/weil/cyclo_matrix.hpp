#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "weil/cyclo.hpp"

namespace weil {

/// Dense row-major matrix over Q(zeta_N). All entries are kept at order().
class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols, int order);

  static CycloMatrix identity(std::size_t n, int order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int order() const { return order_; }

  const CyclotomicNumber& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores value lifted to order(); value's order must divide order().
  void set(std::size_t r, std::size_t c, const CyclotomicNumber& value);

  /// Same matrix with every entry lifted to a multiple of order().
  CycloMatrix lift(int target_order) const;

  CycloMatrix conj() const;
  CycloMatrix transpose() const;
  CycloMatrix adjoint() const { return conj().transpose(); }
  CycloMatrix scaled(const CyclotomicNumber& s) const;

  /// Product via the parallel kernel in weil::kernels.
  CycloMatrix operator*(const CycloMatrix& rhs) const;
  CycloMatrix operator-() const { return scaled(CyclotomicNumber(mpq_class(-1))); }

  std::vector<CyclotomicNumber> apply(const std::vector<CyclotomicNumber>& v) const;

  bool is_identity() const;
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

  /// Row-major double embedding.
  std::vector<std::complex<double>> to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int order_ = 1;
  std::vector<CyclotomicNumber> data_;
};

}  // namespace weil
