#include "weil/cyclo_matrix.hpp"

#include <stdexcept>

#include "weil/kernels.hpp"

namespace weil {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols, int order)
    : rows_(rows), cols_(cols), order_(order), data_(rows * cols, CyclotomicNumber(mpq_class(0), order)) {}

CycloMatrix CycloMatrix::identity(std::size_t n, int order) {
  CycloMatrix m(n, n, order);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = CyclotomicNumber(mpq_class(1), order);
  return m;
}

void CycloMatrix::set(std::size_t r, std::size_t c, const CyclotomicNumber& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("CycloMatrix::set: index out of range");
  data_[r * cols_ + c] = value.order() == order_ ? value : value.lift(order_);
}

CycloMatrix CycloMatrix::lift(int target_order) const {
  CycloMatrix out(rows_, cols_, target_order);
  for (std::size_t e = 0; e < data_.size(); ++e) out.data_[e] = data_[e].lift(target_order);
  return out;
}

CycloMatrix CycloMatrix::conj() const {
  CycloMatrix out = *this;
  for (auto& x : out.data_) x = x.conj();
  return out;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix out(cols_, rows_, order_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

CycloMatrix CycloMatrix::scaled(const CyclotomicNumber& s) const {
  const int order = common_order(order_, s.order());
  CycloMatrix out = lift(order);
  for (auto& x : out.data_) x *= s;
  return out;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
  return kernels::from_ring(kernels::multiply(kernels::to_ring(*this), kernels::to_ring(rhs)));
}

std::vector<CyclotomicNumber> CycloMatrix::apply(const std::vector<CyclotomicNumber>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("CycloMatrix::apply: dimension mismatch");
  std::vector<CyclotomicNumber> out(rows_, CyclotomicNumber(mpq_class(0), order_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!data_[r * cols_ + c].is_zero() && !v[c].is_zero()) out[r] += data_[r * cols_ + c] * v[c];
  return out;
}

bool CycloMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  const CyclotomicNumber one(mpq_class(1), order_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& x = data_[r * cols_ + c];
      if (r == c ? !(x == one) : !x.is_zero()) return false;
    }
  return true;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t e = 0; e < a.data_.size(); ++e)
    if (!(a.data_[e] == b.data_[e])) return false;
  return true;
}

std::vector<std::complex<double>> CycloMatrix::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(data_.size());
  for (const auto& x : data_) out.push_back(x.to_complex());
  return out;
}

}  // namespace weil
