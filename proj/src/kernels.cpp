#include "weil/kernels.hpp"

#include <cstdint>
#include <stdexcept>

namespace weil::kernels {

namespace {

void reduce_entry(mpz_class* e, std::size_t order, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t d = order; d-- > deg;) {
    if (sgn(e[d]) == 0) continue;
    const mpz_class t = e[d];
    for (std::size_t j = 0; j < deg; ++j) {
      const std::int64_t p = phi[j];
      if (p == 1) {
        e[d - deg + j] -= t;
      } else if (p == -1) {
        e[d - deg + j] += t;
      } else if (p != 0) {
        e[d - deg + j] -= t * static_cast<long>(p);
      }
    }
    e[d] = 0;
  }
}

using NonzeroIndex = std::vector<std::vector<std::uint32_t>>;

NonzeroIndex nonzero_index(const RingMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.order);
  NonzeroIndex out(m.rows * m.cols);
  for (std::size_t e = 0; e < out.size(); ++e) {
    const mpz_class* p = m.coeffs.data() + e * n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(p[j]) != 0) out[e].push_back(static_cast<std::uint32_t>(j));
  }
  return out;
}

// Accumulates entry (i, j) of a * b into acc (length order), then reduces it.
void product_entry(const RingMatrix& a, const RingMatrix& b, const NonzeroIndex& nza, const NonzeroIndex& nzb,
                   std::size_t i, std::size_t j, std::vector<mpz_class>& acc,
                   const std::vector<std::int64_t>& phi) {
  const std::size_t n = static_cast<std::size_t>(a.order);
  for (auto& v : acc) v = 0;
  for (std::size_t k = 0; k < a.cols; ++k) {
    const auto& ia = nza[i * a.cols + k];
    const auto& ib = nzb[k * b.cols + j];
    if (ia.empty() || ib.empty()) continue;
    const mpz_class* pa = a.entry(i, k);
    const mpz_class* pb = b.entry(k, j);
    for (std::uint32_t p : ia) {
      for (std::uint32_t q : ib) {
        std::size_t idx = p + q;
        if (idx >= n) idx -= n;
        mpz_addmul(acc[idx].get_mpz_t(), pa[p].get_mpz_t(), pb[q].get_mpz_t());
      }
    }
  }
  reduce_entry(acc.data(), n, phi);
}

struct Aligned {
  RingMatrix a;
  RingMatrix b;
};

Aligned align(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("RingMatrix multiply: dimension mismatch");
  const int n = common_order(a.order, b.order);
  return {a.lift(n), b.lift(n)};
}

}  // namespace

RingMatrix::RingMatrix(std::size_t r, std::size_t c, int n)
    : order(n), rows(r), cols(c), scale(mpq_class(1), 1), coeffs(r * c * static_cast<std::size_t>(n)) {}

RingMatrix RingMatrix::lift(int target_order) const {
  if (target_order == order) return *this;
  if (target_order % order != 0) throw std::invalid_argument("RingMatrix::lift: not a multiple");
  RingMatrix out(rows, cols, target_order);
  out.scale = scale;
  const std::size_t step = static_cast<std::size_t>(target_order / order);
  const std::size_t n = static_cast<std::size_t>(order);
  for (std::size_t e = 0; e < rows * cols; ++e)
    for (std::size_t j = 0; j < n; ++j) out.coeffs[e * n * step + j * step] = coeffs[e * n + j];
  return out;
}

RingMatrix to_ring(const CycloMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.order());
  RingMatrix out(m.rows(), m.cols(), m.order());
  mpz_class common = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (const auto& q : m(r, c).coefficients())
        if (sgn(q) != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& coeffs = m(r, c).coefficients();
      mpz_class* e = out.entry(r, c);
      for (std::size_t j = 0; j < coeffs.size() && j < n; ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        e[j] = coeffs[j].get_num() * (common / coeffs[j].get_den());
      }
    }
  }
  out.scale = CyclotomicNumber(mpq_class(mpz_class(1), common), m.order());
  return out;
}

CycloMatrix from_ring(const RingMatrix& m) {
  const int order = common_order(m.order, m.scale.order());
  CycloMatrix out(m.rows, m.cols, order);
  const std::size_t n = static_cast<std::size_t>(m.order);
  const auto& phi = cyclotomic_polynomial(m.order);
  const long total = static_cast<long>(m.rows * m.cols);
  const bool rational_scale = m.scale.is_rational();
  const mpq_class rational = m.scale.rational_part();
#pragma omp parallel for schedule(dynamic)
  for (long e = 0; e < total; ++e) {
    std::vector<mpz_class> tmp(m.coeffs.begin() + e * static_cast<long>(n),
                               m.coeffs.begin() + (e + 1) * static_cast<long>(n));
    reduce_entry(tmp.data(), n, phi);
    std::vector<mpq_class> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = tmp[j];
    CyclotomicNumber value = CyclotomicNumber::from_powers(m.order, std::move(q));
    if (rational_scale) {
      value *= rational;
    } else {
      value *= m.scale;
    }
    const std::size_t r = static_cast<std::size_t>(e) / m.cols;
    const std::size_t c = static_cast<std::size_t>(e) % m.cols;
    out.set(r, c, value);
  }
  return out;
}

void reduce(RingMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.order);
  const auto& phi = cyclotomic_polynomial(m.order);
  const long total = static_cast<long>(m.rows * m.cols);
#pragma omp parallel for schedule(static)
  for (long e = 0; e < total; ++e) reduce_entry(m.coeffs.data() + e * static_cast<long>(n), n, phi);
}

void reduce_serial(RingMatrix& m) {
  const std::size_t n = static_cast<std::size_t>(m.order);
  const auto& phi = cyclotomic_polynomial(m.order);
  for (std::size_t e = 0; e < m.rows * m.cols; ++e) reduce_entry(m.coeffs.data() + e * n, n, phi);
}

RingMatrix multiply(const RingMatrix& lhs, const RingMatrix& rhs) {
  const auto [a, b] = align(lhs, rhs);
  const std::size_t n = static_cast<std::size_t>(a.order);
  const auto& phi = cyclotomic_polynomial(a.order);
  const NonzeroIndex nza = nonzero_index(a);
  const NonzeroIndex nzb = nonzero_index(b);
  RingMatrix out(a.rows, b.cols, a.order);
  out.scale = a.scale * b.scale;
  const long total = static_cast<long>(a.rows * b.cols);
#pragma omp parallel
  {
    std::vector<mpz_class> acc(n);
#pragma omp for schedule(dynamic)
    for (long e = 0; e < total; ++e) {
      const std::size_t i = static_cast<std::size_t>(e) / b.cols;
      const std::size_t j = static_cast<std::size_t>(e) % b.cols;
      product_entry(a, b, nza, nzb, i, j, acc, phi);
      mpz_class* dst = out.entry(i, j);
      for (std::size_t t = 0; t < n; ++t) dst[t] = acc[t];
    }
  }
  return out;
}

RingMatrix multiply_serial(const RingMatrix& lhs, const RingMatrix& rhs) {
  const auto [a, b] = align(lhs, rhs);
  const std::size_t n = static_cast<std::size_t>(a.order);
  const auto& phi = cyclotomic_polynomial(a.order);
  const NonzeroIndex nza = nonzero_index(a);
  const NonzeroIndex nzb = nonzero_index(b);
  RingMatrix out(a.rows, b.cols, a.order);
  out.scale = a.scale * b.scale;
  std::vector<mpz_class> acc(n);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      product_entry(a, b, nza, nzb, i, j, acc, phi);
      mpz_class* dst = out.entry(i, j);
      for (std::size_t t = 0; t < n; ++t) dst[t] = acc[t];
    }
  }
  return out;
}

CycloMatrix multiply_reference(const CycloMatrix& lhs, const CycloMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("multiply_reference: dimension mismatch");
  const int order = common_order(lhs.order(), rhs.order());
  CycloMatrix out(lhs.rows(), rhs.cols(), order);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      CyclotomicNumber sum(mpq_class(0), order);
      for (std::size_t k = 0; k < lhs.cols(); ++k) sum += lhs(i, k) * rhs(k, j);
      out.set(i, j, sum);
    }
  }
  return out;
}

}  // namespace weil::kernels
