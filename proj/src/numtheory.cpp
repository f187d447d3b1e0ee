#include "weil/numtheory.hpp"

#include <stdexcept>

namespace weil::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("mod: modulus must be positive");
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factor: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factor(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> square_decompose(std::int64_t n) {
  std::int64_t s = 1;
  std::int64_t f = 1;
  for (const auto& [p, e] : factor(n)) {
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) f *= p;
  }
  return {s, f};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  std::int64_t old_r = a, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("inverse_mod: not a unit");
  return mod(old_s, n);
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const std::int64_t a8 = mod(a, 8);
    if ((twos % 2 == 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a / n) for odd n > 0.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t n8 = n % 8;
      if (n8 == 3 || n8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j <= n; ++j)
    if (gcd(j, n) == 1) out.push_back(j);
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

}  // namespace weil::nt
