#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace weil {

/// Elementary integer helpers shared by the exact modules.
namespace nt {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Representative of a mod n in [0, n); n > 0.
std::int64_t mod(std::int64_t a, std::int64_t n);

/// Floor of a / b for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);

/// Prime factorisation as (p, e) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);

/// Writes n = s^2 * f with f squarefree; returns {s, f}. n > 0.
std::pair<std::int64_t, std::int64_t> square_decompose(std::int64_t n);

/// Inverse of a modulo n; throws std::domain_error when gcd(a, n) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t n);

/// Kronecker symbol (a / n), extending the Jacobi symbol to all integers n.
int kronecker(std::int64_t a, std::int64_t n);

/// Residues 1 <= j <= n with gcd(j, n) = 1, increasing.
std::vector<std::int64_t> units_mod(std::int64_t n);

/// Overflow-checked arithmetic; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace nt
}  // namespace weil
