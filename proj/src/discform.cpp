#include "weil/discform.hpp"

#include <stdexcept>

#include "weil/numtheory.hpp"

namespace weil {

DiscriminantForm::DiscriminantForm(std::int64_t m, Signature sig) : m_(m), sig_(sig) {
  if (m < 1) throw std::invalid_argument("DiscriminantForm: m must be positive");
  if (sig.plus < 0 || sig.minus < 0) throw std::invalid_argument("DiscriminantForm: signature must be non-negative");
}

int DiscriminantForm::working_order() const { return static_cast<int>(nt::lcm(8, 4 * m_)); }

std::int64_t DiscriminantForm::reduce(std::int64_t x) const { return nt::mod(x, 2 * m_); }

std::int64_t DiscriminantForm::q_numerator(std::int64_t gamma) const {
  const std::int64_t g = reduce(gamma);
  return nt::mod(g * g, 4 * m_);
}

mpq_class q_value(const DiscriminantForm& df, std::int64_t gamma) {
  mpq_class q(static_cast<long>(df.q_numerator(gamma)), static_cast<long>(df.level()));
  q.canonicalize();
  return q;
}

mpq_class bilinear(const DiscriminantForm& df, std::int64_t gamma, std::int64_t delta) {
  const std::int64_t n = 2 * df.index();
  mpq_class b(static_cast<long>(nt::mod(df.reduce(gamma) * df.reduce(delta), n)), static_cast<long>(n));
  b.canonicalize();
  return b;
}

MilgramSides milgram_sides(const DiscriminantForm& df) {
  const int order = df.working_order();
  const std::int64_t level = df.level();
  std::vector<mpq_class> powers(static_cast<std::size_t>(order));
  const std::int64_t step = order / level;
  for (std::int64_t g = 0; g < df.group_order(); ++g) powers[static_cast<std::size_t>(df.q_numerator(g) * step)] += 1;
  CyclotomicNumber lhs = CyclotomicNumber::from_powers(order, std::move(powers));
  CyclotomicNumber rhs = cyc_sqrt_nat(df.group_order()) *
                         cyc_root_of_unity(df.signature().plus - df.signature().minus, 8);
  return {std::move(lhs), std::move(rhs)};
}

bool milgram_check(const DiscriminantForm& df) {
  const auto sides = milgram_sides(df);
  return sides.gauss_sum == sides.closed_form;
}

int s_factor(const DiscriminantForm& df, std::int64_t gamma) {
  const std::int64_t g = df.reduce(gamma);
  return (g == 0 || g == df.index()) ? 1 : 2;
}

std::set<std::int64_t> square_classes(std::int64_t m, std::int64_t k) {
  if (m < 1) throw std::invalid_argument("square_classes: m must be positive");
  const std::int64_t level = 4 * m;
  const bool odd = nt::mod(k, 2) == 1;
  std::set<std::int64_t> out;
  for (std::int64_t x = 0; x < level; ++x) {
    const std::int64_t sq = x * x % level;
    out.insert(odd ? nt::mod(-sq, level) : sq);
  }
  return out;
}

bool in_plus_space(std::int64_t n, std::int64_t m, std::int64_t k) {
  const std::int64_t level = 4 * m;
  const std::int64_t target = nt::mod(nt::mod(k, 2) == 1 ? -n : n, level);
  for (std::int64_t x = 0; x <= 2 * m; ++x)
    if (x * x % level == target) return true;
  return false;
}

}  // namespace weil
