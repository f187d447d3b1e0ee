#include "weil/weilrep.hpp"

#include <optional>
#include <stdexcept>

#include "weil/numtheory.hpp"

namespace weil {

namespace {

// e((b- - b+) / 8) / sqrt(2m)
CyclotomicNumber s_scale(const DiscriminantForm& df) {
  const std::int64_t n = df.group_order();
  CyclotomicNumber inv_sqrt = cyc_sqrt_nat(n) * mpq_class(1, static_cast<unsigned long>(n));
  return cyc_root_of_unity(df.signature().minus - df.signature().plus, 8) * inv_sqrt;
}

WeilMatrix finish(kernels::RingMatrix&& m, bool dual) {
  CycloMatrix out = kernels::from_ring(m);
  if (dual) out = out.conj();
  return {std::move(out), dual};
}

}  // namespace

namespace ring {

kernels::RingMatrix s_matrix(const DiscriminantForm& df, bool inverse) {
  const int order = df.working_order();
  const std::int64_t n = df.group_order();
  const std::int64_t step = order / n;
  kernels::RingMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n), order);
  for (std::int64_t delta = 0; delta < n; ++delta)
    for (std::int64_t gamma = 0; gamma < n; ++gamma) {
      const std::int64_t e = nt::mod((inverse ? 1 : -1) * gamma * delta % n * step, order);
      out.entry(static_cast<std::size_t>(delta), static_cast<std::size_t>(gamma))[e] = 1;
    }
  const CyclotomicNumber s = s_scale(df);
  out.scale = inverse ? s.conj() : s;
  return out;
}

kernels::RingMatrix t_power(const DiscriminantForm& df, std::int64_t power) {
  const int order = df.working_order();
  const std::int64_t n = df.group_order();
  const std::int64_t step = order / df.level();
  kernels::RingMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n), order);
  for (std::int64_t g = 0; g < n; ++g) {
    const std::int64_t e = nt::mod(nt::mod(power, df.level()) * df.q_numerator(g) * step, order);
    out.entry(static_cast<std::size_t>(g), static_cast<std::size_t>(g))[e] = 1;
  }
  return out;
}

kernels::RingMatrix z_power(const DiscriminantForm& df, int power) {
  // rho(Z) = rho(S)^2 = e((b- - b+) / 4) times the permutation e_gamma -> e_{-gamma}.
  const int order = df.working_order();
  const std::int64_t n = df.group_order();
  kernels::RingMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n), order);
  const int p = static_cast<int>(nt::mod(power, 4));
  for (std::int64_t g = 0; g < n; ++g) {
    const std::int64_t image = p % 2 == 0 ? g : nt::mod(-g, n);
    out.entry(static_cast<std::size_t>(image), static_cast<std::size_t>(g))[0] = 1;
  }
  out.scale = cyc_root_of_unity(static_cast<std::int64_t>(p) * (df.signature().minus - df.signature().plus), 4);
  return out;
}

}  // namespace ring

WeilMatrix rho_T(const DiscriminantForm& df, bool dual) { return finish(ring::t_power(df, 1), dual); }

WeilMatrix rho_S(const DiscriminantForm& df, bool dual) { return finish(ring::s_matrix(df, false), dual); }

WeilMatrix rho_word(const DiscriminantForm& df, const Word& w, bool dual) {
  std::optional<kernels::RingMatrix> acc;
  auto push = [&](const kernels::RingMatrix& g) { acc = acc ? kernels::multiply(*acc, g) : g; };
  std::int64_t t_run = 0;
  auto flush_t = [&] {
    if (t_run != 0) push(ring::t_power(df, t_run));
    t_run = 0;
  };
  int z = w.z_power;
  for (Generator g : w.letters) {
    switch (g) {
      case Generator::T:
        ++t_run;
        break;
      case Generator::TInv:
        --t_run;
        break;
      case Generator::S:
        flush_t();
        push(ring::s_matrix(df, false));
        break;
      case Generator::SInv:
        flush_t();
        push(ring::s_matrix(df, true));
        break;
      case Generator::Z:
        ++z;
        break;
    }
  }
  flush_t();
  if (z % 4 != 0) push(ring::z_power(df, z));
  if (!acc) return {CycloMatrix::identity(static_cast<std::size_t>(df.group_order()), df.working_order()), dual};
  return finish(std::move(*acc), dual);
}

WeilMatrix rho_eval(const DiscriminantForm& df, const MpElement& g, bool dual) {
  return rho_word(df, mp_decompose(g), dual);
}

WeilMatrix shintani_unipotent(const DiscriminantForm& df, std::int64_t n) {
  const int order = df.working_order();
  const std::size_t dim = static_cast<std::size_t>(df.group_order());
  if (n == 0) return {CycloMatrix::identity(dim, order), false};

  kernels::RingMatrix base(dim, dim, order);
  const std::int64_t level = df.level();
  const std::int64_t step = order / level;
  for (std::int64_t beta = 0; beta < df.group_order(); ++beta)
    for (std::int64_t gamma = 0; gamma < df.group_order(); ++gamma) {
      // 4m (Q(beta) - (beta, gamma) + Q(gamma)) = beta^2 - 2 beta gamma + gamma^2 (mod 4m)
      const std::int64_t e = nt::mod(beta * beta - 2 * beta * gamma + gamma * gamma, level) * step;
      base.entry(static_cast<std::size_t>(beta), static_cast<std::size_t>(gamma))[e] = 1;
    }
  base.scale = s_scale(df);

  std::uint64_t e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::optional<kernels::RingMatrix> result;
  while (e > 0) {
    if (e & 1U) result = result ? kernels::multiply(*result, base) : base;
    e >>= 1U;
    if (e > 0) base = kernels::multiply(base, base);
  }
  CycloMatrix out = kernels::from_ring(*result);
  if (n < 0) out = out.adjoint();
  return {std::move(out), false};
}

CyclotomicNumber epsilon_inverse(std::int64_t d) {
  if (d <= 0 || d % 2 == 0) throw std::invalid_argument("epsilon_inverse: d must be odd and positive");
  return d % 4 == 1 ? CyclotomicNumber(mpq_class(1), 4) : cyc_root_of_unity(-1, 4);
}

BorcherdsResult borcherds_eigencheck(const DiscriminantForm& df, const IntMatrix2& m) {
  if (m.det() != 1) throw std::invalid_argument("borcherds_eigencheck: determinant must be 1");
  if (m.c % df.level() != 0) throw std::invalid_argument("borcherds_eigencheck: matrix is not in Gamma_0(4m)");
  if (m.d <= 0) throw std::invalid_argument("borcherds_eigencheck: requires d > 0");
  const IntMatrix2 conjugated{m.a, nt::checked_mul(df.level(), m.b), m.c / df.level(), m.d};
  const WeilMatrix rho = rho_eval(df, mp_tilde(conjugated));
  CyclotomicNumber scalar = epsilon_inverse(m.d) * mpq_class(nt::kronecker(m.c, m.d));
  bool holds = true;
  const std::size_t n = rho.matrix.rows();
  for (std::size_t beta = 0; beta < n && holds; ++beta) {
    CyclotomicNumber row_sum(mpq_class(0), rho.matrix.order());
    for (std::size_t gamma = 0; gamma < n; ++gamma) row_sum += rho(beta, gamma);
    holds = row_sum == scalar;
  }
  return {std::move(scalar), holds};
}

bool is_unitary(const WeilMatrix& w) { return (w.matrix.adjoint() * w.matrix).is_identity(); }

std::vector<CyclotomicNumber> all_ones(const DiscriminantForm& df) {
  return std::vector<CyclotomicNumber>(static_cast<std::size_t>(df.group_order()),
                                       CyclotomicNumber(mpq_class(1), df.working_order()));
}

}  // namespace weil
