#include "weil/metaplectic.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "weil/numtheory.hpp"

namespace weil {

std::int64_t IntMatrix2::det() const { return nt::checked_add(nt::checked_mul(a, d), -nt::checked_mul(b, c)); }

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& r) const {
  using nt::checked_add;
  using nt::checked_mul;
  return {checked_add(checked_mul(a, r.a), checked_mul(b, r.c)), checked_add(checked_mul(a, r.b), checked_mul(b, r.d)),
          checked_add(checked_mul(c, r.a), checked_mul(d, r.c)), checked_add(checked_mul(c, r.b), checked_mul(d, r.d))};
}

MpElement::MpElement(const IntMatrix2& m, int sign) : m_(m), sign_(sign) {
  if (m.det() != 1) throw std::invalid_argument("MpElement: determinant must be 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("MpElement: sign must be +1 or -1");
}

MpElement MpElement::T() { return MpElement({1, 1, 0, 1}, 1); }
MpElement MpElement::S() { return MpElement({0, -1, 1, 0}, 1); }
MpElement MpElement::Z() { return MpElement({-1, 0, 0, -1}, 1); }

MpElement mp_tilde(const IntMatrix2& m) { return MpElement(m, 1); }

namespace {

// Principal argument of d + 2ci, the value of c tau + d at tau0 = 2i.
long double probe_arg(std::int64_t c, std::int64_t d) {
  return std::atan2(2.0L * static_cast<long double>(c), static_cast<long double>(d));
}

}  // namespace

MpElement mp_mul(const MpElement& g1, const MpElement& g2) {
  const IntMatrix2 m = g1.matrix() * g2.matrix();
  // phi1(M2 tau0) phi2(tau0) = s1 s2 sqrt(z / z2) sqrt(z2), with z2 = c2 tau0 + d2 and
  // z = c tau0 + d for the product. Comparing with sqrt(z) leaves (-1)^k where
  // Arg(z) - Arg(z2) = Arg(z / z2) + 2 pi k.
  const std::int64_t c2 = g2.matrix().c, d2 = g2.matrix().d;
  // w = z * conj(z2), exact.
  const __int128 re = static_cast<__int128>(m.d) * d2 + static_cast<__int128>(4) * m.c * c2;
  const __int128 im = static_cast<__int128>(2) * m.c * d2 - static_cast<__int128>(2) * m.d * c2;
  const long double arg_w = (im == 0 && re < 0) ? std::numbers::pi_v<long double>
                                                 : std::atan2(static_cast<long double>(im), static_cast<long double>(re));
  const long double diff = probe_arg(m.c, m.d) - probe_arg(c2, d2);
  const long long k = std::llround((diff - arg_w) / (2.0L * std::numbers::pi_v<long double>));
  const int branch = (k % 2 == 0) ? 1 : -1;
  return MpElement(m, g1.sign() * g2.sign() * branch);
}

MpElement mp_inverse(const MpElement& g) {
  const IntMatrix2& m = g.matrix();
  const IntMatrix2 inv{m.d, -m.b, -m.c, m.a};
  MpElement candidate(inv, 1);
  if (mp_mul(g, candidate) == MpElement::identity()) return candidate;
  return MpElement(inv, -1);
}

MpElement mp_pow(const MpElement& g, std::int64_t n) {
  MpElement base = n < 0 ? mp_inverse(g) : g;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  MpElement result;
  while (e > 0) {
    if (e & 1U) result = mp_mul(result, base);
    e >>= 1U;
    if (e > 0) base = mp_mul(base, base);
  }
  return result;
}

MpElement generator_element(Generator g) {
  switch (g) {
    case Generator::S:
      return MpElement::S();
    case Generator::SInv:
      return mp_inverse(MpElement::S());
    case Generator::T:
      return MpElement::T();
    case Generator::TInv:
      return mp_inverse(MpElement::T());
    case Generator::Z:
      return MpElement::Z();
  }
  throw std::logic_error("unknown generator");
}

MpElement word_product(const Word& w) {
  MpElement result;
  for (Generator g : w.letters) result = mp_mul(result, generator_element(g));
  return mp_mul(result, mp_pow(MpElement::Z(), w.z_power));
}

namespace {

Generator inverse_letter(Generator g) {
  switch (g) {
    case Generator::S:
      return Generator::SInv;
    case Generator::SInv:
      return Generator::S;
    case Generator::T:
      return Generator::TInv;
    case Generator::TInv:
      return Generator::T;
    case Generator::Z:
      break;
  }
  throw std::logic_error("inverse_letter: Z is not used as a letter here");
}

void append_t_power(std::vector<Generator>& out, std::int64_t n) {
  const Generator g = n >= 0 ? Generator::T : Generator::TInv;
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) out.push_back(g);
}

}  // namespace

Word mp_decompose(const MpElement& g) {
  // Reduce the bottom row by left multiplication with T-powers and S until
  // c = 0; the applied multipliers, inverted in reverse, spell g.
  std::vector<Generator> applied;
  MpElement x = g;
  const MpElement t = MpElement::T();
  const MpElement t_inv = mp_inverse(t);
  const MpElement s = MpElement::S();
  while (x.matrix().c != 0) {
    const std::int64_t q = nt::floor_div(x.matrix().a, x.matrix().c);
    // T^-q x has top-left entry a - q c with |a - q c| < |c|.
    const MpElement shift = q >= 0 ? t_inv : t;
    for (std::int64_t i = 0; i < (q >= 0 ? q : -q); ++i) {
      x = mp_mul(shift, x);
      applied.push_back(q >= 0 ? Generator::TInv : Generator::T);
    }
    x = mp_mul(s, x);
    applied.push_back(Generator::S);
  }
  Word word;
  for (Generator a : applied) word.letters.push_back(inverse_letter(a));
  const std::int64_t n = x.matrix().b * x.matrix().d;
  append_t_power(word.letters, n);
  const MpElement rest = mp_mul(mp_pow(t, -n), x);
  MpElement z_pow;
  for (int j = 0; j < 4; ++j) {
    if (z_pow == rest) {
      word.z_power = j;
      return word;
    }
    z_pow = mp_mul(z_pow, MpElement::Z());
  }
  throw std::logic_error("mp_decompose: residual is not central");
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "S") {
      w.letters.push_back(Generator::S);
    } else if (tok == "S'") {
      w.letters.push_back(Generator::SInv);
    } else if (tok == "T") {
      w.letters.push_back(Generator::T);
    } else if (tok == "T'") {
      w.letters.push_back(Generator::TInv);
    } else if (tok == "Z") {
      w.z_power = (w.z_power + 1) % 4;
    } else {
      throw std::invalid_argument("parse_word: unknown token '" + tok + "'");
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  auto emit = [&out](const char* t) {
    if (!out.empty()) out += ' ';
    out += t;
  };
  for (Generator g : w.letters) {
    switch (g) {
      case Generator::S:
        emit("S");
        break;
      case Generator::SInv:
        emit("S'");
        break;
      case Generator::T:
        emit("T");
        break;
      case Generator::TInv:
        emit("T'");
        break;
      case Generator::Z:
        emit("Z");
        break;
    }
  }
  for (int i = 0; i < w.z_power; ++i) emit("Z");
  return out;
}

std::ostream& operator<<(std::ostream& os, const MpElement& g) {
  const auto& m = g.matrix();
  return os << "((" << m.a << " " << m.b << "; " << m.c << " " << m.d << "), " << (g.sign() > 0 ? "+" : "-") << ")";
}

}  // namespace weil
