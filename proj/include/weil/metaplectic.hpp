#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace weil {

/// An integer 2x2 matrix (a b; c d).
struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const;
  IntMatrix2 operator*(const IntMatrix2& rhs) const;  // overflow-checked
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// Element (M, phi) of Mp2(Z), phi(tau) = sign * sqrt(c tau + d) on the
/// principal branch (argument in (-pi, pi]; sqrt of a negative real is
/// i sqrt|.|).
class MpElement {
 public:
  MpElement() = default;
  /// Throws std::invalid_argument unless det M = 1 and sign = +-1.
  MpElement(const IntMatrix2& m, int sign);

  const IntMatrix2& matrix() const { return m_; }
  int sign() const { return sign_; }

  static MpElement identity() { return {}; }
  static MpElement T();
  static MpElement S();
  /// Z = S^2 = (-I, i), the central element of order 4.
  static MpElement Z();

  friend bool operator==(const MpElement&, const MpElement&) = default;

 private:
  IntMatrix2 m_{};
  int sign_ = 1;
};

/// M~ = (M, sqrt(c tau + d)).
MpElement mp_tilde(const IntMatrix2& m);

/// (M, phi)(M', phi') = (MM', phi(M' tau) phi'(tau)); the branch sign of the
/// product is read off at the probe point tau0 = 2i.
MpElement mp_mul(const MpElement& g1, const MpElement& g2);

MpElement mp_inverse(const MpElement& g);
MpElement mp_pow(const MpElement& g, std::int64_t n);

enum class Generator { S, SInv, T, TInv, Z };

/// A word in the generators with a residual power of the central Z.
struct Word {
  std::vector<Generator> letters;
  int z_power = 0;  // 0..3

  friend bool operator==(const Word&, const Word&) = default;
};

MpElement generator_element(Generator g);

/// Product of the letters in order, times Z^z_power.
MpElement word_product(const Word& w);

/// A word whose product is exactly g (matrix and branch sign).
Word mp_decompose(const MpElement& g);

/// Whitespace separated tokens "S", "S'", "T", "T'", "Z".
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

std::ostream& operator<<(std::ostream& os, const MpElement& g);

}  // namespace weil
