#pragma once

#include <complex>
#include <string>

#include <mpfr.h>

namespace weil {

// Owning handle for an mpfr_t with a fixed precision.
class MpfrReal {
 public:
  explicit MpfrReal(mpfr_prec_t precision = 53) { mpfr_init2(value_, precision); mpfr_set_zero(value_, 1); }
  MpfrReal(const MpfrReal& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  MpfrReal(MpfrReal&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
  }
  MpfrReal& operator=(const MpfrReal& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  MpfrReal& operator=(MpfrReal&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~MpfrReal() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal string with the given number of significant digits.
  std::string str(int digits = 0) const;

 private:
  mpfr_t value_;
};

/// A complex value held at arbitrary precision.
struct MpfrComplex {
  MpfrReal re;
  MpfrReal im;

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace weil
