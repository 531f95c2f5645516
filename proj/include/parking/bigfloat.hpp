#pragma once

// Minimal RAII handle over an MPFR float. Exact values only meet floating
// point here, at the output boundary.

#include <mpfr.h>

#include <string>

#include "parking/exactalg.hpp"

namespace parking {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultBits = 256;

  explicit BigFloat(mpfr_prec_t bits = kDefaultBits);
  BigFloat(const Rat& q, mpfr_prec_t bits = kDefaultBits);
  BigFloat(const BigFloat& o);
  BigFloat& operator=(const BigFloat& o);
  ~BigFloat();

  static BigFloat pi(mpfr_prec_t bits = kDefaultBits);

  BigFloat sqrt() const;
  BigFloat abs() const;
  BigFloat pow(const Rat& exponent) const;  // positive base only

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend bool operator<(const BigFloat& a, const BigFloat& b);

  double to_double() const;

  // Positional decimal with the given number of significant digits; never
  // uses an exponent.
  std::string to_decimal(unsigned significant_digits) const;

  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace parking
