#include "parking/bigfloat.hpp"

#include <stdexcept>

namespace parking {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rat& q, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(value_, mpfr_get_prec(o.value_));
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(value_, mpfr_get_prec(o.value_));
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::pi(mpfr_prec_t bits) {
  BigFloat r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(mpfr_get_prec(value_));
  mpfr_sqrt(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(mpfr_get_prec(value_));
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const Rat& exponent) const {
  BigFloat e(exponent, mpfr_get_prec(value_));
  BigFloat r(mpfr_get_prec(value_));
  mpfr_pow(r.value_, value_, e.value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_decimal(unsigned significant_digits) const {
  if (significant_digits == 0) throw std::invalid_argument("precision must be positive");
  if (mpfr_zero_p(value_)) {
    return significant_digits > 1 ? "0." + std::string(significant_digits - 1, '0') : "0";
  }
  if (!mpfr_number_p(value_)) throw std::domain_error("non-finite value");
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, significant_digits, value_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // value = 0.d1d2... * 10^exp10
  std::string out;
  if (exp10 <= 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + digits;
  } else if (static_cast<std::size_t>(exp10) >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exp10) - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exp10)) + "." + digits.substr(static_cast<std::size_t>(exp10));
  }
  return sign + out;
}

}  // namespace parking
