#include "jointgf/real.hpp"

namespace jointgf {

void set_real_precision(unsigned decimal_digits) {
    if (decimal_digits < 20)
        decimal_digits = 20;
    Real::default_precision(decimal_digits);
}

unsigned real_precision() {
    return Real::default_precision();
}

Real to_real(const Rational& value) {
    Real r(0);
    mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& value) {
    Real r(0);
    mpfr_set_z(r.backend().data(), value.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real pi_value() {
    Real r(0);
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

} // namespace jointgf
