#include "jointgf/rational.hpp"

#include <stdexcept>

namespace jointgf {

Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integral(const Rational& value) {
    return value.get_den() == 1;
}

bool rational_sqrt(const Rational& value, Rational& root) {
    if (sgn(value) < 0)
        return false;
    const Integer& num = value.get_num();
    const Integer& den = value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

} // namespace jointgf
