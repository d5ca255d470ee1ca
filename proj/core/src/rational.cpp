#include "flatnorm/rational.hpp"

#include "flatnorm/errors.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace flatnorm {

bool is_integer(const Rational& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw Error("cannot convert non-finite double to rational");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty rational literal");

    if (s.find('/') != std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw ParseError("bad rational literal: " + text);
        if (mpz_sgn(q.get_den().get_mpz_t()) == 0)
            throw ParseError("zero denominator: " + text);
        q.canonicalize();
        return q;
    }

    // Decimal / scientific literal, parsed digit-exactly.
    bool negative = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');

    std::string digits;
    long frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    long exponent = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
            seen_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exponent = std::stol(s.substr(i + 1));
            break;
        } else {
            throw ParseError("bad rational literal: " + text);
        }
    }
    if (!seen_digit) throw ParseError("bad rational literal: " + text);

    Integer num(digits.empty() ? "0" : digits);
    if (negative) num = -num;
    long ten_power = exponent - frac_digits;
    Rational q(num);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(ten_power)));
    if (ten_power >= 0)
        q *= Rational(scale);
    else
        q /= Rational(scale);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) throw Error("rational is not an integer: " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw Error("integer overflows int64: " + q.get_str());
    return static_cast<std::int64_t>(q.get_num().get_si());
}

} // namespace flatnorm
