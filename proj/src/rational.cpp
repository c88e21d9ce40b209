#include "surml/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace surml {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational rational_from_string(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("rational: cannot parse '" + std::string(s) + "'");
    };

    std::string_view rest = s;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest.empty()) fail();

    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty()) fail();

    // Fraction form p/q.
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        std::string_view num = rest.substr(0, slash);
        std::string_view den = rest.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail();
        Rational q(Integer(std::string(num)), Integer(std::string(den)));
        if (q.get_den() == 0) fail();
        q.canonicalize();
        return negative ? Rational(-q) : q;
    }

    // Decimal form with optional exponent: digits[.digits][e[+-]digits]
    std::string_view mantissa = rest;
    long exponent = 0;
    if (auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
        mantissa = rest.substr(0, epos);
        std::string_view es = rest.substr(epos + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es)) fail();
        exponent = std::stol(std::string(es));
        if (eneg) exponent = -exponent;
    }

    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (char c : mantissa) {
        if (c == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            fail();
        }
    }
    if (digits.empty()) fail();

    Integer num(digits);
    Integer den(1);
    long shift = exponent - frac_digits;
    Integer ten(10);
    if (shift >= 0) {
        Integer pow;
        mpz_pow_ui(pow.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
        num *= pow;
    } else {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
    }
    if (negative) num = -num;
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

bool is_canonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}

}  // namespace surml
