#include "logsine/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace logsine {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw std::domain_error("ExactRational: zero denominator");
    }
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return ExactRational(BigInt(s, 10));
        }
        const BigInt num(s.substr(0, slash), 10);
        const BigInt den(s.substr(slash + 1), 10);
        if (den < 0) {
            throw std::invalid_argument("ExactRational::parse: negative denominator in '" + s + "'");
        }
        return ExactRational(num, den);
    } catch (const std::domain_error&) {
        throw std::invalid_argument("ExactRational::parse: zero denominator in '" + s + "'");
    } catch (const std::invalid_argument&) {
        // gmpxx reports malformed digits as invalid_argument
        throw std::invalid_argument("ExactRational::parse: malformed '" + s + "'");
    }
}

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(q_))); }

namespace {

// Top 64 bits of |v| as an exact long double; `shift` receives the dropped bit count.
long double leading_bits(const BigInt& v, long& shift) {
    const long bits = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
    shift = bits > 64 ? bits - 64 : 0;
    const BigInt top = ::abs(v) >> shift;
    const BigInt low_mask(0xFFFFFFFFUL);
    const unsigned long lo = BigInt(top & low_mask).get_ui();
    const unsigned long hi = BigInt(top >> 32).get_ui();
    return static_cast<long double>(hi) * 4294967296.0L + static_cast<long double>(lo);
}

} // namespace

long double ExactRational::to_long_double() const {
    if (is_zero()) {
        return 0.0L;
    }
    // Operands up to 64 bits convert exactly, leaving one rounding in the division.
    long num_shift = 0;
    long den_shift = 0;
    const long double num = leading_bits(q_.get_num(), num_shift);
    const long double den = leading_bits(q_.get_den(), den_shift);
    const long double r = std::ldexp(num / den, static_cast<int>(num_shift - den_shift));
    return sign() < 0 ? -r : r;
}

std::string ExactRational::to_string() const { return q_.get_str(10); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    q_ += rhs.q_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("ExactRational: division by zero");
    }
    q_ /= rhs.q_;
    return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-q_)); }

ExactRational pow(const ExactRational& base, unsigned exponent) {
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return ExactRational(num, den);
}

BigInt factorial(unsigned n) {
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

} // namespace logsine
