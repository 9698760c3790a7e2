#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace logsine {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : q_(value) {}
    ExactRational(int value) : q_(static_cast<long>(value)) {}
    ExactRational(const BigInt& value) : q_(value) {}
    template <class T, class U>
    ExactRational(const __gmp_expr<T, U>& expr) requires std::is_same_v<T, mpz_t> : q_(BigInt(expr)) {}

    /// Throws std::domain_error when `denominator` is zero.
    ExactRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
    static ExactRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    ExactRational abs() const;
    long double to_long_double() const;

    /// "p/q", or "p" when the denominator is one.
    std::string to_string() const;

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    /// Throws std::domain_error on division by zero.
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    ExactRational operator-() const;

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    explicit ExactRational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_{0};
};

/// base^exponent for a nonnegative exponent.
ExactRational pow(const ExactRational& base, unsigned exponent);

BigInt factorial(unsigned n);

} // namespace logsine
