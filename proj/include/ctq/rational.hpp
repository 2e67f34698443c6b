#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ctq {

/// Exact non-float ratio used for every average this library reports.
/// Always stored reduced with a positive denominator. Arithmetic is
/// overflow-checked and throws InvariantError instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Exact decimal text ("26.8", "17", "-0.25") when the denominator has
    /// only factors 2 and 5; otherwise "num/den".
    std::string to_string() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ctq
