#include "ctq/rational.hpp"

#include "ctq/error.hpp"

#include <numeric>

namespace ctq {

namespace {

__extension__ using Wide = __int128;

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw InvariantError("rational overflow in multiplication");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw InvariantError("rational overflow in addition");
    return out;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw InvariantError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::to_string() const
{
    std::int64_t rest = den_;
    int twos = 0;
    int fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1)
        return std::to_string(num_) + "/" + std::to_string(den_);

    // Scale to a power-of-ten denominator: den * 2^a * 5^b = 10^digits.
    const int digits = std::max(twos, fives);
    std::int64_t scaled = num_;
    for (int i = twos; i < digits; ++i)
        scaled = checked_mul(scaled, 2);
    for (int i = fives; i < digits; ++i)
        scaled = checked_mul(scaled, 5);

    const bool negative = scaled < 0;
    std::string text = std::to_string(negative ? -scaled : scaled);
    if (digits > 0) {
        if (static_cast<int>(text.size()) <= digits)
            text.insert(0, static_cast<std::size_t>(digits + 1) - text.size(), '0');
        text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + text : text;
}

Rational operator+(const Rational& a, const Rational& b)
{
    const auto g = std::gcd(a.den_, b.den_);
    const auto lhs = checked_mul(a.num_, b.den_ / g);
    const auto rhs = checked_mul(b.num_, a.den_ / g);
    return {checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g)};
}

Rational operator-(const Rational& a, const Rational& b)
{
    return a + Rational(checked_mul(b.num_, -1), b.den_);
}

Rational operator*(const Rational& a, const Rational& b)
{
    const auto g1 = std::gcd(a.num_, b.den_);
    const auto g2 = std::gcd(b.num_, a.den_);
    return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.num_ == 0)
        throw InvariantError("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace ctq
