/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <hamtough/rational.hh>

#include <charconv>
#include <limits>
#include <stdexcept>

using std::int64_t;
using std::string;
using std::string_view;

namespace hamtough
{
    namespace
    {
        auto gcd128(__int128 a, __int128 b) -> __int128
        {
            if (a < 0)
                a = -a;
            if (b < 0)
                b = -b;
            while (b != 0) {
                auto t = a % b;
                a = b;
                b = t;
            }
            return a;
        }

        auto parse_int(string_view text) -> int64_t
        {
            int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw std::invalid_argument("not an integer: \"" + string(text) + "\"");
            return value;
        }
    }

    Rational::Rational(int64_t num, int64_t den)
    {
        *this = reduced(num, den);
    }

    auto Rational::reduced(__int128 num, __int128 den) -> Rational
    {
        if (den == 0)
            throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = std::numeric_limits<int64_t>::min(), hi = std::numeric_limits<int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("rational overflow");
        Rational result;
        result._num = static_cast<int64_t>(num);
        result._den = static_cast<int64_t>(den);
        return result;
    }

    auto Rational::to_string() const -> string
    {
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    auto Rational::parse(string_view text) -> Rational
    {
        auto slash = text.find('/');
        if (slash == string_view::npos)
            return Rational{parse_int(text)};
        return Rational{parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
    }

    auto operator+(const Rational & a, const Rational & b) -> Rational
    {
        return Rational::reduced(__int128{a._num} * b._den + __int128{b._num} * a._den, __int128{a._den} * b._den);
    }

    auto operator-(const Rational & a, const Rational & b) -> Rational
    {
        return Rational::reduced(__int128{a._num} * b._den - __int128{b._num} * a._den, __int128{a._den} * b._den);
    }

    auto operator*(const Rational & a, const Rational & b) -> Rational
    {
        return Rational::reduced(__int128{a._num} * b._num, __int128{a._den} * b._den);
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        return Rational::reduced(__int128{a._num} * b._den, __int128{a._den} * b._num);
    }

    auto Rational::operator-() const -> Rational
    {
        return reduced(-__int128{_num}, _den);
    }

    auto operator<=>(const Rational & a, const Rational & b) noexcept -> std::strong_ordering
    {
        auto lhs = __int128{a._num} * b._den, rhs = __int128{b._num} * a._den;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
}
