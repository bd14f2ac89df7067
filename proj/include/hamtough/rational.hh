/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef HAMTOUGH_GUARD_RATIONAL_HH
#define HAMTOUGH_GUARD_RATIONAL_HH 1

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hamtough
{
    /**
     * An exact fraction num/den in lowest terms with den >= 1. Arithmetic is
     * carried out in 128 bits and throws std::overflow_error if the reduced
     * result does not fit back into 64 bits. Comparisons never round.
     */
    class Rational
    {
    public:
        constexpr Rational() noexcept = default;
        Rational(std::int64_t num, std::int64_t den = 1);

        auto num() const noexcept -> std::int64_t { return _num; }
        auto den() const noexcept -> std::int64_t { return _den; }

        /// "p/q", always with the denominator, so 2 renders as "2/1".
        auto to_string() const -> std::string;

        /// Accepts "p/q" or a bare integer "p".
        static auto parse(std::string_view text) -> Rational;

        friend auto operator+(const Rational &, const Rational &) -> Rational;
        friend auto operator-(const Rational &, const Rational &) -> Rational;
        friend auto operator*(const Rational &, const Rational &) -> Rational;
        friend auto operator/(const Rational &, const Rational &) -> Rational;
        auto operator-() const -> Rational;

        friend auto operator==(const Rational &, const Rational &) noexcept -> bool = default;
        friend auto operator<=>(const Rational & a, const Rational & b) noexcept -> std::strong_ordering;

    private:
        static auto reduced(__int128 num, __int128 den) -> Rational;

        std::int64_t _num = 0;
        std::int64_t _den = 1;
    };
}

#endif
