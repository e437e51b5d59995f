#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

namespace graphrel {

/// Exact rational used for every measure in exact mode.
using Rational = boost::multiprecision::mpq_rational;

/// Shortest-path and stress counts. Arithmetic on counts is overflow-checked.
using Count = std::uint64_t;

/// Absolute tolerance used by the floating mode for identity/inequality checks.
inline constexpr double kFloatTolerance = 1e-9;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational>
{
    static constexpr bool exact = true;

    static Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }
    static Rational from_count(Count c) { return Rational(c); }
    static double to_double(const Rational& x) { return x.convert_to<double>(); }
    static std::string to_string(const Rational& x)
    {
        std::string s = boost::multiprecision::numerator(x).str();
        s += '/';
        s += boost::multiprecision::denominator(x).str();
        return s;
    }
    static bool is_zero(const Rational& x) { return x == 0; }
    static bool is_nonnegative(const Rational& x) { return x >= 0; }
};

template <>
struct ScalarTraits<double>
{
    static constexpr bool exact = false;

    static double ratio(std::int64_t num, std::int64_t den)
    {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double from_count(Count c) { return static_cast<double>(c); }
    static double to_double(double x) { return x; }
    static std::string to_string(double x);
    static bool is_zero(double x) { return std::abs(x) <= kFloatTolerance; }
    static bool is_nonnegative(double x) { return x >= -kFloatTolerance; }
};

template <typename Scalar>
inline Scalar ratio(std::int64_t num, std::int64_t den)
{
    return ScalarTraits<Scalar>::ratio(num, den);
}

template <typename Scalar>
inline double to_double(const Scalar& x)
{
    return ScalarTraits<Scalar>::to_double(x);
}

template <typename Scalar>
inline std::string to_string(const Scalar& x)
{
    return ScalarTraits<Scalar>::to_string(x);
}

inline Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("shortest-path count overflow");
    return r;
}

inline Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("shortest-path count overflow");
    return r;
}

} // namespace graphrel
