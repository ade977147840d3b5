#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rfps/scalar.hpp"

namespace rfps {

// Formal power series c_0 + c_1 x + ... + c_N x^N, exact through the
// truncation order N. Everything above x^N is unknown, not zero.
class Series {
public:
    // The zero series at order N.
    explicit Series(std::size_t order);

    // Order is coeffs.size() - 1; coeffs must not be empty.
    explicit Series(std::vector<Scalar> coeffs);

    // A polynomial viewed at order N: pads with zeros, drops terms above x^N.
    static Series polynomial(std::span<const Scalar> coeffs, std::size_t order);
    static Series polynomial(std::initializer_list<Scalar> coeffs, std::size_t order);
    static Series constant(const Scalar& value, std::size_t order);
    static Series monomial(const Scalar& value, std::size_t degree, std::size_t order);
    static Series x(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

    // Unchecked access, i <= order().
    const Scalar& operator[](std::size_t i) const noexcept { return coeffs_[i]; }
    Scalar& operator[](std::size_t i) noexcept { return coeffs_[i]; }

    // Checked [x^m]; throws out_of_window when m > order().
    const Scalar& coeff(std::size_t m) const;

    // Same series viewed at a lower order N' <= N.
    Series retruncate(std::size_t new_order) const;

    // Same series padded with zeros up to N' >= N. Only exact when the
    // caller knows the hidden coefficients vanish (or do not matter).
    Series zero_extend(std::size_t new_order) const;

    bool is_zero() const noexcept;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator*=(const Scalar& rhs);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Scalar> coeffs_;
};

Series operator+(Series lhs, const Series& rhs);
Series operator-(Series lhs, const Series& rhs);
Series operator-(Series value);
Series operator*(const Series& lhs, const Series& rhs);
Series operator*(Series lhs, const Scalar& rhs);
Series operator*(const Scalar& lhs, Series rhs);

// k-th power at the same order.
Series pow(const Series& base, unsigned k);

// x^k * a, carried to order N + k (exact).
Series lift(const Series& a, std::size_t k);

// a / x^k at order N - k; the low k coefficients must vanish.
Series drop(const Series& a, std::size_t k);

// Index of the first nonzero coefficient, or nullopt for the zero series.
std::optional<std::size_t> order_of(const Series& a);

enum class SeriesClass { unit, delta, positive, zero };

// Most specific class of a: delta wins over positive.
SeriesClass classify(const Series& a);

const char* to_string(SeriesClass cls);

// c_0 != 0.
class UnitSeries {
public:
    explicit UnitSeries(Series s);
    static UnitSeries one(std::size_t order);

    const Series& series() const noexcept { return s_; }
    operator const Series&() const noexcept { return s_; }
    std::size_t order() const noexcept { return s_.order(); }
    const Scalar& operator[](std::size_t i) const noexcept { return s_[i]; }

    friend bool operator==(const UnitSeries&, const UnitSeries&) = default;

private:
    Series s_;
};

// c_0 = 0, c_1 != 0.
class DeltaSeries {
public:
    explicit DeltaSeries(Series s);
    static DeltaSeries identity(std::size_t order);

    const Series& series() const noexcept { return s_; }
    operator const Series&() const noexcept { return s_; }
    std::size_t order() const noexcept { return s_.order(); }
    const Scalar& operator[](std::size_t i) const noexcept { return s_[i]; }

    friend bool operator==(const DeltaSeries&, const DeltaSeries&) = default;

private:
    Series s_;
};

// c_0 = 0 and not identically zero through N; ord() is the first nonzero index.
class PositiveSeries {
public:
    explicit PositiveSeries(Series s);
    PositiveSeries(const DeltaSeries& d); // NOLINT: every delta series is positive

    const Series& series() const noexcept { return s_; }
    operator const Series&() const noexcept { return s_; }
    std::size_t order() const noexcept { return s_.order(); }
    std::size_t ord() const noexcept { return ord_; }
    const Scalar& operator[](std::size_t i) const noexcept { return s_[i]; }

    friend bool operator==(const PositiveSeries&, const PositiveSeries&) = default;

private:
    Series s_;
    std::size_t ord_;
};

// Multiplicative inverse, exact through N.
UnitSeries recip(const UnitSeries& a);

// b^k for b of valuation v at order N, carried to order N + (k-1) v.
// Every output coefficient is determined by b through x^N.
Series lifted_power(const PositiveSeries& b, unsigned k);

} // namespace rfps
