#include "rfps/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "rfps/errors.hpp"

namespace rfps {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw domain_violation("a series needs at least the constant coefficient");
    }
}

Series Series::polynomial(std::span<const Scalar> coeffs, std::size_t order)
{
    Series s(order);
    const std::size_t n = std::min(coeffs.size(), order + 1);
    std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
    return s;
}

Series Series::polynomial(std::initializer_list<Scalar> coeffs, std::size_t order)
{
    return polynomial(std::span<const Scalar>(coeffs.begin(), coeffs.size()), order);
}

Series Series::constant(const Scalar& value, std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(const Scalar& value, std::size_t degree, std::size_t order)
{
    Series s(order);
    if (degree <= order) {
        s.coeffs_[degree] = value;
    }
    return s;
}

Series Series::x(std::size_t order)
{
    return monomial(1, 1, order);
}

const Scalar& Series::coeff(std::size_t m) const
{
    if (m > order()) {
        throw out_of_window(m, order());
    }
    return coeffs_[m];
}

Series Series::retruncate(std::size_t new_order) const
{
    if (new_order > order()) {
        throw domain_violation("cannot retruncate from order " + std::to_string(order())
                               + " up to " + std::to_string(new_order));
    }
    return Series(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series Series::zero_extend(std::size_t new_order) const
{
    if (new_order < order()) {
        throw domain_violation("zero_extend cannot lower the order");
    }
    Series s(new_order);
    std::copy(coeffs_.begin(), coeffs_.end(), s.coeffs_.begin());
    return s;
}

bool Series::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
}

Series& Series::operator+=(const Series& rhs)
{
    if (order() != rhs.order()) {
        throw order_mismatch(order(), rhs.order());
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

Series& Series::operator-=(const Series& rhs)
{
    if (order() != rhs.order()) {
        throw order_mismatch(order(), rhs.order());
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

Series& Series::operator*=(const Series& rhs)
{
    *this = *this * rhs;
    return *this;
}

Series& Series::operator*=(const Scalar& rhs)
{
    for (auto& c : coeffs_) {
        c *= rhs;
    }
    return *this;
}

Series operator+(Series lhs, const Series& rhs)
{
    lhs += rhs;
    return lhs;
}

Series operator-(Series lhs, const Series& rhs)
{
    lhs -= rhs;
    return lhs;
}

Series operator-(Series value)
{
    value *= Scalar(-1);
    return value;
}

Series operator*(const Series& lhs, const Series& rhs)
{
    if (lhs.order() != rhs.order()) {
        throw order_mismatch(lhs.order(), rhs.order());
    }
    const std::size_t n = lhs.order();
    Series out(n);
    // Skip zero coefficients; sparse inputs (aerated series, monomials) are common.
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (rhs[j] != 0) {
                out[i + j] += lhs[i] * rhs[j];
            }
        }
    }
    return out;
}

Series operator*(Series lhs, const Scalar& rhs)
{
    lhs *= rhs;
    return lhs;
}

Series operator*(const Scalar& lhs, Series rhs)
{
    rhs *= lhs;
    return rhs;
}

Series pow(const Series& base, unsigned k)
{
    Series result = Series::constant(1, base.order());
    Series b = base;
    while (k != 0) {
        if ((k & 1U) != 0) {
            result *= b;
        }
        k >>= 1U;
        if (k != 0) {
            b *= b;
        }
    }
    return result;
}

Series lift(const Series& a, std::size_t k)
{
    Series out(a.order() + k);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        out[i + k] = a[i];
    }
    return out;
}

Series drop(const Series& a, std::size_t k)
{
    if (k > a.order()) {
        throw domain_violation("cannot divide by x^" + std::to_string(k) + " at order "
                               + std::to_string(a.order()));
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] != 0) {
            throw domain_violation("series is not divisible by x^" + std::to_string(k));
        }
    }
    return Series(std::vector<Scalar>(a.coeffs().begin() + k, a.coeffs().end()));
}

std::optional<std::size_t> order_of(const Series& a)
{
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a[i] != 0) {
            return i;
        }
    }
    return std::nullopt;
}

SeriesClass classify(const Series& a)
{
    const auto ord = order_of(a);
    if (!ord) {
        return SeriesClass::zero;
    }
    if (*ord == 0) {
        return SeriesClass::unit;
    }
    return *ord == 1 ? SeriesClass::delta : SeriesClass::positive;
}

const char* to_string(SeriesClass cls)
{
    switch (cls) {
    case SeriesClass::unit:
        return "unit";
    case SeriesClass::delta:
        return "delta";
    case SeriesClass::positive:
        return "positive";
    case SeriesClass::zero:
        return "zero";
    }
    return "?";
}

UnitSeries::UnitSeries(Series s) : s_(std::move(s))
{
    if (s_[0] == 0) {
        throw domain_violation("unit series needs a nonzero constant term");
    }
}

UnitSeries UnitSeries::one(std::size_t order)
{
    return UnitSeries(Series::constant(1, order));
}

DeltaSeries::DeltaSeries(Series s) : s_(std::move(s))
{
    if (s_.order() < 1) {
        throw domain_violation("delta series needs truncation order >= 1");
    }
    if (s_[0] != 0) {
        throw domain_violation("delta series needs a zero constant term");
    }
    if (s_[1] == 0) {
        throw domain_violation("delta series needs a nonzero x coefficient");
    }
}

DeltaSeries DeltaSeries::identity(std::size_t order)
{
    return DeltaSeries(Series::x(order));
}

PositiveSeries::PositiveSeries(Series s) : s_(std::move(s)), ord_(0)
{
    if (s_[0] != 0) {
        throw domain_violation("positive-order series needs a zero constant term");
    }
    const auto ord = order_of(s_);
    if (!ord) {
        throw domain_violation("positive-order series is zero through the truncation order");
    }
    ord_ = *ord;
}

PositiveSeries::PositiveSeries(const DeltaSeries& d) : s_(d.series()), ord_(1) {}

UnitSeries recip(const UnitSeries& a)
{
    const std::size_t n = a.order();
    const Scalar inv0 = 1 / a[0];
    Series b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a[i] != 0) {
                acc += a[i] * b[k - i];
            }
        }
        b[k] = -acc * inv0;
    }
    return UnitSeries(std::move(b));
}

Series lifted_power(const PositiveSeries& b, unsigned k)
{
    if (k == 0) {
        return Series::constant(1, b.order());
    }
    const std::size_t v = b.ord();
    const Series unit = drop(b.series(), v);
    return lift(pow(unit, k), static_cast<std::size_t>(k) * v);
}

} // namespace rfps
