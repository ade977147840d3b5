#include "rfps/compose.hpp"

#include <utility>
#include <vector>

#include "rfps/errors.hpp"

namespace rfps {

Series compose(const Series& outer, const PositiveSeries& inner)
{
    if (outer.order() != inner.order()) {
        throw order_mismatch(outer.order(), inner.order());
    }
    const std::size_t n = outer.order();
    // inner^k starts at x^(k*ord), so only outer_0..outer_{n/ord} contribute.
    const std::size_t top = n / inner.ord();
    Series acc = Series::constant(outer[top], n);
    for (std::size_t i = top; i-- > 0;) {
        acc = acc * inner.series();
        acc[0] += outer[i];
    }
    return acc;
}

UnitSeries compose(const UnitSeries& outer, const PositiveSeries& inner)
{
    return UnitSeries(compose(outer.series(), inner));
}

DeltaSeries compose(const DeltaSeries& outer, const DeltaSeries& inner)
{
    return DeltaSeries(compose(outer.series(), PositiveSeries(inner)));
}

DeltaSeries comp_inverse(const DeltaSeries& f)
{
    const std::size_t n = f.order();
    // powers[k] = f^k, k = 1..n.
    std::vector<Series> powers;
    powers.reserve(n + 1);
    powers.emplace_back(Series::constant(1, n));
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * f.series());
    }

    Series inv(n);
    Scalar pivot = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        pivot *= f[1];
        // [x^m] sum_k inv_k f^k = [m == 1]; f^k contributes only for k <= m.
        Scalar rhs = m == 1 ? Scalar(1) : Scalar(0);
        for (std::size_t k = 1; k < m; ++k) {
            if (inv[k] != 0) {
                rhs -= inv[k] * powers[k][m];
            }
        }
        inv[m] = rhs / pivot;
    }
    return DeltaSeries(std::move(inv));
}

DeltaSeries comp_inverse_lagrange(const DeltaSeries& f)
{
    const std::size_t n = f.order();
    // x / f(x) at order n - 1; only [x^(m-1)] for m <= n is needed.
    const UnitSeries quotient = recip(UnitSeries(drop(f.series(), 1)));

    Series inv(n);
    Series power = Series::constant(1, n - 1);
    for (std::size_t m = 1; m <= n; ++m) {
        power *= quotient.series();
        inv[m] = power[m - 1] / Scalar(static_cast<unsigned long>(m));
    }
    return DeltaSeries(std::move(inv));
}

DeltaSeries iterate(const DeltaSeries& f, unsigned k)
{
    DeltaSeries result = DeltaSeries::identity(f.order());
    for (unsigned i = 0; i < k; ++i) {
        result = compose(f, result);
    }
    return result;
}

} // namespace rfps
