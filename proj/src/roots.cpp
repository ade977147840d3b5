#include "rfps/roots.hpp"

#include <string>
#include <utility>

#include "rfps/compose.hpp"
#include "rfps/errors.hpp"

namespace rfps {

UnitSeries unit_root(const UnitSeries& a, unsigned n)
{
    if (n == 0) {
        throw domain_violation("root index must be positive");
    }
    if (a[0] != 1) {
        throw domain_violation("unit_root needs constant term 1, got " + to_string(a[0]));
    }
    const std::size_t order = a.order();
    Series tail = a.series();
    tail[0] = 0;
    const auto v = order_of(tail);
    if (!v) {
        return UnitSeries::one(order);
    }

    const Scalar exponent(1, n);
    Series result = Series::constant(1, order);
    Series power = Series::constant(1, order);
    Scalar coef = 1;
    // A^j starts at x^(j*v); stop once it leaves the window.
    for (std::size_t j = 1; j * *v <= order; ++j) {
        power *= tail;
        coef *= exponent - static_cast<unsigned long>(j - 1);
        coef /= static_cast<unsigned long>(j);
        result += coef * power;
    }
    return UnitSeries(std::move(result));
}

Series NormalForm::reconstruct() const
{
    Series out = ar * lifted_power(PositiveSeries(A), r);
    out[0] += a0;
    return out;
}

NormalForm normal_form(const Series& a)
{
    Series tail = a;
    tail[0] = 0;
    const auto r = order_of(tail);
    if (!r) {
        throw domain_violation("normal form needs a non-constant series");
    }
    const Scalar ar = a[*r];
    Series hat = drop(tail, *r);
    hat *= Scalar(1 / ar);
    const unsigned root = static_cast<unsigned>(*r);
    Series monic = lift(unit_root(UnitSeries(std::move(hat)), root), 1);
    return NormalForm{a[0], ar, root, DeltaSeries(std::move(monic)), a.order()};
}

DeltaSeries positive_root(const PositiveSeries& a, unsigned q, const Scalar& b1)
{
    if (a.ord() != q) {
        throw domain_violation("series has order " + std::to_string(a.ord())
                               + "; a delta-shaped " + std::to_string(q)
                               + "-th root needs order " + std::to_string(q));
    }
    if (power(b1, q) != a[q]) {
        throw domain_violation(to_string(b1) + " is not a " + std::to_string(q)
                               + "-th root of the leading coefficient " + to_string(a[q]));
    }
    const NormalForm nf = normal_form(a.series());
    return DeltaSeries(b1 * nf.A.series());
}

PositiveSeries solve_inner(const Series& g, const Series& c, const Scalar& a_s, unsigned s)
{
    if (g.order() != c.order()) {
        throw order_mismatch(g.order(), c.order());
    }
    if (s == 0 || a_s == 0) {
        throw domain_violation("inner series needs a nonzero leading term a_s x^s with s >= 1");
    }
    const std::size_t n = g.order();
    const NormalForm nf = normal_form(g);
    const std::size_t r = nf.r;
    const std::size_t lead = r * s;
    if (lead > n) {
        throw domain_violation("g(a) starts at x^" + std::to_string(lead)
                               + ", beyond truncation order " + std::to_string(n));
    }

    Series p = c;
    p[0] -= nf.a0;
    p *= Scalar(1 / nf.ar);
    const auto ord = order_of(p);
    if (!ord || *ord != lead) {
        throw no_solution("no inner series: (c - g0)/g_r must start at x^" + std::to_string(lead));
    }
    const Scalar lead_coef = power(a_s, nf.r);
    if (p[lead] != lead_coef) {
        throw no_solution("no inner series: leading coefficient " + to_string(p[lead])
                          + " differs from a_s^r = " + to_string(lead_coef));
    }

    Series hat = drop(p, lead);
    hat *= Scalar(1 / lead_coef);
    // G(a) at order n - (r-1) s.
    const PositiveSeries g_of_a(a_s * lift(unit_root(UnitSeries(std::move(hat)), nf.r), s));
    const std::size_t out_order = g_of_a.order();

    const DeltaSeries g_inv = comp_inverse(DeltaSeries(nf.A.series().retruncate(out_order)));
    Series a = compose(g_inv.series(), g_of_a);

    // Coefficients of a above out_order do not reach c through x^n.
    if (compose(g, PositiveSeries(a.zero_extend(n))) != c) {
        throw no_solution("no inner series: g(a) does not reproduce c");
    }
    return PositiveSeries(std::move(a));
}

} // namespace rfps
