#include "rfps/riordan.hpp"

#include <algorithm>
#include <utility>

#include "rfps/compose.hpp"
#include "rfps/errors.hpp"
#include "rfps/roots.hpp"

namespace rfps {

RiordanElement::RiordanElement(UnitSeries g, DeltaSeries f) : g_(std::move(g)), f_(std::move(f))
{
    if (g_.order() != f_.order()) {
        throw order_mismatch(g_.order(), f_.order());
    }
}

RiordanElement RiordanElement::identity(std::size_t order)
{
    return RiordanElement(UnitSeries::one(order), DeltaSeries::identity(order));
}

RiordanElement RiordanElement::retruncate(std::size_t new_order) const
{
    return RiordanElement(UnitSeries(g_.series().retruncate(new_order)),
                          DeltaSeries(f_.series().retruncate(new_order)));
}

RiordanElement operator*(const RiordanElement& lhs, const RiordanElement& rhs)
{
    if (lhs.order() != rhs.order()) {
        throw order_mismatch(lhs.order(), rhs.order());
    }
    const PositiveSeries inner(lhs.f());
    UnitSeries g(lhs.g().series() * compose(rhs.g().series(), inner));
    DeltaSeries f = compose(rhs.f(), lhs.f());
    return RiordanElement(std::move(g), std::move(f));
}

RiordanElement inverse(const RiordanElement& a)
{
    DeltaSeries f_inv = comp_inverse(a.f());
    UnitSeries g_inv = recip(compose(a.g(), PositiveSeries(f_inv)));
    return RiordanElement(std::move(g_inv), std::move(f_inv));
}

TriangularBlock::TriangularBlock(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

TriangularBlock operator*(const TriangularBlock& lhs, const TriangularBlock& rhs)
{
    if (lhs.dim() != rhs.dim()) {
        throw order_mismatch(lhs.dim(), rhs.dim());
    }
    const std::size_t d = lhs.dim();
    TriangularBlock out(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            Scalar acc = 0;
            for (std::size_t k = j; k <= i; ++k) {
                acc += lhs(i, k) * rhs(k, j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

TriangularBlock to_matrix(const RiordanElement& a)
{
    const std::size_t n = a.order();
    TriangularBlock block(n + 1);
    Series column = a.g().series();
    for (std::size_t col = 0; col <= n; ++col) {
        for (std::size_t row = col; row <= n; ++row) {
            block(row, col) = column[row];
        }
        if (col < n) {
            column *= a.f().series();
        }
    }
    return block;
}

const char* to_string(OrderCondition c)
{
    return c == OrderCondition::product ? "product" : "iterate";
}

namespace {

// g * g(F) * ... * g(F^(n-1)).
Series product_condition(const RiordanElement& a, unsigned n)
{
    Series prod = a.g().series();
    DeltaSeries iter = a.f();
    for (unsigned k = 1; k < n; ++k) {
        prod *= compose(a.g().series(), PositiveSeries(iter));
        if (k + 1 < n) {
            iter = compose(a.f(), iter);
        }
    }
    return prod;
}

std::optional<OrderWitness> first_mismatch(const Series& actual, const Series& expected,
                                           OrderCondition condition)
{
    for (std::size_t i = 0; i <= actual.order(); ++i) {
        if (actual[i] != expected[i]) {
            return OrderWitness{condition, i, actual[i], expected[i]};
        }
    }
    return std::nullopt;
}

void require_power(unsigned n)
{
    if (n == 0) {
        throw domain_violation("group order must be a positive integer");
    }
}

} // namespace

OrderCheck check_order(const RiordanElement& a, unsigned n)
{
    require_power(n);
    const std::size_t order = a.order();
    OrderCheck out;
    out.witness = first_mismatch(product_condition(a, n), Series::constant(1, order),
                                 OrderCondition::product);
    if (!out.witness) {
        out.witness = first_mismatch(iterate(a.f(), n).series(), Series::x(order),
                                     OrderCondition::iterate);
    }
    out.holds = !out.witness;
    if (out.holds) {
        out.product_through = order;
        out.iterate_through = order;
    }
    return out;
}

OrderCheck check_order_shortcut(const RiordanElement& a, unsigned n)
{
    require_power(n);
    const std::size_t order = a.order();
    Series tail = a.g().series();
    tail[0] = 0;
    const auto r = order_of(tail);

    std::string reason;
    if (!r) {
        reason = "g is constant through the truncation order";
    } else if (power(a.f()[1], n) != 1) {
        reason = "f1^n = " + to_string(power(a.f()[1], n)) + " is not 1";
    }
    if (!reason.empty()) {
        OrderCheck full = check_order(a, n);
        full.note = "shortcut inapplicable: " + reason + "; ran the full check";
        return full;
    }

    OrderCheck out;
    out.shortcut = true;
    out.witness = first_mismatch(product_condition(a, n), Series::constant(1, order),
                                 OrderCondition::product);
    out.holds = !out.witness;
    if (out.holds) {
        out.product_through = order;
        out.iterate_through = order - *r + 1;
    }
    return out;
}

bool InvolutionDiagnostic::necessary_conditions_hold() const noexcept
{
    if (is_identity || !g0_squared_is_one) {
        return false;
    }
    return g_constant ? (is_minus_one_x || f_is_involution) : (r_odd && f1_is_minus_one);
}

std::vector<std::string> InvolutionDiagnostic::failures() const
{
    std::vector<std::string> out;
    if (is_identity) {
        out.emplace_back("(g, F) is the identity (1, x), which has order 1");
    }
    if (!g0_squared_is_one) {
        out.emplace_back("g0^2 != 1");
    }
    if (g_constant) {
        if (!is_minus_one_x && !f_is_involution && !is_identity) {
            out.emplace_back("g is constant but (g, F) is not (-1, x) and F is not an "
                             "involution -x + ...");
        }
    } else {
        if (!r_odd) {
            out.emplace_back("r = " + std::to_string(*r) + " is even");
        }
        if (!f1_is_minus_one) {
            out.emplace_back("f1 != -1");
        }
    }
    return out;
}

InvolutionDiagnostic involution_necessary(const RiordanElement& a)
{
    const std::size_t order = a.order();
    const Scalar& g0 = a.g()[0];
    const Scalar& f1 = a.f()[1];

    InvolutionDiagnostic d;
    d.is_identity = a == RiordanElement::identity(order);
    d.g0_squared_is_one = g0 * g0 == 1;
    d.f1_is_minus_one = f1 == -1;

    Series tail = a.g().series();
    tail[0] = 0;
    d.r = order_of(tail);
    d.g_constant = !d.r;
    if (d.r) {
        d.r_odd = *d.r % 2 == 1;
    } else {
        d.is_minus_one_x = g0 == -1 && a.f() == DeltaSeries::identity(order);
        d.f_is_involution = d.f1_is_minus_one && iterate(a.f(), 2) == DeltaSeries::identity(order);
    }
    return d;
}

RiordanElement involution_from_g(const UnitSeries& g)
{
    const std::size_t order = g.order();
    Series tail = g.series();
    tail[0] = 0;
    if (!order_of(tail)) {
        throw domain_violation("g is constant; involutions (+-1, F) exist for every F = -x + ... "
                               "with F(F(x)) = x, so there is no unique F to construct");
    }
    const NormalForm nf = normal_form(g.series());
    const Scalar& g0 = nf.a0;
    if (g0 * g0 != 1) {
        throw no_solution("g0 = " + to_string(g0) + " but an involution needs g0^2 = 1; "
                          "no involution exists");
    }
    if (nf.r % 2 == 0) {
        throw no_solution("r = " + std::to_string(nf.r) + " even; no involution exists");
    }

    const DeltaSeries& big_g = nf.A;
    const std::size_t out_order = big_g.order();
    // (g0 g)^(1/r) has constant term g0^2 = 1.
    const UnitSeries root(
        unit_root(UnitSeries(g0 * g.series()), nf.r).series().retruncate(out_order));
    const DeltaSeries inner(-(big_g.series() * recip(root).series()));
    DeltaSeries f = compose(comp_inverse(big_g), inner);

    // The product condition sees F only through x^(N - r + 1), so zero padding
    // gives an exact check at the full order of g.
    const Series padded_f = f.series().zero_extend(order);
    if (g.series() * compose(g.series(), PositiveSeries(padded_f)) != Series::constant(1, order)) {
        throw internal_error("constructed F fails g * g(F) = 1");
    }
    RiordanElement out(UnitSeries(g.series().retruncate(out_order)), std::move(f));
    if (!check_order_shortcut(out, 2).holds) {
        throw internal_error("constructed (g, F) fails the order-2 check");
    }
    return out;
}

Series aerate(const Series& g, unsigned q, std::optional<std::size_t> order)
{
    if (q == 0 || q % 2 == 0) {
        throw domain_violation("aeration needs a positive odd integer q, got " + std::to_string(q));
    }
    const std::size_t out_order = order.value_or(g.order());
    if (out_order / q > g.order()) {
        throw domain_violation("aerating to order " + std::to_string(out_order) + " needs g through x^"
                               + std::to_string(out_order / q));
    }
    Series h(out_order);
    for (std::size_t n = 0; n * q <= out_order; ++n) {
        h[n * q] = g[n];
    }
    return h;
}

RiordanElement aerated_involution(const UnitSeries& g, const DeltaSeries& f, unsigned q)
{
    if (q == 0 || q % 2 == 0) {
        throw domain_violation("aeration needs a positive odd integer q, got " + std::to_string(q));
    }
    const RiordanElement source(g, f);
    if (!check_order(source, 2).holds) {
        throw no_solution("(g, F) is not an involution");
    }
    Series tail = g.series();
    tail[0] = 0;
    const auto r = order_of(tail);
    if (!r) {
        throw domain_violation("aeration theorem needs a non-constant g");
    }

    const std::size_t order = g.order();
    UnitSeries h(aerate(g.series(), q, order));
    // F(x^q) through x^(N+q-1) needs F only through x^N and makes K exact through x^N.
    const PositiveSeries f_aerated(aerate(f.series(), q, order + q - 1));
    DeltaSeries k = positive_root(f_aerated, q, Scalar(-1));

    // Independent route: the unique partner of g(x^q).
    const std::size_t ext_order = order + q - 1;
    if (*r * q <= ext_order) {
        const RiordanElement partner = involution_from_g(UnitSeries(aerate(g.series(), q, ext_order)));
        const std::size_t common = std::min(order, partner.order());
        if (partner.f().series().retruncate(common) != k.series().retruncate(common)) {
            throw internal_error("aerated root disagrees with the directly constructed partner");
        }
    }

    RiordanElement out(std::move(h), std::move(k));
    if (!check_order(out, 2).holds) {
        throw internal_error("aerated pair fails the order-2 check");
    }
    return out;
}

} // namespace rfps
