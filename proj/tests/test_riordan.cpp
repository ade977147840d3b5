#include <doctest.h>

#include "rfps/compose.hpp"
#include "rfps/errors.hpp"
#include "rfps/riordan.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace rfps;

namespace {

Scalar q(long num, long den = 1)
{
    Scalar v(num, den);
    v.canonicalize();
    return v;
}

// c / (1 - k x) at the given order, optionally times x.
Series geometric(std::size_t order, const Scalar& ratio, bool times_x = false, const Scalar& c = 1)
{
    Series s(order);
    Scalar p = c;
    for (std::size_t i = times_x ? 1 : 0; i <= order; ++i) {
        s[i] = p;
        p *= ratio;
    }
    return s;
}

RiordanElement pascal(std::size_t order)
{
    return RiordanElement(UnitSeries(geometric(order, 1)), DeltaSeries(geometric(order, 1, true)));
}

// (1/(1-x), -x/(1-x))
RiordanElement signed_pascal(std::size_t order)
{
    return RiordanElement(UnitSeries(geometric(order, 1)),
                          DeltaSeries(geometric(order, 1, true, -1)));
}

RiordanElement random_element(testing::Generator& gen, std::size_t order)
{
    return RiordanElement(gen.unit(order), gen.delta(order));
}

} // namespace

TEST_CASE("riordan product examples")
{
    testing::Generator gen(4);
    const RiordanElement b = random_element(gen, 9);
    CHECK(RiordanElement::identity(9) * b == b);
    CHECK(b * RiordanElement::identity(9) == b);

    const std::size_t n = 12;
    const RiordanElement p2 = pascal(n) * pascal(n);
    CHECK(p2 == RiordanElement(UnitSeries(geometric(n, 2)), DeltaSeries(geometric(n, 2, true))));
    CHECK(to_matrix(p2) == to_matrix(pascal(n)) * to_matrix(pascal(n)));

    CHECK(signed_pascal(n) * signed_pascal(n) == RiordanElement::identity(n));

    CHECK_THROWS_AS(pascal(3) * pascal(4), order_mismatch);
    CHECK_THROWS_AS(RiordanElement(UnitSeries::one(3), DeltaSeries::identity(4)), order_mismatch);
}

TEST_CASE("riordan inverse examples")
{
    CHECK(inverse(RiordanElement::identity(6)) == RiordanElement::identity(6));
    const std::size_t n = 14;
    const RiordanElement expected(UnitSeries(geometric(n, -1)), DeltaSeries(geometric(n, -1, true)));
    CHECK(inverse(pascal(n)) == expected);
    CHECK(inverse(signed_pascal(n)) == signed_pascal(n));
}

TEST_CASE("to_matrix examples")
{
    const std::size_t n = 10;
    const TriangularBlock id = to_matrix(RiordanElement::identity(n));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(id(i, j) == (i == j ? 1 : 0));
        }
    }
    const auto c = testing::pascal_triangle(n);
    const TriangularBlock p = to_matrix(pascal(n));
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(p(i, j) == (j <= i ? c[i][j] : Scalar(0)));
        }
    }
}

TEST_CASE("group axioms and matrix functor on random elements")
{
    testing::Generator gen(101);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 10));
        const RiordanElement a = random_element(gen, n);
        const RiordanElement b = random_element(gen, n);
        const RiordanElement c = random_element(gen, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * inverse(a) == RiordanElement::identity(n));
        CHECK(inverse(a) * a == RiordanElement::identity(n));
        CHECK(to_matrix(a * b) == to_matrix(a) * to_matrix(b));
    }
}

TEST_CASE("check_order examples")
{
    const std::size_t n = 10;
    CHECK(check_order(RiordanElement::identity(n), 1).holds);

    const RiordanElement minus_one(UnitSeries(Series::constant(-1, n)), DeltaSeries::identity(n));
    CHECK(check_order(minus_one, 2).holds);
    CHECK_FALSE(check_order(minus_one, 1).holds);

    const OrderCheck p = check_order(pascal(n), 2);
    CHECK_FALSE(p.holds);
    REQUIRE(p.witness);
    CHECK(p.witness->condition == OrderCondition::product);
    CHECK(p.witness->index == 1);
    CHECK(p.witness->actual == 2);
    CHECK(p.witness->expected == 0);

    // g * g(F) = 1 but F(F) != x: (1, 2x) fails on the iterate condition.
    const RiordanElement scale(UnitSeries::one(n), DeltaSeries(Series::monomial(2, 1, n)));
    const OrderCheck s = check_order(scale, 2);
    REQUIRE(s.witness);
    CHECK(s.witness->condition == OrderCondition::iterate);
    CHECK(s.witness->index == 1);
    CHECK(s.witness->actual == 4);

    CHECK_THROWS_AS(check_order(scale, 0), domain_violation);
}

TEST_CASE("check_order_shortcut examples")
{
    const std::size_t n = 16;
    const OrderCheck sp = check_order_shortcut(signed_pascal(n), 2);
    CHECK(sp.holds);
    CHECK(sp.shortcut);
    CHECK(sp.iterate_through == n);
    CHECK(check_order(signed_pascal(n), 2).holds);

    // Example with h = 1/(1 - x^3), K = -x/(1 - x^3)^(1/3).
    const RiordanElement aerated = aerated_involution(signed_pascal(n).g(), signed_pascal(n).f(), 3);
    const OrderCheck ae = check_order_shortcut(aerated, 2);
    CHECK(ae.holds);
    CHECK(ae.shortcut);
    CHECK(ae.iterate_through == n - 2);

    const RiordanElement minus_one(UnitSeries(Series::constant(-1, n)), DeltaSeries::identity(n));
    const OrderCheck fallback = check_order_shortcut(minus_one, 2);
    CHECK(fallback.holds);
    CHECK_FALSE(fallback.shortcut);
    CHECK(fallback.note.find("constant") != std::string::npos);

    // f1 = 2 is not a square root of unity.
    const RiordanElement bad_f1(UnitSeries(geometric(n, 1)), DeltaSeries(Series::monomial(2, 1, n)));
    const OrderCheck bf = check_order_shortcut(bad_f1, 2);
    CHECK_FALSE(bf.shortcut);
    CHECK_FALSE(bf.holds);
}

TEST_CASE("shortcut certifies F^(n) = x only below the top r - 1 coefficients")
{
    // F with junk at the odd index N - 1: with r = 3 the product condition
    // sees f_(N-1) only at x^(N+1).
    const std::size_t n = 12;
    const RiordanElement inv = involution_from_g(UnitSeries(Series::polynomial({1, 0, 0, 1, 2}, n + 2)));
    Series f = inv.f().series();
    f[n - 1] += 1;
    const RiordanElement tampered(inv.g(), DeltaSeries(f));
    const OrderCheck sc = check_order_shortcut(tampered, 2);
    CHECK(sc.holds);
    CHECK(sc.iterate_through == n - 2);
    const OrderCheck full = check_order(tampered, 2);
    CHECK_FALSE(full.holds);
    REQUIRE(full.witness);
    CHECK(full.witness->condition == OrderCondition::iterate);
    CHECK(full.witness->index == n - 1);
}

TEST_CASE("involution_necessary examples")
{
    const std::size_t n = 8;
    const InvolutionDiagnostic sp = involution_necessary(signed_pascal(n));
    CHECK(sp.necessary_conditions_hold());
    CHECK(sp.g0_squared_is_one);
    CHECK(sp.r == 1);
    CHECK(sp.r_odd);
    CHECK(sp.f1_is_minus_one);

    const InvolutionDiagnostic two(involution_necessary(RiordanElement(
        UnitSeries(Series::polynomial({2, 1}, n)), DeltaSeries(Series::monomial(-1, 1, n)))));
    CHECK_FALSE(two.g0_squared_is_one);
    CHECK_FALSE(two.necessary_conditions_hold());

    const InvolutionDiagnostic even(involution_necessary(RiordanElement(
        UnitSeries(Series::polynomial({1, 0, 1}, n)), DeltaSeries(Series::monomial(-1, 1, n)))));
    CHECK(even.r == 2);
    CHECK_FALSE(even.r_odd);
    CHECK_FALSE(even.necessary_conditions_hold());
    CHECK(even.failures().size() == 1);

    const InvolutionDiagnostic minus_one(involution_necessary(
        RiordanElement(UnitSeries(Series::constant(-1, n)), DeltaSeries::identity(n))));
    CHECK(minus_one.g_constant);
    CHECK(minus_one.is_minus_one_x);
    CHECK(minus_one.necessary_conditions_hold());

    const InvolutionDiagnostic plus_neg(involution_necessary(
        RiordanElement(UnitSeries::one(n), DeltaSeries(Series::monomial(-1, 1, n)))));
    CHECK(plus_neg.f_is_involution);
    CHECK(plus_neg.necessary_conditions_hold());

    const InvolutionDiagnostic id = involution_necessary(RiordanElement::identity(n));
    CHECK(id.is_identity);
    CHECK_FALSE(id.necessary_conditions_hold());
}

TEST_CASE("involution_from_g examples")
{
    const std::size_t n = 20;
    const RiordanElement geo = involution_from_g(UnitSeries(geometric(n, 1)));
    CHECK(geo == signed_pascal(n));

    const RiordanElement lin = involution_from_g(UnitSeries(Series::polynomial({1, 1}, n)));
    CHECK(lin.f().series() == geometric(n, -1, true, -1));
    CHECK(compose(lin.g(), PositiveSeries(lin.f())).series() == geometric(n, -1));

    CHECK_THROWS_AS(involution_from_g(UnitSeries(Series::polynomial({1, 0, 1}, n))), no_solution);
    CHECK_THROWS_AS(involution_from_g(UnitSeries(Series::polynomial({2, 1}, n))), no_solution);
    CHECK_THROWS_AS(involution_from_g(UnitSeries(Series::constant(-1, n))), domain_violation);

    // g0 = -1 with r = 3: output window N - r + 1.
    const RiordanElement neg = involution_from_g(UnitSeries(Series::polynomial({-1, 0, 0, q(2, 3), 1}, n)));
    CHECK(neg.order() == n - 2);
    CHECK(check_order(neg, 2).holds);
}

TEST_CASE("involution_from_g output is an involution and unique")
{
    testing::Generator gen(303);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = static_cast<std::size_t>(2 * gen.integer(0, 2) + 1);
        const std::size_t n = 10;
        const RiordanElement inv = involution_from_g(gen.involutive_g(n + r - 1, r));
        REQUIRE(inv.order() == n);
        CHECK(check_order(inv, 2).holds);
        CHECK(inverse(inv) == inv);

        // Perturbations inside the window the product condition sees.
        for (std::size_t k = 2; k + r - 1 <= n; ++k) {
            for (const Scalar& eps : {Scalar(1), q(-1, 2)}) {
                Series f = inv.f().series();
                f[k] += eps;
                CHECK_FALSE(check_order(RiordanElement(inv.g(), DeltaSeries(f)), 2).holds);
            }
        }
    }
}

TEST_CASE("perturbing x^N escapes the order-2 check when r > 1")
{
    // Boundary of the truncated uniqueness statement: with r = 3 the
    // product condition reaches f_k only at x^(k+2), and for even k the
    // iterate condition's x^k change (-1)^k - 1 vanishes.
    const std::size_t n = 10;
    const RiordanElement inv = involution_from_g(UnitSeries(Series::polynomial({1, 0, 0, 1, 1}, n + 2)));
    Series f = inv.f().series();
    f[n] += 1;
    CHECK(check_order(RiordanElement(inv.g(), DeltaSeries(f)), 2).holds);
}

TEST_CASE("aerate examples")
{
    testing::Generator gen(6);
    const Series g = gen.series(9);
    CHECK(aerate(g, 1) == g);
    CHECK(aerate(geometric(12, 1), 3) == Series::polynomial({1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1}, 12));
    CHECK(aerate(Series::polynomial({1, 1}, 7), 5) == Series::polynomial({1, 0, 0, 0, 0, 1}, 7));
    CHECK(aerate(Series::polynomial({1, 1}, 2), 3, 8) == Series::polynomial({1, 0, 0, 1}, 8));
    CHECK_THROWS_AS(aerate(g, 2), domain_violation);
    CHECK_THROWS_AS(aerate(g, 0), domain_violation);
    CHECK_THROWS_AS(aerate(Series::polynomial({1, 1}, 2), 1, 5), domain_violation);
}

TEST_CASE("aerated_involution examples")
{
    const std::size_t n = 22;
    const RiordanElement base = signed_pascal(n);
    const RiordanElement three = aerated_involution(base.g(), base.f(), 3);
    CHECK(three.g().series() == aerate(base.g(), 3));
    CHECK(three.f()[1] == -1);
    CHECK(three.f()[4] == q(-1, 3));
    CHECK(three.f()[7] == q(-2, 9));
    CHECK(three.f()[2] == 0);

    CHECK(aerated_involution(base.g(), base.f(), 1) == base);

    const RiordanElement five = aerated_involution(base.g(), base.f(), 5);
    for (std::size_t i = 0; i <= n; ++i) {
        CHECK((five.f()[i] != 0) == (i % 5 == 1));
    }

    CHECK_THROWS_AS(aerated_involution(base.g(), base.f(), 2), domain_violation);
    CHECK_THROWS_AS(aerated_involution(pascal(n).g(), pascal(n).f(), 3), no_solution);
}
