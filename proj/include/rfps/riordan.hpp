#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rfps/series.hpp"

namespace rfps {

// Riordan array (g, F): column n of the matrix has generating function g F^n.
class RiordanElement {
public:
    RiordanElement(UnitSeries g, DeltaSeries f);
    static RiordanElement identity(std::size_t order);

    const UnitSeries& g() const noexcept { return g_; }
    const DeltaSeries& f() const noexcept { return f_; }
    std::size_t order() const noexcept { return g_.order(); }

    RiordanElement retruncate(std::size_t new_order) const;

    friend bool operator==(const RiordanElement&, const RiordanElement&) = default;

private:
    UnitSeries g_;
    DeltaSeries f_;
};

// (g, F) * (h, K) = (g * h(F), K(F)).
RiordanElement operator*(const RiordanElement& lhs, const RiordanElement& rhs);

// (g, F)^-1 = (1 / g(inv F), inv F).
RiordanElement inverse(const RiordanElement& a);

// Leading (N+1) x (N+1) block of a lower-triangular matrix, row-major.
class TriangularBlock {
public:
    explicit TriangularBlock(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const Scalar& operator()(std::size_t row, std::size_t col) const noexcept
    {
        return entries_[row * dim_ + col];
    }
    Scalar& operator()(std::size_t row, std::size_t col) noexcept
    {
        return entries_[row * dim_ + col];
    }

    friend bool operator==(const TriangularBlock&, const TriangularBlock&) = default;

private:
    std::size_t dim_;
    std::vector<Scalar> entries_;
};

// Exact block product; lower-triangular leading blocks multiply closed.
TriangularBlock operator*(const TriangularBlock& lhs, const TriangularBlock& rhs);

// entries(m, n) = [x^m] g F^n.
TriangularBlock to_matrix(const RiordanElement& a);

enum class OrderCondition {
    product, // g * g(F) * ... * g(F^(n-1)) = 1
    iterate, // F^(n) = x
};

const char* to_string(OrderCondition c);

struct OrderWitness {
    OrderCondition condition;
    std::size_t index;
    Scalar actual;
    Scalar expected;
};

struct OrderCheck {
    bool holds = false;
    bool shortcut = false;
    // Orders through which each condition is established when holds is true.
    std::size_t product_through = 0;
    std::size_t iterate_through = 0;
    std::optional<OrderWitness> witness;
    // Why the shortcut did not run, when it was requested but inapplicable.
    std::string note;
};

// Evaluates both conditions for A^n = (1, x) through the truncation order.
OrderCheck check_order(const RiordanElement& a, unsigned n);

// Evaluates only the product condition, valid when g is non-constant and
// f_1^n = 1: the iterate condition then follows by composition
// cancellation, through order N - r + 1. Falls back to check_order (with
// a note) when the preconditions fail.
OrderCheck check_order_shortcut(const RiordanElement& a, unsigned n);

struct InvolutionDiagnostic {
    bool is_identity = false;
    bool g0_squared_is_one = false;
    bool g_constant = false;
    // Non-constant g only.
    std::optional<std::size_t> r;
    bool r_odd = false;
    bool f1_is_minus_one = false;
    // Constant g only: (g, F) = (-1, x), or F = -x + ... with F(F) = x.
    bool is_minus_one_x = false;
    bool f_is_involution = false;

    bool necessary_conditions_hold() const noexcept;
    std::vector<std::string> failures() const;
};

// Reports which necessary conditions for (g, F) being an involution hold.
InvolutionDiagnostic involution_necessary(const RiordanElement& a);

// The unique F making (g, F) an involution, for g = g0 + g_r x^r + ... with
// g0 = +-1, r odd:  F = inv(G)(-G / (g0 g)^(1/r)),  (g0, g_r, r, G) the
// normal form of g. Returned at order N - r + 1, the window g determines.
// Throws no_solution on even r or g0^2 != 1, domain_violation on constant g.
RiordanElement involution_from_g(const UnitSeries& g);

// h(x) = g(x^q) for odd q, at the given output order (default: g's order).
// Needs g through x^(order/q).
Series aerate(const Series& g, unsigned q, std::optional<std::size_t> order = std::nullopt);

// For an involution (g, F) with non-constant g and odd q: (g(x^q), K) with
// K = (F(x^q))^(1/q), the root with leading coefficient -1.
RiordanElement aerated_involution(const UnitSeries& g, const DeltaSeries& f, unsigned q);

} // namespace rfps
