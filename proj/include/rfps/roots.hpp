#pragma once

#include <cstddef>

#include "rfps/series.hpp"

namespace rfps {

// The unique n-th root with constant term 1 of a series with constant term 1,
// as the binomial sum  sum_j C(1/n, j) A^j  with A = a - 1.
UnitSeries unit_root(const UnitSeries& a, unsigned n);

// a = a0 + ar * A(x)^r with A = x + ... monic.
//
// A = x * ahat^(1/r), ahat = 1 + (a_{r+1}/a_r) x + ..., so A_k needs
// a_{r+k-1}: A is carried at order N - r + 1, the window fixed by the input.
struct NormalForm {
    Scalar a0;
    Scalar ar;
    unsigned r;
    DeltaSeries A;
    std::size_t source_order;

    // a0 + ar * A^r at source_order.
    Series reconstruct() const;
};

// Throws domain_violation when a is constant through its truncation order.
NormalForm normal_form(const Series& a);

// The unique q-th root B = b1 x + ... of a = a_q x^q + ..., namely b1 * A
// where a = a_q A^q. Requires ord(a) = q and b1^q = a_q exactly. Returned at
// order N - q + 1; lifted_power(B, q) reproduces a at order N.
DeltaSeries positive_root(const PositiveSeries& a, unsigned q, const Scalar& b1);

// The unique a = a_s x^s + ... with g(a(x)) = c, for non-constant g. Builds
// G(a) = a_s x^s * (P / (a_s^r x^(rs)))^(1/r) where P = (c - g0) / g_r,
// then a = inv(G)(G(a)). The result is determined through order
// N - (r-1) s and is returned at that order. Throws no_solution when c is
// not of the form g(a) for such an a.
PositiveSeries solve_inner(const Series& g, const Series& c, const Scalar& a_s, unsigned s);

} // namespace rfps
