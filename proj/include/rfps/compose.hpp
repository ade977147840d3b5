#pragma once

#include "rfps/series.hpp"

namespace rfps {

// outer(inner(x)) through order N. Horner accumulation; inner must have
// zero constant term so each output coefficient is a finite sum.
Series compose(const Series& outer, const PositiveSeries& inner);

UnitSeries compose(const UnitSeries& outer, const PositiveSeries& inner);
DeltaSeries compose(const DeltaSeries& outer, const DeltaSeries& inner);

// Compositional inverse by forward substitution on inv(f(x)) = x: with the
// powers f^k precomputed, coefficient n of the inverse is fixed by a linear
// equation whose pivot is f_1^n.
DeltaSeries comp_inverse(const DeltaSeries& f);

// Compositional inverse by Lagrange inversion,
// [x^n] inv = (1/n) [x^(n-1)] (x / f(x))^n.
DeltaSeries comp_inverse_lagrange(const DeltaSeries& f);

// k-fold self composition; k = 0 gives x.
DeltaSeries iterate(const DeltaSeries& f, unsigned k);

} // namespace rfps
