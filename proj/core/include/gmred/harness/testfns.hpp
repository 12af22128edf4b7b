#pragma once

#include "gmred/numcore/chart.hpp"
#include "gmred/numcore/field.hpp"
#include "gmred/numcore/rng.hpp"

namespace gmred {

/// Random smooth test function adapted to a chart: a short sum of terms,
/// each a monomial of degree at most three in the non-angle coordinates
/// times sin/cos/1 factors of the angle coordinates, with coefficients
/// drawn from the sampler.  Periodic in every angle by construction.
ScalarField random_test_function(const Chart& chart, Sampler& rng);

}  // namespace gmred
