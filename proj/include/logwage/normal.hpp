#pragma once

namespace logwage {

// Standard normal CDF, Phi(x).
double normal_cdf(double x);

// Standard normal quantile, Phi^{-1}(p) for p in (0,1).
// Throws std::domain_error outside the open unit interval.
double normal_quantile(double p);

} // namespace logwage
