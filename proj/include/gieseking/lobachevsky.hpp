#pragma once

namespace gieseking {

/// Lobachevsky function  L(x) = -Integral_0^x ln|2 sin t| dt.
/// Odd and pi-periodic; absolute error below 1e-12 for any finite argument.
double lobachevsky(double theta);

}  // namespace gieseking
