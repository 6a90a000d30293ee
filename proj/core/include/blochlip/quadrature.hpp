#pragma once

#include <functional>

namespace blochlip {

// Adaptive Simpson on [a,b] with absolute tolerance tol. Uses the classic
// |S2 - S1|/15 error estimate with Richardson extrapolation of the accepted
// panel. Depth-capped; the worst panel estimate is still returned then.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth = 40);

// Fixed 5-point Gauss-Legendre on [a,b]; cheap, used where only relative
// comparisons matter (path smoothing).
double gauss5(const std::function<double(double)>& f, double a, double b);

}  // namespace blochlip
