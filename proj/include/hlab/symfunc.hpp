#pragma once

#include <vector>

#include "hlab/partition.hpp"

namespace hlab {

/// Rational spectrum of an external field (eigenvalues a_1..a_N).
using Spectrum = std::vector<Rat>;

/// Complete homogeneous (f) and elementary (e) symmetric functions of the
/// content alphabet of a diagram, exact values for all r <= r_max.
struct ContentEvaluation {
    std::vector<Int> f;  // f[r] = h_r(contents)
    std::vector<Int> e;  // e[r] = e_r(contents); 0 for r > d
};

ContentEvaluation content_eval(const Partition& lambda, int r_max);

/// f_r evaluated on {1,...,N}; equals the Stirling number S(N+r, N).
Int stirling_specialization(int N, int r);

/// Stirling number of the second kind by the triangular recurrence
/// (independent oracle for stirling_specialization).
Int stirling2(int n, int k);

/// Omega_h(lambda) = prod (1 + h c) at an exact rational h.
Rat omega_point(const Partition& lambda, const Rat& hbar);

/// Omega_{1/N}^{-1}(lambda) = prod 1/(1 + c/N); requires length <= N.
Rat omega_inverse(const Partition& lambda, int N);

/// p_alpha(s) = prod_i sum_j s_j^{alpha_i}.
Rat power_sum_eval(const Partition& alpha, const Spectrum& s);

/// s_lambda(s) via the power-sum/character expansion
/// s_lambda = sum_alpha chi^lambda_alpha / z_alpha * p_alpha;
/// returns 0 when length(lambda) > length(s).
Rat schur_eval(const Partition& lambda, const Spectrum& s);

}  // namespace hlab
