#pragma once

#include <map>

#include "hlab/series.hpp"
#include "hlab/symfunc.hpp"

namespace hlab {

/// Exact coupling coefficient I_N^{(m)d} at fixed rational spectra.
/// m=0 takes no spectra, m=1 takes a only, m=2 takes a and b;
/// each supplied spectrum must have length N.
struct CouplingValue {
    int m, d, N;
    Spectrum a, b;
    Rat value;
};

/// Character form: sum over lambda |- d with l(lambda) <= N of
/// Schur values, dimensions and Omega_{1/N}^{-1} weights.
CouplingValue coupling_char(int m, int d, int N, const Spectrum& a = {},
                            const Spectrum& b = {});

/// String form: the same coefficient as a Newton-polynomial sum
///   I^{(m)d} = sum_{alpha(,beta)} p_alpha(a) p_beta(b) * coefficient,
/// with coefficients given by length-restricted Plancherel inner sums.
CouplingValue coupling_string(int m, int d, int N, const Spectrum& a = {},
                              const Spectrum& b = {});

/// The Newton-monomial coefficients of the string form, keyed as in
/// PairCoefficient (mode 0: empty key; mode 1: alpha; mode 2: alpha,beta).
/// Prefactors (N^{2d} for m=0, N^d for m=1) are included.
std::map<PairKey, Rat> string_coefficients(int m, int d, int N);

/// Sup norm over the unit polydisc = all-ones evaluation (the character
/// form has nonnegative monomial coefficients): N^{2d} P[LIS_d <= N] for
/// m=1 and N^{2d} for m=2; for m=0 the coefficient itself.
Rat coupling_norm(int m, int d, int N);

/// P[longest increasing subsequence of a uniform permutation of d <= N]
/// = sum_{lambda |- d, l(lambda) <= N} (dim V^lambda)^2 / d!.
Rat lis_probability(int d, int N);
/// Direct check over all d! permutations (d <= 8).
Rat lis_probability_brute(int d, int N);

/// Tail bound u(rho) e^{-v(rho) N^2} with u(x) = 1/(1 - ex/t),
/// v(x) = t log(t/(ex)), against the exact tail sum_{d > tN^2} rho^d N^{2d}/d!.
struct TruncationBound {
    Rat rho, t;
    int N;
    double u_val, v_val, bound;
    Rat tail_partial;   // partial sum of the tail series
    double tail_upper;  // partial plus a geometric remainder bound
    bool tail_below_bound;
};
TruncationBound truncation_bound(const Rat& rho, const Rat& t, int N);

/// Fieldless specializations: L_N^d = N^{2d} P[LIS_d <= N], E_N^d = N^{2d}.
struct FieldlessValues {
    Rat L, E;
};
FieldlessValues fieldless_specializations(int d, int N);

/// Verifies the HCIZ degeneration at B = identity:
/// coupling_char(m=2, d, N, (spectrum, all-ones)) = N^d p_1(spectrum)^d.
bool hciz_degeneration_check(int d, int N, const Spectrum& spectrum);

}  // namespace hlab
