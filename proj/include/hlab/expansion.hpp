#pragma once

#include <map>

#include "hlab/coupling.hpp"
#include "hlab/hurwitz.hpp"

namespace hlab {

/// Genus-g free energy coefficients F_{Ng}^{(m)d}: signed,
/// N^{-l}-weighted connected Hurwitz numbers. coeffs[d] maps a
/// PairKey to the coefficient of p_alpha(a) p_beta(b).
struct GenusFreeEnergy {
    int m, N, g, d_max;
    std::map<int, std::map<PairKey, Rat>> coeffs;

    /// Evaluate F_{Ng}^{(m)d} at rational spectra.
    Rat evaluate(int d, const Spectrum& a = {}, const Spectrum& b = {}) const;
};

GenusFreeEnergy genus_free_energy(int m, int N, int g, int d_max,
                                  const HurwitzTable& connected);

/// Strong coupling coefficients F_N^d for d = 0..d_max (F_N^0 = 0),
/// from the series logarithm of the exact coupling coefficients
/// evaluated at the given spectra.
std::vector<Rat> free_energy_coeffs(int m, int N, int d_max, const Spectrum& a = {},
                                    const Spectrum& b = {});

/// Coupling coefficients of E_{Nk}^{s} = e^{s sum_{g<=k} N^{2-2g} F_{Ng}},
/// s = +1 or -1, for d = 0..d_max at fixed spectra.
ExpSeries<Rat> e_bar_coeffs(int m, int N, int k, int d_max, int sign,
                            const HurwitzTable& connected, const Spectrum& a = {},
                            const Spectrum& b = {});

/// Topological normalizations Phi_{Nk}^d = sum_c binom(d,c) I^c (E^{-1})^{d-c}
/// for d = 0..d_max at fixed spectra (Phi^0 = 1).
std::vector<Rat> phi_coefficients(int m, int N, int k, int d_max,
                                  const HurwitzTable& connected, const Spectrum& a = {},
                                  const Spectrum& b = {});

/// Cancellation identity sum_beta (-1)^{l(beta)} H_g(alpha,beta) = 0.
struct CancellationReport {
    int d, g;
    bool holds;
    std::map<Partition, Rat> witness;  // signed sum per alpha
};
CancellationReport cancellation_check(int d, int g, const HurwitzTable& connected);

/// Disconnected simple numbers assembled from connected components of
/// genus >= g_min only, for genus up to genus_max; index [d][g].
/// Input table must be connected mode 0.
std::map<int, std::map<int, Int>> genus_restricted_disconnected(
    const HurwitzTable& connected, int g_min, int d_max, int genus_max);

/// Stable identity scan: Phi_{Nk}^d against the genus-restricted sum
/// sum_{g=k+1}^{G} N^{2-2g} H^{bullet d}_{g,>=k+1} with a geometric
/// tail bound (first omitted term against ratio ((d-1)/N)^2).
struct StableIdentityReport {
    int m, N, k, d, G;
    Rat phi, partial;
    double tail_bound;
    bool within_bound;
};
StableIdentityReport stable_identity_check(int N, int k, int d,
                                           const HurwitzTable& connected, int G = -1);

/// Concentration scan s(N) = sum_d (xi^d/d!) |Phi_{Nk}^d| with the
/// all-ones (m=1,2) or scalar (m=0) exact evaluations. The degree window
/// d <= d_cap is held fixed across N so successive points are comparable.
struct ConcentrationPoint {
    int N, d_max;
    double s, scaled;  // scaled = N^{2k-2} s(N)
};
struct ConcentrationReport {
    int m, k;
    Rat xi;
    std::vector<ConcentrationPoint> points;
    bool non_increasing;
};
ConcentrationReport concentration_scan(int m, int k, int N_min, int N_max,
                                       const Rat& xi, int d_cap = 6);

/// Stirling/binomial/hockey-stick chain for the Plancherel completion
/// cost in the unstable window N < d <= tN^2/4... (window N < d <= N^2/4).
struct PlancherelBoundReport {
    int N, d, r_max;
    bool stirling_matches;   // f_r(1..N) = S(N+r, N) for r <= r_max
    bool stirling_bounded;   // S(N+r,N) <= N^r binom(N+r,N)
    bool hockey_stick;       // sum_{r<=R} binom(N+r,N) = binom(N+R+1,N+1)
    Rat completion_cost;     // binom(3N+2k+1 style cost at k = (r_max-2d+2)/2
    bool ok;
};
PlancherelBoundReport plancherel_mechanism_bounds(int N, int d, int r_max);

/// Remainder trend for R(N) = F_N^d - sum_{g<=k} N^{2-2g} F_{Ng}^d.
/// The monotone quantity is the coefficient-l1 upper bound on the polydisc
/// norm, sum_{g>k} N^{2-2g} (sum over table keys of H_g) plus a geometric
/// tail estimate; the pointwise |R(N)| at the deterministic base spectra is
/// reported alongside and checked against the bound (spectra change with N,
/// so |R(N)| itself is not comparable across the window).
struct TrendPoint {
    int N;
    Rat remainder;         // |R(N)| at the base spectra
    Rat scaled_remainder;  // N^{2k-2} |R(N)|
    Rat l1_scaled;         // N^{2k-2} * coefficient-l1 bound
};
struct TrendReport {
    int m, d, k;
    std::vector<TrendPoint> points;
    bool decreasing;    // of l1_scaled
    bool within_bound;  // |R(N)| <= l1 bound at every point
};
TrendReport large_N_trend(int m, int d, int k, int N_min, int N_max,
                          const HurwitzTable& connected,
                          const std::vector<Rat>& base_spectrum_a = {},
                          const std::vector<Rat>& base_spectrum_b = {});

}  // namespace hlab
