#pragma once

#include <map>
#include <optional>

#include "hlab/characters.hpp"
#include "hlab/series.hpp"
#include "hlab/symfunc.hpp"

namespace hlab {

enum class WalkFlavor { monotone, classical };

/// W^r(alpha,beta) via the Plancherel average
///   sum_lambda omega_alpha(lambda) f_r(lambda) omega_beta(lambda) (dim V)^2 / d!
/// (classical flavor replaces f_r(lambda) by omega_{(2,1^{d-2})}(lambda)^r).
/// Asserted to be a nonnegative integer.
Int walk_count_char(const Partition& alpha, const Partition& beta, int r,
                    WalkFlavor flavor = WalkFlavor::monotone);

/// Brute-force walk enumeration on the transposition Cayley graph of S(d)
/// (oracle scale: d <= 6, r <= 8). Monotone flavor restricts to weakly
/// increasing larger-moved-point labels; connected additionally requires
/// <sigma, tau_1..tau_r> transitive on {1..d}.
Int walk_count_brute(const Partition& alpha, const Partition& beta, int r,
                     WalkFlavor flavor = WalkFlavor::monotone, bool connected = false);

/// All brute-force walk counts from class alpha in one sweep:
/// result[r][beta_index] for r = 0..r_max, both connectivity variants.
struct BruteWalkCounts {
    std::vector<Partition> classes;                 // canonical order
    std::vector<std::vector<Int>> total;            // [r][beta]
    std::vector<std::vector<Int>> transitive;       // [r][beta]
};
BruteWalkCounts walk_counts_brute_all(const Partition& alpha, int r_max,
                                      WalkFlavor flavor = WalkFlavor::monotone);

/// Table of monotone Hurwitz numbers indexed by (d, g, alpha[, beta]).
/// Mode 0: alpha = beta = (1^d) fixed; mode 1: beta = (1^d) fixed;
/// mode 2: general double numbers.
class HurwitzTable {
public:
    HurwitzTable(int mode, bool connected, int d_max, int genus_max)
        : mode_(mode), connected_(connected), d_max_(d_max), genus_max_(genus_max) {}

    int mode() const { return mode_; }
    bool connected() const { return connected_; }
    int d_max() const { return d_max_; }
    int genus_max() const { return genus_max_; }
    int genus_min(int d) const { return connected_ ? 0 : -d + 1; }

    /// Entry lookup; throws TruncationError beyond coverage, returns 0
    /// where vanishing is forced (g below the genus lower bound).
    const Int& value(int d, int g, const Partition& alpha, const Partition& beta) const;
    /// Simple numbers H_g^{(bullet) d} (alpha = beta = (1^d)).
    const Int& simple(int d, int g) const;

    void set(int d, int g, const PairKey& key, Int v);
    const std::map<std::pair<int, PairKey>, std::map<int, Int>>& entries() const {
        return entries_;
    }

    PairKey canonical_key(int d, const Partition& alpha, const Partition& beta) const;

private:
    int mode_;
    bool connected_;
    int d_max_, genus_max_;
    // (d, key) -> genus -> value
    std::map<std::pair<int, PairKey>, std::map<int, Int>> entries_;
};

/// Disconnected monotone Hurwitz numbers H_g^bullet = W^{2g-2+l(a)+l(b)}
/// for all degrees <= d_max and genus_min(d) <= g <= genus_max.
HurwitzTable disconnected_table(int mode, int d_max, int genus_max);

/// Connected numbers extracted by the series logarithm of the stable
/// topological expansion built from a disconnected table. The input
/// table's genus range must be wide enough; insufficiency throws
/// TruncationError rather than zero-filling.
HurwitzTable connected_table(int mode, int d_max, int genus_max);
HurwitzTable connected_table(const HurwitzTable& disconnected, int genus_max);

/// Stable-expansion coefficient c_d as a PairCoefficient, built from a
/// disconnected table (sign and hbar-prefactor conventions included).
PairCoefficient stable_coefficient(const HurwitzTable& disc, int d);

struct SortingReport {
    Int sum_double, sum_single, sum_simple;  // raw table sums
    Int lhs, mid, rhs;                       // sum_double, 2^d sum_single, 4^d simple
    bool strict_chain;
};

/// sum_{a,b} H_g(a,b) < 2^d sum_a H_g(a) < 4^d H_g^d on a table.
SortingReport sorting_inequalities(int d, int g, const HurwitzTable& double_table,
                                   const HurwitzTable& single_table,
                                   const HurwitzTable& simple_table);

struct GenusRatioReport {
    int d, g;
    Int value;        // H_g^{bullet d}
    Rat ratio;        // value / asymptote, exact
    double ratio_d;   // same, as double
};

/// H_g^{bullet d} against the large-genus asymptote
/// 2 (d-1)^{3d-3} / ((d-1)! d!) * (d-1)^{2g}.
GenusRatioReport large_genus_ratio(int d, int g);

}  // namespace hlab
