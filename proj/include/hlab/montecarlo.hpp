#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hlab/partition.hpp"

namespace hlab {

using Cplx = std::complex<double>;

/// Dense N x N complex matrix, row-major. Desk-scale linear algebra only.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
    static CMatrix identity(int n);
    static CMatrix diagonal(const std::vector<Cplx>& d);

    int size() const { return n_; }
    Cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Cplx& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * n_ + j];
    }

    CMatrix adjoint() const;
    Cplx trace() const;
    friend CMatrix operator*(const CMatrix& x, const CMatrix& y);

    /// max |(U U+ - I)_{ij}|
    double unitarity_residual() const;

private:
    int n_ = 0;
    std::vector<Cplx> a_;
};

/// Haar-distributed unitary sampler. PRNG: std::mt19937_64 seeded
/// directly; Gaussians by the Box-Muller transform (not
/// std::normal_distribution, whose output is implementation-defined).
/// A sample is the Q factor of a complex Ginibre matrix under modified
/// Gram-Schmidt, whose R diagonal is real positive, so the law is
/// exactly Haar. Parallel substreams use seed' = splitmix64(seed ^ index).
class HaarSampler {
public:
    HaarSampler(int N, std::uint64_t seed);

    int dim() const { return N_; }
    CMatrix sample();
    double gaussian();

    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

private:
    int N_;
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

struct EstimateReport {
    int m, N;
    Cplx z;
    std::vector<Cplx> spectrum_a, spectrum_b;
    long samples;
    std::uint64_t seed;
    Cplx mean;
    double stderr_;
    Cplx target;      // truncated exact series value
    int target_depth; // series truncation degree
};

/// Monte Carlo estimate of the BGW (m=1) or HCIZ (m=2) integrand mean
/// against the truncated character-form series. The truncation depth is
/// chosen so the crude tail bound sum_{d>D} (|z| N^2 s)^d / d! is below
/// tail_target (s = max spectral modulus product).
EstimateReport estimate_integral(int m, int N, Cplx z, const std::vector<Cplx>& a,
                                 const std::vector<Cplx>& b, long samples,
                                 std::uint64_t seed, double tail_target = 1e-12);

/// Truncated series value alone (shared with the CLI).
Cplx coupling_series_value(int m, int N, Cplx z, const std::vector<Cplx>& a,
                           const std::vector<Cplx>& b, int depth);
Cplx coupling_coefficient_complex(int m, int d, int N, const std::vector<Cplx>& a,
                                  const std::vector<Cplx>& b);

/// Schur polynomial of a matrix argument via traces of powers.
Cplx schur_of_matrix(const Partition& lambda, const CMatrix& M);

struct OrthogonalityReport {
    Partition lambda, mu;
    int N;
    long samples;
    std::uint64_t seed;
    Cplx split_mean, split_target;      // int s_l(AU) s_m(BU^-1) dU
    double split_stderr;
    Cplx joint_mean, joint_target;      // int s_l(AUBU^-1) dU (lambda only)
    double joint_stderr;
};

/// Monte Carlo check of the Schur orthogonality integrals at fixed
/// complex diagonal fields A, B.
OrthogonalityReport schur_orthogonality_check(int N, const Partition& lambda,
                                              const Partition& mu,
                                              const std::vector<Cplx>& a,
                                              const std::vector<Cplx>& b, long samples,
                                              std::uint64_t seed);

}  // namespace hlab
