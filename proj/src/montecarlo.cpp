#include "hlab/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "hlab/characters.hpp"
#include "hlab/symfunc.hpp"

namespace hlab {

namespace {

constexpr long kBatch = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<Cplx> power_traces(const CMatrix& m, int max_power) {
    std::vector<Cplx> tr(max_power + 1, Cplx(0.0, 0.0));
    CMatrix p = m;
    for (int k = 1; k <= max_power; ++k) {
        tr[k] = p.trace();
        if (k < max_power) p = p * m;
    }
    return tr;
}

Cplx schur_from_traces(const Partition& lambda, const std::vector<Cplx>& tr) {
    const int d = lambda.size();
    if (d == 0) return 1.0;
    const auto table = character_table(d);
    const int li = table->index_of(lambda);
    const auto& order = table->partitions();
    Cplx total = 0.0;
    for (size_t ai = 0; ai < order.size(); ++ai) {
        const Int& chi = table->chi(li, static_cast<int>(ai));
        if (chi == 0) continue;
        Cplx p = 1.0;
        for (int part : order[ai].parts()) p *= tr[part];
        Rat w(chi, centralizer_order(order[ai]));
        w.canonicalize();
        total += w.get_d() * p;
    }
    return total;
}

std::vector<Cplx> complex_power_sums(const std::vector<Cplx>& a, int max_power) {
    std::vector<Cplx> tr(max_power + 1, Cplx(0.0, 0.0));
    for (int k = 1; k <= max_power; ++k)
        for (const Cplx& x : a) tr[k] += std::pow(x, k);
    return tr;
}

struct MeanAccumulator {
    std::vector<Cplx> values;
    Cplx mean() const {
        Cplx s = 0.0;
        for (const Cplx& v : values) s += v;
        return s / static_cast<double>(values.size());
    }
    double stderr_of_mean() const {
        const Cplx m = mean();
        double ss = 0.0;
        for (const Cplx& v : values) ss += std::norm(v - m);
        const double n = static_cast<double>(values.size());
        return std::sqrt(ss / (n - 1.0) / n);
    }
};

void check_finite(const Cplx& v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("non-finite integrand value");
}

}  // namespace

CMatrix CMatrix::identity(int n) {
    CMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Cplx>& d) {
    CMatrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Cplx CMatrix::trace() const {
    Cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    const int n = x.size();
    CMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Cplx xv = x(i, k);
            if (xv == Cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += xv * y(k, j);
        }
    return out;
}

double CMatrix::unitarity_residual() const {
    const CMatrix p = *this * adjoint();
    double worst = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Cplx want = i == j ? Cplx(1.0, 0.0) : Cplx(0.0, 0.0);
            worst = std::max(worst, std::abs(p(i, j) - want));
        }
    return worst;
}

HaarSampler::HaarSampler(int N, std::uint64_t seed) : N_(N), rng_(seed) {
    if (N < 1 || N > 16) throw std::invalid_argument("HaarSampler: 1 <= N <= 16");
}

std::uint64_t HaarSampler::substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ (index * 0xd1342543de82ef95ULL + 1));
}

double HaarSampler::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on uniforms built from the top 53 bits
    const double u1 =
        (static_cast<double>(rng_() >> 11) + 1.0) * (1.0 / 9007199254740993.0);
    const double u2 = static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

CMatrix HaarSampler::sample() {
    CMatrix g(N_);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < N_; ++i)
        for (int j = 0; j < N_; ++j)
            g(i, j) = Cplx(gaussian() * inv_sqrt2, gaussian() * inv_sqrt2);

    // modified Gram-Schmidt on columns; R has positive real diagonal
    CMatrix q(N_);
    for (int j = 0; j < N_; ++j) {
        std::vector<Cplx> v(N_);
        for (int i = 0; i < N_; ++i) v[i] = g(i, j);
        for (int c = 0; c < j; ++c) {
            Cplx r = 0.0;
            for (int i = 0; i < N_; ++i) r += std::conj(q(i, c)) * v[i];
            for (int i = 0; i < N_; ++i) v[i] -= r * q(i, c);
        }
        double norm = 0.0;
        for (int i = 0; i < N_; ++i) norm += std::norm(v[i]);
        norm = std::sqrt(norm);
        for (int i = 0; i < N_; ++i) q(i, j) = v[i] / norm;
    }
    return q;
}

Cplx coupling_coefficient_complex(int m, int d, int N, const std::vector<Cplx>& a,
                                  const std::vector<Cplx>& b) {
    const auto table = character_table(d);
    const auto pa = m >= 1 ? complex_power_sums(a, d) : std::vector<Cplx>{};
    const auto pb = m == 2 ? complex_power_sums(b, d) : std::vector<Cplx>{};
    Cplx total = 0.0;
    for (const auto& lambda : table->partitions()) {
        if (lambda.length() > N) continue;
        const double w = omega_inverse(lambda, N).get_d();
        if (m == 0) {
            Rat pl(dim_sym(lambda) * dim_sym(lambda), factorial(d));
            pl.canonicalize();
            total += w * pl.get_d();
        } else if (m == 1) {
            total += schur_from_traces(lambda, pa) * w * dim_sym(lambda).get_d();
        } else {
            total += schur_from_traces(lambda, pa) * schur_from_traces(lambda, pb) * w;
        }
    }
    if (m == 0)
        total *= std::pow(static_cast<double>(N), 2 * d);
    else if (m == 1)
        total *= std::pow(static_cast<double>(N), d);
    else
        total *= factorial(d).get_d();
    return total;
}

Cplx coupling_series_value(int m, int N, Cplx z, const std::vector<Cplx>& a,
                           const std::vector<Cplx>& b, int depth) {
    Cplx total = 1.0;
    Cplx zpow = 1.0;
    Rat inv_fact = 1;
    for (int d = 1; d <= depth; ++d) {
        zpow *= z;
        inv_fact /= d;
        total += zpow * inv_fact.get_d() * coupling_coefficient_complex(m, d, N, a, b);
    }
    return total;
}

EstimateReport estimate_integral(int m, int N, Cplx z, const std::vector<Cplx>& a,
                                 const std::vector<Cplx>& b, long samples,
                                 std::uint64_t seed, double tail_target) {
    if (m != 1 && m != 2) throw std::invalid_argument("estimate_integral: m in {1,2}");
    if (samples < 1000) throw std::invalid_argument("estimate_integral: samples >= 1000");
    std::vector<Cplx> av = a.empty() ? std::vector<Cplx>(N, 1.0) : a;
    std::vector<Cplx> bv = b.empty() ? std::vector<Cplx>(N, 1.0) : b;
    if (static_cast<int>(av.size()) != N || static_cast<int>(bv.size()) != N)
        throw std::invalid_argument("spectra must have length N");

    const CMatrix A = CMatrix::diagonal(av);
    const CMatrix B = CMatrix::diagonal(bv);
    const Cplx sqrt_z = std::sqrt(z);

    MeanAccumulator acc;
    acc.values.reserve(samples);
    long done = 0;
    for (std::uint64_t batch = 0; done < samples; ++batch) {
        HaarSampler sampler(N, HaarSampler::substream_seed(seed, batch));
        const long want = std::min(kBatch, samples - done);
        for (long i = 0; i < want; ++i) {
            const CMatrix u = sampler.sample();
            Cplx v;
            if (m == 1) {
                const Cplx t = (A * u).trace() + (B * u.adjoint()).trace();
                v = std::exp(sqrt_z * static_cast<double>(N) * t);
            } else {
                const Cplx t = (A * u * B * u.adjoint()).trace();
                v = std::exp(z * static_cast<double>(N) * t);
            }
            check_finite(v);
            acc.values.push_back(v);
        }
        done += want;
    }

    // series depth from the crude tail bound sum_{d>D} (|z| N^2 s)^d / d!
    double s = 1.0;
    for (const Cplx& x : av) s = std::max(s, std::abs(x));
    double sb = 1.0;
    for (const Cplx& x : bv) sb = std::max(sb, std::abs(x));
    const double x0 = std::abs(z) * N * N * s * sb;
    int depth = 1;
    double term = x0, tail = 0.0;
    while (depth < 40) {
        term *= x0 / (depth + 1);
        tail = term * 2.0;  // ratio < 1/2 in the tested regime
        if (tail < tail_target && x0 / (depth + 2) < 0.5) break;
        ++depth;
    }
    depth = std::min(depth + 1, character_table_capacity());

    EstimateReport rep;
    rep.m = m;
    rep.N = N;
    rep.z = z;
    rep.spectrum_a = av;
    rep.spectrum_b = bv;
    rep.samples = samples;
    rep.seed = seed;
    rep.mean = acc.mean();
    rep.stderr_ = acc.stderr_of_mean();
    rep.target_depth = depth;
    rep.target = coupling_series_value(m, N, z, av, bv, depth);
    return rep;
}

Cplx schur_of_matrix(const Partition& lambda, const CMatrix& M) {
    if (lambda.size() == 0) return 1.0;
    return schur_from_traces(lambda, power_traces(M, lambda.size()));
}

OrthogonalityReport schur_orthogonality_check(int N, const Partition& lambda,
                                              const Partition& mu,
                                              const std::vector<Cplx>& a,
                                              const std::vector<Cplx>& b, long samples,
                                              std::uint64_t seed) {
    if (lambda.size() > 4 || mu.size() > 4 || N > 4)
        throw CapacityError("schur_orthogonality_check: |lambda|,|mu| <= 4, N <= 4");
    const CMatrix A = CMatrix::diagonal(a);
    const CMatrix B = CMatrix::diagonal(b);

    MeanAccumulator split, joint;
    split.values.reserve(samples);
    joint.values.reserve(samples);
    long done = 0;
    for (std::uint64_t batch = 0; done < samples; ++batch) {
        HaarSampler sampler(N, HaarSampler::substream_seed(seed, batch));
        const long want = std::min(kBatch, samples - done);
        for (long i = 0; i < want; ++i) {
            const CMatrix u = sampler.sample();
            const CMatrix udag = u.adjoint();
            split.values.push_back(schur_of_matrix(lambda, A * u) *
                                   schur_of_matrix(mu, B * udag));
            joint.values.push_back(schur_of_matrix(lambda, A * u * B * udag));
        }
        done += want;
    }

    OrthogonalityReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.N = N;
    rep.samples = samples;
    rep.seed = seed;
    rep.split_mean = split.mean();
    rep.split_stderr = split.stderr_of_mean();
    rep.joint_mean = joint.mean();
    rep.joint_stderr = joint.stderr_of_mean();

    const double dim_w = dim_gl(lambda, N).get_d();
    if (lambda == mu) {
        std::vector<Cplx> ab(a.size());
        for (size_t i = 0; i < a.size(); ++i) ab[i] = a[i] * b[i];
        rep.split_target = schur_of_matrix(lambda, CMatrix::diagonal(ab)) / dim_w;
    } else {
        rep.split_target = 0.0;
    }
    rep.joint_target =
        schur_of_matrix(lambda, A) * schur_of_matrix(lambda, B) / dim_w;
    return rep;
}

}  // namespace hlab
