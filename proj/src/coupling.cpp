#include "hlab/coupling.hpp"

#include <algorithm>
#include <cmath>

#include "hlab/characters.hpp"

namespace hlab {

namespace {

void check_args(int m, int d, int N, const Spectrum& a, const Spectrum& b) {
    if (m < 0 || m > 2) throw std::invalid_argument("m must be 0, 1 or 2");
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (m == 0 && (!a.empty() || !b.empty()))
        throw std::invalid_argument("m=0 takes no spectra");
    if (m >= 1 && a.size() != static_cast<size_t>(N))
        throw std::invalid_argument("spectrum a must have length N");
    if (m == 1 && !b.empty()) throw std::invalid_argument("m=1 takes one spectrum");
    if (m == 2 && b.size() != static_cast<size_t>(N))
        throw std::invalid_argument("spectrum b must have length N");
}

Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace

CouplingValue coupling_char(int m, int d, int N, const Spectrum& a, const Spectrum& b) {
    check_args(m, d, N, a, b);
    const auto table = character_table(d);
    Rat total = 0;
    for (const auto& lambda : table->partitions()) {
        if (lambda.length() > N) continue;
        const Rat w = omega_inverse(lambda, N);
        if (m == 0) {
            const Int dim = dim_sym(lambda);
            Rat term(dim * dim, factorial(d));
            term.canonicalize();
            total += w * term;
        } else if (m == 1) {
            total += schur_eval(lambda, a) * w * Rat(dim_sym(lambda));
        } else {
            total += schur_eval(lambda, a) * schur_eval(lambda, b) * w;
        }
    }
    if (m == 0)
        total *= Rat(int_pow(N, 2 * static_cast<unsigned long>(d)));
    else if (m == 1)
        total *= Rat(int_pow(N, static_cast<unsigned long>(d)));
    else
        total *= Rat(factorial(d));
    return {m, d, N, a, b, total};
}

std::map<PairKey, Rat> string_coefficients(int m, int d, int N) {
    if (m < 0 || m > 2) throw std::invalid_argument("m must be 0, 1 or 2");
    const auto table = character_table(d);
    const auto& order = table->partitions();
    const int n = static_cast<int>(order.size());
    const Int dfact = factorial(d);

    std::vector<int> lambdas;  // indices with l(lambda) <= N
    for (int li = 0; li < n; ++li)
        if (order[li].length() <= N) lambdas.push_back(li);

    // omega[alpha][lambda] over the admissible lambdas
    std::vector<std::vector<Int>> omega(n, std::vector<Int>(lambdas.size()));
    std::vector<Rat> weight(lambdas.size());  // Omega^{-1} dim^2/d!
    for (size_t j = 0; j < lambdas.size(); ++j) {
        const Partition& lambda = order[lambdas[j]];
        const Int dim = dim_sym(lambda);
        Rat pl(dim * dim, dfact);
        pl.canonicalize();
        weight[j] = omega_inverse(lambda, N) * pl;
        for (int ai = 0; ai < n; ++ai)
            omega[ai][j] = central_character(order[ai], lambda);
    }

    const Rat prefactor =
        m == 0 ? Rat(int_pow(N, 2 * static_cast<unsigned long>(d)))
               : (m == 1 ? Rat(int_pow(N, static_cast<unsigned long>(d))) : Rat(1));

    std::map<PairKey, Rat> out;
    auto inner = [&](int ai, int bi) -> Rat {
        Rat s = 0;
        for (size_t j = 0; j < lambdas.size(); ++j) {
            Rat term = weight[j];
            if (ai >= 0) term *= omega[ai][j];
            if (bi >= 0) term *= omega[bi][j];
            s += term;
        }
        return s * prefactor;
    };
    if (m == 0) {
        out[PairKey{}] = inner(-1, -1);
    } else if (m == 1) {
        for (int ai = 0; ai < n; ++ai) out[PairKey{order[ai], {}}] = inner(ai, -1);
    } else {
        for (int ai = 0; ai < n; ++ai)
            for (int bi = 0; bi < n; ++bi)
                out[PairKey{order[ai], order[bi]}] = inner(ai, bi);
    }
    return out;
}

CouplingValue coupling_string(int m, int d, int N, const Spectrum& a, const Spectrum& b) {
    check_args(m, d, N, a, b);
    Rat total = 0;
    for (const auto& [key, coef] : string_coefficients(m, d, N)) {
        Rat term = coef;
        if (m >= 1) term *= power_sum_eval(key.alpha, a);
        if (m == 2) term *= power_sum_eval(key.beta, b);
        total += term;
    }
    return {m, d, N, a, b, total};
}

Rat lis_probability(int d, int N) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (N < 1) throw std::invalid_argument("N must be positive");
    Rat total = 0;
    for (const auto& lambda : enumerate_partitions(d, N)) {
        const Int dim = dim_sym(lambda);
        Rat term(dim * dim, factorial(d));
        term.canonicalize();
        total += term;
    }
    return total;
}

Rat lis_probability_brute(int d, int N) {
    if (d < 1 || d > 8)
        throw std::invalid_argument("lis_probability_brute: oracle scale is d <= 8");
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    Int good = 0, all = 0;
    do {
        std::vector<int> best(d, 1);
        int lis = 1;
        for (int i = 1; i < d; ++i) {
            for (int j = 0; j < i; ++j)
                if (perm[j] < perm[i]) best[i] = std::max(best[i], best[j] + 1);
            lis = std::max(lis, best[i]);
        }
        if (lis <= N) ++good;
        ++all;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rat p(good, all);
    p.canonicalize();
    return p;
}

Rat coupling_norm(int m, int d, int N) {
    if (m == 0) {
        return coupling_char(0, d, N).value;
    }
    const Rat n2d(int_pow(N, 2 * static_cast<unsigned long>(d)));
    if (m == 1) return n2d * lis_probability(d, N);
    if (m == 2) return n2d;
    throw std::invalid_argument("m must be 0, 1 or 2");
}

TruncationBound truncation_bound(const Rat& rho, const Rat& t, int N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (rho <= 0 || t <= 0) throw std::invalid_argument("rho and t must be positive");
    const double rho_d = rho.get_d(), t_d = t.get_d();
    if (rho_d * M_E >= t_d)
        throw std::invalid_argument("truncation_bound requires rho < t/e");

    TruncationBound out;
    out.rho = rho;
    out.t = t;
    out.N = N;
    out.u_val = 1.0 / (1.0 - M_E * rho_d / t_d);
    out.v_val = t_d * std::log(t_d / (M_E * rho_d));
    out.bound = out.u_val * std::exp(-out.v_val * N * N);

    // exact tail sum_{d > tN^2} rho^d N^{2d}/d!, summed until the term
    // ratio rho N^2/(d+1) drops below 1/2, then a geometric remainder
    Rat tN2 = t * (N * N);
    long d0 = static_cast<long>(mpz_class(tN2.get_num() / tN2.get_den()).get_si()) + 1;
    const Rat x = rho * (N * N);
    Rat term = 1;
    for (long i = 1; i < d0; ++i) term *= x / i;
    term *= x / d0;
    Rat partial = 0;
    long d = d0;
    while (true) {
        partial += term;
        ++d;
        term *= x / d;
        if (Rat(2) * term < partial * Rat(1, 1000000) && x < Rat(d, 2)) break;
    }
    out.tail_partial = partial;
    out.tail_upper = Rat(partial + Rat(2) * term).get_d();
    out.tail_below_bound = out.tail_upper < out.bound;
    return out;
}

FieldlessValues fieldless_specializations(int d, int N) {
    const Rat n2d(int_pow(N, 2 * static_cast<unsigned long>(d)));
    return {n2d * lis_probability(d, N), n2d};
}

bool hciz_degeneration_check(int d, int N, const Spectrum& spectrum) {
    const Spectrum ones(N, 1);
    const Rat lhs = coupling_char(2, d, N, spectrum, ones).value;
    Rat p1 = 0;
    for (const Rat& x : spectrum) p1 += x;
    Rat rhs(int_pow(N, static_cast<unsigned long>(d)));
    for (int i = 0; i < d; ++i) rhs *= p1;
    return lhs == rhs;
}

}  // namespace hlab
