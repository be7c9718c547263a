#include "hlab/symfunc.hpp"

#include <map>
#include <mutex>

#include "hlab/characters.hpp"

namespace hlab {

namespace {

ContentEvaluation compute_content_eval(const std::vector<int>& alphabet, int r_max) {
    ContentEvaluation ev;
    ev.f.assign(r_max + 1, 0);
    ev.e.assign(r_max + 1, 0);
    ev.f[0] = 1;
    ev.e[0] = 1;
    for (int x : alphabet) {
        // h picks up x with repetition, e without
        for (int r = 1; r <= r_max; ++r) ev.f[r] += x * ev.f[r - 1];
        for (int r = r_max; r >= 1; --r) ev.e[r] += x * ev.e[r - 1];
    }
    return ev;
}

std::map<std::vector<int>, ContentEvaluation> g_content_cache;
std::mutex g_content_mutex;

}  // namespace

ContentEvaluation content_eval(const Partition& lambda, int r_max) {
    if (r_max < 0) throw std::invalid_argument("content_eval: r_max must be >= 0");
    std::lock_guard<std::mutex> lock(g_content_mutex);
    auto& cached = g_content_cache[lambda.parts()];
    if (static_cast<int>(cached.f.size()) <= r_max)
        cached = compute_content_eval(lambda.contents(), std::max(r_max, 16));
    ContentEvaluation ev;
    ev.f.assign(cached.f.begin(), cached.f.begin() + r_max + 1);
    ev.e.assign(cached.e.begin(), cached.e.begin() + r_max + 1);
    return ev;
}

Int stirling_specialization(int N, int r) {
    if (N < 1) throw std::invalid_argument("stirling_specialization: N must be positive");
    std::vector<Int> h(r + 1, 0);
    h[0] = 1;
    for (int x = 1; x <= N; ++x)
        for (int j = 1; j <= r; ++j) h[j] += x * h[j - 1];
    return h[r];
}

Int stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    // S(n,k) = S(n-1,k-1) + k S(n-1,k)
    std::vector<Int> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + j * row[j];
        row[0] = 0;  // S(i, 0) = 0 once i >= 1
    }
    return n == 0 ? Int(k == 0 ? 1 : 0) : row[k];
}

Rat omega_point(const Partition& lambda, const Rat& hbar) {
    Rat prod = 1;
    for (int c : lambda.contents()) {
        Rat factor = 1 + hbar * c;
        prod *= factor;
    }
    return prod;
}

Rat omega_inverse(const Partition& lambda, int N) {
    if (N < 1) throw std::invalid_argument("omega_inverse: N must be positive");
    Int num = 1, den = 1;
    for (int c : lambda.contents()) {
        if (N + c == 0)
            throw SingularEvaluation("omega_inverse: content -N present in " +
                                     lambda.to_string());
        num *= N;
        den *= N + c;
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat power_sum_eval(const Partition& alpha, const Spectrum& s) {
    Rat prod = 1;
    for (int k : alpha.parts()) {
        Rat psum = 0;
        for (const Rat& x : s) {
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), x.get_num().get_mpz_t(), k);
            mpz_pow_ui(p.get_den_mpz_t(), x.get_den().get_mpz_t(), k);
            psum += p;
        }
        prod *= psum;
    }
    return prod;
}

Rat schur_eval(const Partition& lambda, const Spectrum& s) {
    const int d = lambda.size();
    if (d == 0) return 1;
    if (lambda.length() > static_cast<int>(s.size())) return 0;
    const auto table = character_table(d);
    const int li = table->index_of(lambda);
    Rat total = 0;
    const auto& order = table->partitions();
    for (size_t ai = 0; ai < order.size(); ++ai) {
        const Int& chi = table->chi(li, static_cast<int>(ai));
        if (chi == 0) continue;
        Rat term(chi, centralizer_order(order[ai]));
        term.canonicalize();
        total += term * power_sum_eval(order[ai], s);
    }
    return total;
}

}  // namespace hlab
