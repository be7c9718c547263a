#include "hlab/hurwitz.hpp"

#include <algorithm>
#include <numeric>

namespace hlab {

namespace {

Int rat_to_int(const Rat& q, const char* what) {
    if (q.get_den() != 1)
        throw std::logic_error(std::string(what) + ": expected an integer, got " +
                               q.get_str());
    return q.get_num();
}

// Per-degree data for Plancherel-average walk counts.
struct PlancherelData {
    int d;
    std::vector<Partition> classes;           // canonical order
    std::vector<Int> dims;                    // dim V^lambda
    std::vector<std::vector<Int>> omega;      // [alpha][lambda]
    std::vector<std::vector<Int>> f;          // [lambda][r]
    int r_max;
};

PlancherelData plancherel_data(int d, int r_max) {
    PlancherelData pd;
    pd.d = d;
    pd.r_max = r_max;
    const auto table = character_table(d);
    pd.classes = table->partitions();
    const int n = static_cast<int>(pd.classes.size());
    pd.dims.resize(n);
    for (int li = 0; li < n; ++li) pd.dims[li] = table->dim(li);
    pd.omega.assign(n, std::vector<Int>(n));
    for (int ai = 0; ai < n; ++ai) {
        const Int cs = class_size(pd.classes[ai]);
        for (int li = 0; li < n; ++li) {
            Rat q(cs * table->chi(li, ai), pd.dims[li]);
            q.canonicalize();
            pd.omega[ai][li] = rat_to_int(q, "central character");
        }
    }
    pd.f.resize(n);
    for (int li = 0; li < n; ++li) pd.f[li] = content_eval(pd.classes[li], r_max).f;
    return pd;
}

Int walk_count_from_data(const PlancherelData& pd, int ai, int bi, int r,
                         WalkFlavor flavor) {
    const int d = pd.d;
    Rat total = 0;
    const int n = static_cast<int>(pd.classes.size());
    int trans_idx = -1;
    if (flavor == WalkFlavor::classical && d >= 2) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), d - 2, 1);
        Partition simple_class(parts);
        for (int i = 0; i < n; ++i)
            if (pd.classes[i] == simple_class) trans_idx = i;
    }
    for (int li = 0; li < n; ++li) {
        Int mid;
        if (flavor == WalkFlavor::monotone) {
            mid = pd.f[li][r];
        } else if (d >= 2) {
            mpz_pow_ui(mid.get_mpz_t(), pd.omega[trans_idx][li].get_mpz_t(),
                       static_cast<unsigned long>(r));
        } else {
            mid = (r == 0) ? 1 : 0;
        }
        if (mid == 0) continue;
        Rat term(pd.omega[ai][li] * mid * pd.omega[bi][li] * pd.dims[li] * pd.dims[li],
                 factorial(d));
        term.canonicalize();
        total += term;
    }
    const Int w = rat_to_int(total, "walk count");
    if (w < 0) throw std::logic_error("negative walk count");
    return w;
}

int class_index(const std::vector<Partition>& classes, const Partition& p) {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == p) return static_cast<int>(i);
    throw std::invalid_argument("class not found: " + p.to_string());
}

Partition cycle_type(const std::vector<int>& perm) {
    const int d = static_cast<int>(perm.size());
    std::vector<bool> seen(d, false);
    std::vector<int> cycles;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return Partition(std::move(cycles));
}

// Union-find with rollback (no path compression).
struct Dsu {
    std::vector<int> parent, size;
    std::vector<int> undo;  // roots absorbed, in order
    int components;

    explicit Dsu(int n) : parent(n), size(n, 1), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            undo.push_back(-1);
            return false;
        }
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        undo.push_back(b);
        --components;
        return true;
    }
    void rollback() {
        const int b = undo.back();
        undo.pop_back();
        if (b < 0) return;
        size[find(b)] -= size[b];
        parent[b] = b;
        ++components;
    }
};

struct BruteContext {
    int d, r_max;
    WalkFlavor flavor;
    std::vector<Partition> classes;
    std::vector<std::vector<Int>> total, transitive;  // [r][beta]
    std::vector<int> current;
    Dsu dsu{1};
};

void brute_dfs(BruteContext& ctx, int depth, int min_label) {
    const int beta_idx = class_index(ctx.classes, cycle_type(ctx.current));
    ctx.total[depth][beta_idx] += 1;
    if (ctx.dsu.components == 1) ctx.transitive[depth][beta_idx] += 1;
    if (depth == ctx.r_max) return;
    const int start_label = ctx.flavor == WalkFlavor::monotone ? min_label : 1;
    for (int t = start_label; t < ctx.d; ++t) {
        for (int s = 0; s < t; ++s) {
            std::swap(ctx.current[s], ctx.current[t]);
            ctx.dsu.unite(s, t);
            brute_dfs(ctx, depth + 1, t);
            ctx.dsu.rollback();
            std::swap(ctx.current[s], ctx.current[t]);
        }
    }
}

}  // namespace

Int walk_count_char(const Partition& alpha, const Partition& beta, int r,
                    WalkFlavor flavor) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("walk_count_char: |alpha| != |beta|");
    if (r < 0) throw std::invalid_argument("walk_count_char: r must be >= 0");
    const int d = alpha.size();
    if (d == 0) return r == 0 ? 1 : 0;
    const auto pd = plancherel_data(d, flavor == WalkFlavor::monotone ? r : 0);
    return walk_count_from_data(pd, class_index(pd.classes, alpha),
                                class_index(pd.classes, beta), r, flavor);
}

BruteWalkCounts walk_counts_brute_all(const Partition& alpha, int r_max,
                                      WalkFlavor flavor) {
    const int d = alpha.size();
    if (d < 1 || d > 6 || r_max > 8)
        throw std::invalid_argument("walk_counts_brute_all: oracle scale is d <= 6, r <= 8");
    BruteContext ctx;
    ctx.d = d;
    ctx.r_max = r_max;
    ctx.flavor = flavor;
    ctx.classes = enumerate_partitions(d);
    const int n = static_cast<int>(ctx.classes.size());
    ctx.total.assign(r_max + 1, std::vector<Int>(n, 0));
    ctx.transitive.assign(r_max + 1, std::vector<Int>(n, 0));

    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!(cycle_type(perm) == alpha)) continue;
        ctx.current = perm;
        ctx.dsu = Dsu(d);
        // seed connectivity with the cycles of sigma
        for (int i = 0; i < d; ++i)
            if (perm[i] != i) ctx.dsu.unite(i, perm[i]);
        brute_dfs(ctx, 0, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    BruteWalkCounts out;
    out.classes = std::move(ctx.classes);
    out.total = std::move(ctx.total);
    out.transitive = std::move(ctx.transitive);
    return out;
}

Int walk_count_brute(const Partition& alpha, const Partition& beta, int r,
                     WalkFlavor flavor, bool connected) {
    const auto all = walk_counts_brute_all(alpha, r, flavor);
    const int bi = class_index(all.classes, beta);
    return connected ? all.transitive[r][bi] : all.total[r][bi];
}

PairKey HurwitzTable::canonical_key(int d, const Partition& alpha,
                                    const Partition& beta) const {
    const Partition ones(std::vector<int>(d, 1));
    switch (mode_) {
        case 0:
            if (!(alpha == ones) || !(beta == ones))
                throw std::invalid_argument("mode-0 table holds simple numbers only");
            return {};
        case 1:
            if (!(beta == ones))
                throw std::invalid_argument("mode-1 table requires beta = (1^d)");
            return {alpha, {}};
        default:
            return {alpha, beta};
    }
}

const Int& HurwitzTable::value(int d, int g, const Partition& alpha,
                               const Partition& beta) const {
    static const Int zero = 0;
    if (d < 1 || d > d_max_) throw TruncationError("degree beyond table coverage");
    if (g < genus_min(d)) return zero;
    if (g > genus_max_) throw TruncationError("genus beyond table coverage");
    const auto key = canonical_key(d, alpha, beta);
    auto it = entries_.find({d, key});
    if (it == entries_.end()) return zero;
    auto git = it->second.find(g);
    return git == it->second.end() ? zero : git->second;
}

const Int& HurwitzTable::simple(int d, int g) const {
    const Partition ones(std::vector<int>(d, 1));
    return value(d, g, ones, ones);
}

void HurwitzTable::set(int d, int g, const PairKey& key, Int v) {
    entries_[{d, key}][g] = std::move(v);
}

HurwitzTable disconnected_table(int mode, int d_max, int genus_max) {
    if (mode < 0 || mode > 2) throw std::invalid_argument("mode must be 0, 1 or 2");
    HurwitzTable table(mode, false, d_max, genus_max);
    for (int d = 1; d <= d_max; ++d) {
        const int r_max = std::max(0, 2 * genus_max - 2 + 2 * d);
        const auto pd = plancherel_data(d, r_max);
        const Partition ones(std::vector<int>(d, 1));
        const int ones_idx = class_index(pd.classes, ones);
        const int n = static_cast<int>(pd.classes.size());

        auto fill = [&](int ai, int bi, const PairKey& key) {
            const int la = pd.classes[ai].length(), lb = pd.classes[bi].length();
            for (int g = -d + 1; g <= genus_max; ++g) {
                const int r = 2 * g - 2 + la + lb;
                Int v = r < 0 ? Int(0)
                              : walk_count_from_data(pd, ai, bi, r, WalkFlavor::monotone);
                table.set(d, g, key, std::move(v));
            }
        };

        if (mode == 0) {
            fill(ones_idx, ones_idx, PairKey{});
        } else if (mode == 1) {
            for (int ai = 0; ai < n; ++ai) fill(ai, ones_idx, PairKey{pd.classes[ai], {}});
        } else {
            for (int ai = 0; ai < n; ++ai)
                for (int bi = 0; bi < n; ++bi)
                    fill(ai, bi, PairKey{pd.classes[ai], pd.classes[bi]});
        }
    }
    return table;
}

PairCoefficient stable_coefficient(const HurwitzTable& disc, int d) {
    if (disc.connected()) throw std::invalid_argument("expected a disconnected table");
    PairCoefficient c(disc.mode());
    for (const auto& [dk, by_genus] : disc.entries()) {
        if (dk.first != d) continue;
        const PairKey& key = dk.second;
        const int prefix = key.alpha.length() + key.beta.length();
        int sign = 1;
        if (disc.mode() == 1) sign = (key.alpha.length() + d) % 2 == 0 ? 1 : -1;
        if (disc.mode() == 2)
            sign = (key.alpha.length() + key.beta.length()) % 2 == 0 ? 1 : -1;
        LaurentGenusSeries s;
        s.set_trunc(2L * disc.genus_max() - 2 + prefix);
        for (const auto& [g, v] : by_genus)
            if (v != 0) s.add_coeff(2L * g - 2 + prefix, Rat(v) * sign);
        c.add_term(key, s);
    }
    return c;
}

HurwitzTable connected_table(const HurwitzTable& disc, int genus_max) {
    const int mode = disc.mode();
    const int d_max = disc.d_max();
    std::vector<PairCoefficient> coeffs;
    coeffs.push_back(PairCoefficient::one(mode));
    for (int d = 1; d <= d_max; ++d) coeffs.push_back(stable_coefficient(disc, d));
    const auto F = log(ExpSeries<PairCoefficient>(std::move(coeffs)));

    HurwitzTable out(mode, true, d_max, genus_max);
    for (int d = 1; d <= d_max; ++d) {
        for (const auto& [key, series] : F[d].terms()) {
            const int prefix = key.alpha.length() + key.beta.length();
            int sign = 1;
            if (mode == 1) sign = (key.alpha.length() + d) % 2 == 0 ? 1 : -1;
            if (mode == 2) sign = prefix % 2 == 0 ? 1 : -1;
            // genus < 0 coefficients must cancel in the logarithm
            for (long exp = series.min_exp(); exp < prefix - 2; exp += 2) {
                if (series.coeff(exp) != 0)
                    throw std::logic_error("connected extraction: nonzero genus < 0 term");
            }
            for (int g = 0; g <= genus_max; ++g) {
                const Rat& q = series.coeff(2L * g - 2 + prefix);  // may throw TruncationError
                Int v = rat_to_int(Rat(q) * sign, "connected Hurwitz number");
                if (v < 0) throw std::logic_error("negative connected Hurwitz number");
                out.set(d, g, key, std::move(v));
            }
        }
    }
    return out;
}

HurwitzTable connected_table(int mode, int d_max, int genus_max) {
    // products in the logarithm shuffle genus between factors; a margin of
    // d_max extra genus on the disconnected side is always sufficient
    const auto disc = disconnected_table(mode, d_max, genus_max + d_max);
    return connected_table(disc, genus_max);
}

SortingReport sorting_inequalities(int d, int g, const HurwitzTable& double_table,
                                   const HurwitzTable& single_table,
                                   const HurwitzTable& simple_table) {
    SortingReport rep;
    const auto classes = enumerate_partitions(d);
    const Partition ones(std::vector<int>(d, 1));
    rep.sum_double = 0;
    for (const auto& a : classes)
        for (const auto& b : classes) rep.sum_double += double_table.value(d, g, a, b);
    rep.sum_single = 0;
    for (const auto& a : classes) rep.sum_single += single_table.value(d, g, a, ones);
    rep.sum_simple = simple_table.value(d, g, ones, ones);
    Int two_d = 1, four_d = 1;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d));
    mpz_ui_pow_ui(four_d.get_mpz_t(), 4, static_cast<unsigned long>(d));
    rep.lhs = rep.sum_double;
    rep.mid = two_d * rep.sum_single;
    rep.rhs = four_d * rep.sum_simple;
    rep.strict_chain = rep.lhs < rep.mid && rep.mid < rep.rhs;
    return rep;
}

GenusRatioReport large_genus_ratio(int d, int g) {
    if (d < 2) throw std::invalid_argument("large_genus_ratio: d must be >= 2");
    GenusRatioReport rep;
    rep.d = d;
    rep.g = g;
    const Partition ones(std::vector<int>(d, 1));
    rep.value = walk_count_char(ones, ones, 2 * g - 2 + 2 * d);
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d - 1),
                  static_cast<unsigned long>(3 * d - 3 + 2 * g));
    Rat asym(2 * pw, factorial(d - 1) * factorial(d));
    asym.canonicalize();
    rep.ratio = Rat(rep.value) / asym;
    rep.ratio_d = rep.ratio.get_d();
    return rep;
}

}  // namespace hlab
