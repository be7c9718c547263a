#include "hlab/expansion.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>

namespace hlab {

namespace {

Rat n_power(int N, long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(N),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(p);
    Rat q(1, p);
    q.canonicalize();
    return q;
}

int key_sign(int mode, int d, const PairKey& key) {
    int l = key.alpha.length() + key.beta.length();
    if (mode == 1) l += d;
    if (mode == 0) return 1;
    return l % 2 == 0 ? 1 : -1;
}

void check_mode(const HurwitzTable& t, int m, bool want_connected) {
    if (t.mode() != m) throw std::invalid_argument("Hurwitz table mode mismatch");
    if (t.connected() != want_connected)
        throw std::invalid_argument(want_connected ? "expected a connected table"
                                                   : "expected a disconnected table");
}

Rat default_base(int i) {
    const int num = (i % 5) + 1;
    const int den = (i % 7) + num + 1;
    Rat q(i % 2 == 0 ? num : -num, den);
    q.canonicalize();
    return q;
}

Spectrum take_spectrum(const std::vector<Rat>& base, int N) {
    Spectrum s(N);
    for (int i = 0; i < N; ++i)
        s[i] = i < static_cast<int>(base.size()) ? base[i] : default_base(i);
    return s;
}

}  // namespace

Rat GenusFreeEnergy::evaluate(int d, const Spectrum& a, const Spectrum& b) const {
    auto it = coeffs.find(d);
    if (it == coeffs.end()) throw std::invalid_argument("degree not covered");
    Rat total = 0;
    for (const auto& [key, coef] : it->second) {
        Rat term = coef;
        if (m >= 1) term *= power_sum_eval(key.alpha, a);
        if (m == 2) term *= power_sum_eval(key.beta, b);
        total += term;
    }
    return total;
}

GenusFreeEnergy genus_free_energy(int m, int N, int g, int d_max,
                                  const HurwitzTable& connected) {
    check_mode(connected, m, true);
    GenusFreeEnergy out{m, N, g, d_max, {}};
    for (int d = 1; d <= d_max; ++d) {
        auto& row = out.coeffs[d];
        const Partition ones(std::vector<int>(d, 1));
        const auto classes = enumerate_partitions(d);
        auto put = [&](const Partition& alpha, const Partition& beta, const PairKey& key) {
            const Int& h = connected.value(d, g, alpha, beta);
            if (h == 0) return;
            Rat coef = Rat(h) * key_sign(m, d, key);
            coef *= n_power(N, -(key.alpha.length() + key.beta.length()));
            row[key] = coef;
        };
        if (m == 0) {
            put(ones, ones, PairKey{});
        } else if (m == 1) {
            for (const auto& alpha : classes) put(alpha, ones, PairKey{alpha, {}});
        } else {
            for (const auto& alpha : classes)
                for (const auto& beta : classes) put(alpha, beta, PairKey{alpha, beta});
        }
    }
    return out;
}

std::vector<Rat> free_energy_coeffs(int m, int N, int d_max, const Spectrum& a,
                                    const Spectrum& b) {
    std::vector<Rat> c;
    c.reserve(d_max + 1);
    c.push_back(1);
    for (int d = 1; d <= d_max; ++d) c.push_back(coupling_char(m, d, N, a, b).value);
    return log(ExpSeries<Rat>(std::move(c))).coeffs();
}

ExpSeries<Rat> e_bar_coeffs(int m, int N, int k, int d_max, int sign,
                            const HurwitzTable& connected, const Spectrum& a,
                            const Spectrum& b) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
    std::vector<Rat> f(d_max + 1, Rat(0));
    for (int g = 0; g <= k; ++g) {
        const auto fg = genus_free_energy(m, N, g, d_max, connected);
        const Rat w = n_power(N, 2 - 2 * g) * sign;
        for (int d = 1; d <= d_max; ++d) f[d] += w * fg.evaluate(d, a, b);
    }
    return exp(ExpSeries<Rat>(std::move(f)));
}

std::vector<Rat> phi_coefficients(int m, int N, int k, int d_max,
                                  const HurwitzTable& connected, const Spectrum& a,
                                  const Spectrum& b) {
    std::vector<Rat> c;
    c.reserve(d_max + 1);
    c.push_back(1);
    for (int d = 1; d <= d_max; ++d) c.push_back(coupling_char(m, d, N, a, b).value);
    const ExpSeries<Rat> i_series(std::move(c));
    const auto e_inv = e_bar_coeffs(m, N, k, d_max, -1, connected, a, b);
    return mul(i_series, e_inv).coeffs();
}

CancellationReport cancellation_check(int d, int g, const HurwitzTable& connected) {
    if (d == 1 && g == 0)
        throw std::invalid_argument("cancellation excludes (d,g) = (1,0)");
    if (connected.mode() != 2 || !connected.connected())
        throw std::invalid_argument("cancellation needs a connected mode-2 table");
    CancellationReport rep{d, g, true, {}};
    const auto classes = enumerate_partitions(d);
    for (const auto& alpha : classes) {
        Rat s = 0;
        for (const auto& beta : classes) {
            Rat term(connected.value(d, g, alpha, beta));
            if (beta.length() % 2 != 0) term = -term;
            s += term;
        }
        rep.witness[alpha] = s;
        if (s != 0) rep.holds = false;
    }
    return rep;
}

std::map<int, std::map<int, Int>> genus_restricted_disconnected(
    const HurwitzTable& connected, int g_min, int d_max, int genus_max) {
    check_mode(connected, 0, true);
    if (g_min < 1) throw std::invalid_argument("g_min must be >= 1");
    std::vector<LaurentGenusSeries> f;
    f.reserve(d_max + 1);
    f.push_back(LaurentGenusSeries{});
    for (int d = 1; d <= d_max; ++d) {
        LaurentGenusSeries s;
        s.set_trunc(2L * genus_max - 2);
        for (int g = g_min; g <= genus_max; ++g) {
            const Int& h = connected.simple(d, g);
            if (h != 0) s.add_coeff(2L * g - 2, Rat(h));
        }
        f.push_back(std::move(s));
    }
    const auto e = exp(ExpSeries<LaurentGenusSeries>(std::move(f)));
    std::map<int, std::map<int, Int>> out;
    for (int d = 1; d <= d_max; ++d) {
        for (int g = g_min; g <= genus_max; ++g) {
            const Rat& q = e[d].coeff(2L * g - 2);
            if (q.get_den() != 1 || q < 0)
                throw std::logic_error("genus-restricted count must be a nonnegative integer");
            out[d][g] = q.get_num();
        }
    }
    return out;
}

StableIdentityReport stable_identity_check(int N, int k, int d,
                                           const HurwitzTable& connected, int G) {
    check_mode(connected, 0, true);
    if (d > N) throw std::invalid_argument("stable identity requires d <= N");
    if (G < 0) G = k + 6;
    StableIdentityReport rep;
    rep.m = 0;
    rep.N = N;
    rep.k = k;
    rep.d = d;
    rep.G = G;
    rep.phi = phi_coefficients(0, N, k, d, connected)[d];
    const auto restricted = genus_restricted_disconnected(connected, k + 1, d, G + 1);
    rep.partial = 0;
    for (int g = k + 1; g <= G; ++g)
        rep.partial += n_power(N, 2 - 2 * g) * Rat(restricted.at(d).at(g));
    const Rat first_omitted = n_power(N, 2 - 2 * (G + 1)) * Rat(restricted.at(d).at(G + 1));
    const double q = d > 1 ? static_cast<double>(d - 1) * (d - 1) / (N * N) : 0.0;
    rep.tail_bound = 4.0 * first_omitted.get_d() / (1.0 - q);
    Rat diff = rep.phi - rep.partial;
    if (diff < 0) diff = -diff;
    rep.within_bound = diff.get_d() <= rep.tail_bound;
    return rep;
}

ConcentrationReport concentration_scan(int m, int k, int N_min, int N_max,
                                       const Rat& xi, int d_cap) {
    ConcentrationReport rep{m, k, xi, {}, true};
    // fixed degree window across N so successive points are comparable
    const int d_max = d_cap;
    std::optional<HurwitzTable> conn0;
    if (m == 0) conn0.emplace(connected_table(0, d_max, k));
    for (int N = N_min; N <= N_max; ++N) {
        std::vector<Rat> phi(d_max + 1, Rat(0));
        if (m == 0) {
            phi = phi_coefficients(0, N, k, d_max, *conn0);
        } else {
            // all-ones route: E_bar(1..1) = e^{N^2 z}, so (E^-1)^c = (-N^2)^c
            const Rat n2 = Rat(N) * N;
            for (int d = 1; d <= d_max; ++d) {
                Rat s = 0;
                for (int c = 0; c <= d; ++c) {
                    const Rat head = m == 1 ? fieldless_specializations(std::max(c, 1), N).L
                                            : fieldless_specializations(std::max(c, 1), N).E;
                    Rat term = c == 0 ? Rat(1) : head;
                    Rat tail = 1;
                    for (int j = 0; j < d - c; ++j) tail *= -n2;
                    s += Rat(binomial(d, c)) * term * tail;
                }
                phi[d] = s;
            }
        }
        double s = 0;
        Rat w = 1;
        for (int d = 1; d <= d_max; ++d) {
            w *= xi / d;
            s += w.get_d() * std::abs(phi[d].get_d());
        }
        const double scaled = std::pow(static_cast<double>(N), 2 * k - 2) * s;
        rep.points.push_back({N, d_max, s, scaled});
    }
    for (size_t i = 1; i < rep.points.size(); ++i)
        if (rep.points[i].scaled > rep.points[i - 1].scaled + 1e-15)
            rep.non_increasing = false;
    return rep;
}

PlancherelBoundReport plancherel_mechanism_bounds(int N, int d, int r_max) {
    if (d <= N) throw std::invalid_argument("unstable window requires d > N");
    PlancherelBoundReport rep{N, d, r_max, true, true, true, Rat(0), true};
    Int hockey = 0;
    for (int r = 0; r <= r_max; ++r) {
        const Int f = stirling_specialization(N, r);
        if (f != stirling2(N + r, N)) rep.stirling_matches = false;
        Int nr;
        mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(N),
                      static_cast<unsigned long>(r));
        if (f > nr * binomial(N + r, N)) rep.stirling_bounded = false;
        hockey += binomial(N + r, N);
        rep.completion_cost += Rat(f, factorial(d) * factorial(d));
    }
    rep.completion_cost.canonicalize();
    if (hockey != binomial(N + r_max + 1, N + 1)) rep.hockey_stick = false;
    // the hockey-stick closed form dominates the exact completion cost
    Rat bound(binomial(N + r_max + 1, N + 1), factorial(d) * factorial(d));
    bound.canonicalize();
    Int nr_max;
    mpz_ui_pow_ui(nr_max.get_mpz_t(), static_cast<unsigned long>(N),
                  static_cast<unsigned long>(r_max));
    rep.ok = rep.stirling_matches && rep.stirling_bounded && rep.hockey_stick &&
             rep.completion_cost <= bound * Rat(nr_max);
    return rep;
}

TrendReport large_N_trend(int m, int d, int k, int N_min, int N_max,
                          const HurwitzTable& connected,
                          const std::vector<Rat>& base_spectrum_a,
                          const std::vector<Rat>& base_spectrum_b) {
    if (N_min < d) throw std::invalid_argument("trend window requires N >= d");
    TrendReport rep{m, d, k, {}, true, true};
    const int G = connected.genus_max();
    if (G <= k) throw std::invalid_argument("table genus range does not reach past k");

    // key sums S_g over the table at degree d (N cancels against 1/N^l,
    // so |coef| * N^{l(alpha)+l(beta)} sums to N^{2-2g} S_g per genus)
    std::vector<Int> key_sum(G + 1, 0);
    const Partition id(std::vector<int>(d, 1));
    for (int g = k + 1; g <= G; ++g) {
        if (m == 0) {
            key_sum[g] = connected.simple(d, g);
        } else {
            for (const auto& alpha : enumerate_partitions(d)) {
                if (m == 1) {
                    key_sum[g] += connected.value(d, g, alpha, id);
                } else {
                    for (const auto& beta : enumerate_partitions(d))
                        key_sum[g] += connected.value(d, g, alpha, beta);
                }
            }
        }
    }

    for (int N = N_min; N <= N_max; ++N) {
        const Spectrum a = m >= 1 ? take_spectrum(base_spectrum_a, N) : Spectrum{};
        const Spectrum b = m == 2 ? take_spectrum(base_spectrum_b, N) : Spectrum{};
        const Rat fn = free_energy_coeffs(m, N, d, a, b)[d];
        Rat truncated = 0;
        for (int g = 0; g <= k; ++g)
            truncated +=
                n_power(N, 2 - 2 * g) * genus_free_energy(m, N, g, d, connected).evaluate(d, a, b);
        Rat r = fn - truncated;
        if (r < 0) r = -r;

        Rat l1 = 0;
        for (int g = k + 1; g <= G; ++g) l1 += n_power(N, 2 - 2 * g) * Rat(key_sum[g]);
        const Rat q = Rat((d - 1) * (d - 1), N * N);  // per-genus decay, d <= N
        if (q < 1 && key_sum[G] != 0)  // first omitted genus ~ (d-1)^2 S_G N^{-2G}
            l1 += 4 * n_power(N, -2 * G) * Rat(key_sum[G]) * Rat((d - 1) * (d - 1)) /
                  (1 - q);

        rep.points.push_back(
            {N, r, n_power(N, 2 * k - 2) * r, n_power(N, 2 * k - 2) * l1});
        if (r > l1) rep.within_bound = false;
    }
    for (size_t i = 1; i < rep.points.size(); ++i) {
        const Rat& prev = rep.points[i - 1].l1_scaled;
        const Rat& cur = rep.points[i].l1_scaled;
        if (prev == 0 && cur == 0) continue;  // degree 1: no positive-genus content
        if (!(cur < prev)) rep.decreasing = false;
    }
    return rep;
}

}  // namespace hlab
