#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlab/cache.hpp"
#include "hlab/coupling.hpp"
#include "hlab/expansion.hpp"
#include "hlab/montecarlo.hpp"

using nlohmann::json;
using namespace hlab;

namespace {

Rat parse_rat(const std::string& text) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw CLI::ValidationError("bad rational: " + text);
    if (q.get_den() == 0) throw CLI::ValidationError("zero denominator: " + text);
    q.canonicalize();
    return q;
}

Spectrum parse_spectrum(const std::string& text) {
    Spectrum s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) s.push_back(parse_rat(item));
    return s;
}

std::vector<Cplx> parse_complex_spectrum(const std::string& text) {
    std::vector<Cplx> s;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            s.emplace_back(std::stod(item), 0.0);
        else
            s.emplace_back(std::stod(item.substr(0, colon)),
                           std::stod(item.substr(colon + 1)));
    }
    return s;
}

std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    return c.get_str();
}

json partition_json(const Partition& p) { return json(p.parts()); }

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << j.dump(2) << "\n";
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << text;
    }
}

json hurwitz_json(const HurwitzTable& t) {
    json entries = json::array();
    for (const auto& [dk, by_genus] : t.entries()) {
        json rec;
        rec["d"] = dk.first;
        rec["alpha"] = partition_json(dk.second.alpha);
        rec["beta"] = partition_json(dk.second.beta);
        json values = json::array();
        for (const auto& [g, v] : by_genus) values.push_back({g, v.get_str()});
        rec["values"] = std::move(values);
        entries.push_back(std::move(rec));
    }
    return json{{"mode", t.mode()},
                {"connected", t.connected()},
                {"d_max", t.d_max()},
                {"genus_max", t.genus_max()},
                {"entries", std::move(entries)}};
}

std::string hurwitz_csv(const HurwitzTable& t) {
    std::ostringstream out;
    out << "d,alpha,beta,g,value\n";
    auto fmt = [](const Partition& p) {
        std::string s;
        for (int i = 0; i < p.length(); ++i) {
            if (i) s += '+';
            s += std::to_string(p.part(i));
        }
        return s;
    };
    for (const auto& [dk, by_genus] : t.entries())
        for (const auto& [g, v] : by_genus)
            out << dk.first << ',' << fmt(dk.second.alpha) << ',' << fmt(dk.second.beta)
                << ',' << g << ',' << v.get_str() << "\n";
    return out.str();
}

struct VerifyState {
    json failures = json::array();
    int checks = 0;
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

void verify_oracle(VerifyState& v, int d_max, int r_max) {
    for (int d = 1; d <= d_max; ++d) {
        const auto classes = enumerate_partitions(d);
        for (const auto& alpha : classes) {
            for (WalkFlavor flavor : {WalkFlavor::monotone, WalkFlavor::classical}) {
                const auto brute = walk_counts_brute_all(alpha, r_max, flavor);
                for (int r = 0; r <= r_max; ++r)
                    for (size_t b = 0; b < brute.classes.size(); ++b) {
                        const Int w = walk_count_char(alpha, brute.classes[b], r, flavor);
                        v.check(w == brute.total[r][b],
                                "walk d=" + std::to_string(d) + " r=" + std::to_string(r));
                    }
            }
        }
    }
}

void verify_cancellation(VerifyState& v, int d_max, int g_max) {
    const auto conn = cached_connected_table(2, d_max, g_max);
    for (int d = 1; d <= d_max; ++d)
        for (int g = 0; g <= g_max; ++g) {
            if (d == 1 && g == 0) continue;
            v.check(cancellation_check(d, g, conn).holds,
                    "cancellation d=" + std::to_string(d) + " g=" + std::to_string(g));
        }
}

void verify_sorting(VerifyState& v, int d_max, int g_max) {
    const auto disc2 = cached_disconnected_table(2, d_max, g_max);
    const auto disc1 = cached_disconnected_table(1, d_max, g_max);
    const auto disc0 = cached_disconnected_table(0, d_max, g_max);
    const auto conn2 = cached_connected_table(2, d_max, g_max);
    const auto conn1 = cached_connected_table(1, d_max, g_max);
    const auto conn0 = cached_connected_table(0, d_max, g_max);
    for (int d = 2; d <= d_max; ++d)
        for (int g = 0; g <= g_max; ++g) {
            v.check(sorting_inequalities(d, g, disc2, disc1, disc0).strict_chain,
                    "sorting disc d=" + std::to_string(d) + " g=" + std::to_string(g));
            v.check(sorting_inequalities(d, g, conn2, conn1, conn0).strict_chain,
                    "sorting conn d=" + std::to_string(d) + " g=" + std::to_string(g));
        }
}

void verify_stable(VerifyState& v, int N_max, int k_max) {
    const int gneed = k_max + 7 + N_max;
    const auto conn = cached_connected_table(0, N_max, gneed);
    for (int N = 2; N <= N_max; ++N)
        for (int k = 0; k <= k_max; ++k)
            for (int d = 1; d <= N; ++d)
                v.check(stable_identity_check(N, k, d, conn).within_bound,
                        "stable N=" + std::to_string(N) + " k=" + std::to_string(k) +
                            " d=" + std::to_string(d));
    for (int N = 2; N <= N_max; ++N)
        for (int k = 0; k <= k_max; ++k) {
            const int d_max = std::max(1, N * N / 4);
            const Spectrum ones(N, 1);
            const auto conn2 = cached_connected_table(2, std::min(d_max, 6), k_max);
            const auto phi = phi_coefficients(2, N, k, std::min(d_max, 6), conn2, ones, ones);
            for (size_t d = 1; d < phi.size(); ++d)
                v.check(phi[d] == 0, "phi2 all-ones N=" + std::to_string(N) +
                                         " k=" + std::to_string(k) +
                                         " d=" + std::to_string(d));
        }
}

void verify_concentration(VerifyState& v, int N_max, int k_max) {
    for (int m : {0, 1, 2})
        for (int k = 0; k <= k_max; ++k) {
            const auto rep = concentration_scan(m, k, 2, N_max, Rat(1, 100));
            v.check(rep.non_increasing, "concentration m=" + std::to_string(m) +
                                            " k=" + std::to_string(k));
        }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of the BGW/HCIZ topological expansion"};
    app.require_subcommand(1);
    install_cache();

    std::string out_path;
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* chars = app.add_subcommand("chars", "character table of S(d)");
    add_out(chars);
    int chars_d = 1;
    chars->add_option("--d", chars_d, "degree")->required();

    auto* hur = app.add_subcommand("hurwitz", "monotone Hurwitz number tables");
    add_out(hur);
    int hur_mode = 0, hur_dmax = 1, hur_gmax = 0;
    bool hur_conn = false;
    std::string hur_format = "json";
    hur->add_option("--mode", hur_mode, "0, 1 or 2")->check(CLI::Range(0, 2));
    hur->add_flag("--connected", hur_conn, "connected numbers");
    hur->add_option("--dmax", hur_dmax)->required();
    hur->add_option("--gmax", hur_gmax)->required();
    hur->add_option("--format", hur_format)->check(CLI::IsMember({"json", "csv"}));

    auto* coup = app.add_subcommand("coupling", "coupling coefficient I_N^{(m)d}");
    add_out(coup);
    int coup_m = 0, coup_N = 1, coup_d = 1;
    std::string coup_a, coup_b;
    coup->add_option("--m", coup_m)->required()->check(CLI::Range(0, 2));
    coup->add_option("--N", coup_N)->required();
    coup->add_option("--d", coup_d)->required();
    coup->add_option("--spectrum-a", coup_a, "comma-separated rationals (default all-ones)");
    coup->add_option("--spectrum-b", coup_b, "comma-separated rationals (default all-ones)");

    auto* ver = app.add_subcommand("verify", "identity suites");
    add_out(ver);
    std::string ver_suite = "all";
    int ver_dmax = 4, ver_gmax = 2, ver_Nmax = 3;
    ver->add_option("--suite", ver_suite)
        ->check(CLI::IsMember(
            {"oracle", "cancellation", "sorting", "stable", "concentration", "all"}));
    ver->add_option("--dmax", ver_dmax);
    ver->add_option("--gmax", ver_gmax);
    ver->add_option("--Nmax", ver_Nmax);

    auto* scan = app.add_subcommand("scan", "trend scans");
    add_out(scan);
    std::string scan_kind = "concentration";
    int scan_m = 0, scan_k = 0, scan_d = 2, scan_Nmin = 2, scan_Nmax = 5, scan_gmax = 12;
    std::string scan_xi = "1/100";
    scan->add_option("--kind", scan_kind)
        ->check(CLI::IsMember({"concentration", "largeN", "asymptotics"}));
    scan->add_option("--m", scan_m)->check(CLI::Range(0, 2));
    scan->add_option("--k", scan_k);
    scan->add_option("--d", scan_d);
    scan->add_option("--Nmin", scan_Nmin);
    scan->add_option("--Nmax", scan_Nmax);
    scan->add_option("--gmax", scan_gmax);
    scan->add_option("--xi", scan_xi);

    auto* mc = app.add_subcommand("mc", "Monte Carlo Haar integration");
    add_out(mc);
    int mc_m = 2, mc_N = 2;
    std::string mc_z = "0.05,0", mc_a, mc_b;
    long mc_samples = 100000;
    std::uint64_t mc_seed = 1;
    mc->add_option("--m", mc_m)->check(CLI::Range(1, 2));
    mc->add_option("--N", mc_N);
    mc->add_option("--z", mc_z, "RE,IM");
    mc->add_option("--samples", mc_samples);
    mc->add_option("--seed", mc_seed);
    mc->add_option("--spectrum-a", mc_a, "comma-separated re:im values");
    mc->add_option("--spectrum-b", mc_b, "comma-separated re:im values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // all parse failures are usage errors
    }

    try {
        if (*chars) {
            const bool cached = load_character_table(chars_d).has_value();
            const auto table = character_table(chars_d);
            if (!cached) store_character_table(*table);
            json parts = json::array(), chi = json::array();
            for (const auto& p : table->partitions()) parts.push_back(partition_json(p));
            for (const auto& row : table->matrix()) {
                json r = json::array();
                for (const Int& v : row) r.push_back(v.get_str());
                chi.push_back(std::move(r));
            }
            emit(json{{"d", chars_d}, {"partitions", parts}, {"chi", chi}}, out_path);
        } else if (*hur) {
            const auto table = hur_conn ? cached_connected_table(hur_mode, hur_dmax, hur_gmax)
                                        : cached_disconnected_table(hur_mode, hur_dmax, hur_gmax);
            if (hur_format == "json")
                emit(hurwitz_json(table), out_path);
            else
                emit_text(hurwitz_csv(table), out_path);
        } else if (*coup) {
            Spectrum a, b;
            if (coup_m >= 1) a = coup_a.empty() ? Spectrum(coup_N, 1) : parse_spectrum(coup_a);
            if (coup_m == 2) b = coup_b.empty() ? Spectrum(coup_N, 1) : parse_spectrum(coup_b);
            const auto val = coupling_char(coup_m, coup_d, coup_N, a, b);
            json ja = json::array(), jb = json::array();
            for (const Rat& x : a) ja.push_back(rat_str(x));
            for (const Rat& x : b) jb.push_back(rat_str(x));
            emit(json{{"m", coup_m},
                      {"d", coup_d},
                      {"N", coup_N},
                      {"spectrum_a", ja},
                      {"spectrum_b", jb},
                      {"value", rat_str(val.value)}},
                 out_path);
        } else if (*ver) {
            VerifyState v;
            if (ver_suite == "oracle" || ver_suite == "all")
                verify_oracle(v, std::min(ver_dmax, 5), 4);
            if (ver_suite == "cancellation" || ver_suite == "all")
                verify_cancellation(v, ver_dmax, ver_gmax);
            if (ver_suite == "sorting" || ver_suite == "all")
                verify_sorting(v, ver_dmax, ver_gmax);
            if (ver_suite == "stable" || ver_suite == "all")
                verify_stable(v, ver_Nmax, std::min(ver_gmax, 2));
            if (ver_suite == "concentration" || ver_suite == "all")
                verify_concentration(v, ver_Nmax, std::min(ver_gmax, 1));
            const bool passed = v.failures.empty();
            emit(json{{"suite", ver_suite},
                      {"checks", v.checks},
                      {"passed", passed},
                      {"failures", v.failures}},
                 out_path);
            return passed ? 0 : 1;
        } else if (*scan) {
            if (scan_kind == "concentration") {
                const auto rep =
                    concentration_scan(scan_m, scan_k, scan_Nmin, scan_Nmax, parse_rat(scan_xi));
                json pts = json::array();
                for (const auto& p : rep.points)
                    pts.push_back({{"N", p.N}, {"d_max", p.d_max}, {"s", p.s}, {"scaled", p.scaled}});
                emit(json{{"kind", scan_kind},
                          {"m", scan_m},
                          {"k", scan_k},
                          {"xi", scan_xi},
                          {"points", pts},
                          {"non_increasing", rep.non_increasing}},
                     out_path);
            } else if (scan_kind == "largeN") {
                const auto conn =
                    cached_connected_table(scan_m, scan_d, scan_k + scan_d + 4);
                const auto rep =
                    large_N_trend(scan_m, scan_d, scan_k, std::max(scan_Nmin, scan_d), scan_Nmax, conn);
                json pts = json::array();
                for (const auto& p : rep.points)
                    pts.push_back({{"N", p.N},
                                   {"remainder", rat_str(p.remainder)},
                                   {"scaled", rat_str(p.scaled_remainder)},
                                   {"l1_scaled", rat_str(p.l1_scaled)}});
                emit(json{{"kind", scan_kind},
                          {"m", scan_m},
                          {"d", scan_d},
                          {"k", scan_k},
                          {"points", pts},
                          {"decreasing", rep.decreasing},
                          {"within_bound", rep.within_bound}},
                     out_path);
            } else {
                json pts = json::array();
                for (int g = 1; g <= scan_gmax; ++g) {
                    const auto rep = large_genus_ratio(scan_d, g);
                    pts.push_back({{"g", g}, {"ratio", rep.ratio_d}});
                }
                emit(json{{"kind", scan_kind}, {"d", scan_d}, {"points", pts}}, out_path);
            }
        } else if (*mc) {
            const auto comma = mc_z.find(',');
            const Cplx z(std::stod(mc_z.substr(0, comma)),
                         comma == std::string::npos ? 0.0 : std::stod(mc_z.substr(comma + 1)));
            const auto a = mc_a.empty() ? std::vector<Cplx>{} : parse_complex_spectrum(mc_a);
            const auto b = mc_b.empty() ? std::vector<Cplx>{} : parse_complex_spectrum(mc_b);
            const auto rep = estimate_integral(mc_m, mc_N, z, a, b, mc_samples, mc_seed);
            json ja = json::array(), jb = json::array();
            for (const Cplx& x : rep.spectrum_a) ja.push_back({x.real(), x.imag()});
            for (const Cplx& x : rep.spectrum_b) jb.push_back({x.real(), x.imag()});
            emit(json{{"m", rep.m},
                      {"N", rep.N},
                      {"z_re", rep.z.real()},
                      {"z_im", rep.z.imag()},
                      {"spectra", {{"a", ja}, {"b", jb}}},
                      {"samples", rep.samples},
                      {"seed", rep.seed},
                      {"mean_re", rep.mean.real()},
                      {"mean_im", rep.mean.imag()},
                      {"stderr", rep.stderr_},
                      {"target_re", rep.target.real()},
                      {"target_im", rep.target.imag()},
                      {"target_depth", rep.target_depth}},
                 out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
