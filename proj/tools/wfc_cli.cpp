// Command-line front end: construct / evaluate / sweep / table / search / verify.
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfc/bec.hpp"
#include "wfc/bounds.hpp"
#include "wfc/constructions.hpp"
#include "wfc/io.hpp"
#include "wfc/search.hpp"

using namespace wfc;

namespace {

std::string profile_line(const DistanceProfile& p) {
    std::string s = "d_min = (";
    for (std::size_t i = 0; i < p.min_rwise.size(); ++i)
        s += (i ? "," : "") + std::to_string(p.min_rwise[i]);
    s += ")";
    return s;
}

TypeVector construct_family(const std::string& family, int m, std::uint64_t n, int k, int order,
                            Codebook* cb_out) {
    if (family == "repetition") return repetition_code(2, n);
    if (family == "optimal-m3") return optimal_m3m4(3, n);
    if (family == "optimal-m4") return optimal_m3m4(4, n);
    if (family == "conj-m5") return conjectured_m5m6(5, n);
    if (family == "conj-m6") return conjectured_m5m6(6, n);
    if (family == "fair-weak-flip") return fair_weak_flip(m, n);
    if (family == "gfwf-m8") return generalized_fair_weak_flip_m8(n);
    if (family == "bsc-optimal") return bsc_optimal_type(m, n);
    if (family == "fair-linear") {
        Codebook cb = fair_linear(k, n);
        if (cb_out) *cb_out = cb;
        return canonicalize(cb);
    }
    if (family.rfind("hadamard-", 0) == 0) {
        HadamardVariant v;
        const std::string var = family.substr(9);
        if (var == "h1") v = HadamardVariant::H1;
        else if (var == "h1p") v = HadamardVariant::H1p;
        else if (var == "h2") v = HadamardVariant::H2;
        else if (var == "h3") v = HadamardVariant::H3;
        else throw CLI::ValidationError("unknown hadamard variant " + var);
        Codebook cb = hadamard_code(v, order);
        if (cb_out) *cb_out = cb;
        return canonicalize(cb);
    }
    throw CLI::ValidationError("unknown family " + family);
}

int run_verify(const std::string& suite) {
    bool ok = true;
    auto report = [&](const std::string& what, bool pass, const std::string& detail = "") {
        printf("%-24s %s%s%s\n", what.c_str(), pass ? "pass" : "FAIL", detail.empty() ? "" : "  ",
               detail.c_str());
        ok = ok && pass;
    };

    if (suite == "oracle-equivalence") {
        std::mt19937_64 rng(12345);
        double maxdiff = 0;
        for (int m = 2; m <= 5; ++m)
            for (int rep = 0; rep < 25; ++rep) {
                TypeVector t(m);
                const int n = 1 + int(rng() % 6);
                for (int i = 0; i < n; ++i) ++t.t(1 + rng() % candidate_count(m));
                for (double d : {0.1, 0.3, 0.5, 0.9}) {
                    Channel c{d};
                    maxdiff = std::max(maxdiff,
                                       std::fabs(error_probability(t, c).p_error -
                                                 oracle_error_probability(codebook_from_type(t), c).p_error));
                }
            }
        char buf[64];
        snprintf(buf, sizeof buf, "max diff %.3e", maxdiff);
        report("oracle-equivalence", maxdiff <= 1e-12, buf);
    } else if (suite == "plotkin") {
        for (int m = 3; m <= 8; ++m) {
            const std::uint64_t L = weak_flip_count(m);
            auto t = fair_weak_flip(m, L);
            bool eq = true;
            for (int r = 2; r <= (m + 1) / 2; ++r)
                if (std::fabs(double(min_rwise_distance(t, r)) - plotkin_bound(m, L, r).exact) > 1e-9)
                    eq = false;
            report("fair-equality m=" + std::to_string(m), eq);
        }
    } else if (suite == "optimality-m34") {
        Channel ch{0.3};
        for (int m : {3, 4}) {
            bool pass = true;
            for (std::uint64_t n = 2; n <= (m == 3 ? 20 : 9); ++n) {
                auto r = exhaustive_search(m, n, ch);
                if (error_probability(optimal_m3m4(m, n), ch).p_error > r.best_p_error + 1e-14)
                    pass = false;
            }
            report("optimality m=" + std::to_string(m), pass);
        }
    } else if (suite == "conjecture-m5") {
        Channel ch{0.3};
        bool pass = true;
        for (std::uint64_t n = 3; n <= 6; ++n) {
            auto r = exhaustive_search(5, n, ch);
            if (error_probability(conjectured_m5m6(5, n), ch).p_error > r.best_p_error + 1e-14)
                pass = false;
        }
        report("conjecture m=5", pass);
    } else if (suite == "appendix-a") {
        const double d = 0.4;
        Channel c{d};
        for (int k = 1; k <= 3; ++k) {
            TypeVector t(4);
            t.t(3) = k;
            t.t(5) = k;
            t.t(6) = k - 1;
            const double n = 3.0 * k;
            bool pass = true;
            double best = -1;
            int argmax = 0;
            for (int j = 1; j <= 7; ++j) {
                const double a = std::pow(d, 2 * k - 1), b = std::pow(d, 2 * k), z = std::pow(d, n - 1);
                double closed;
                if (j == 6) closed = (4 * a - 3 * z) * (1 - d);
                else if (j == 3 || j == 5) closed = (2 * a + 2 * b - 3 * z) * (1 - d);
                else closed = (2 * a + b - 2 * z) * (1 - d);
                const double g = append_gain(t, j, c);
                if (std::fabs(g - closed) > 1e-12) pass = false;
                if (g > best) { best = g; argmax = j; }
            }
            report("append gains k=" + std::to_string(k), pass && argmax == 6);
        }
    } else if (suite == "bounds-sandwich") {
        Channel ch{0.3};
        for (int m : {3, 4}) {
            bool pass = true;
            for (std::uint64_t n = 2; n <= 40; ++n) {
                const double pe = error_probability(optimal_m3m4(m, n), ch).p_error;
                auto [lo, hi] = sgb_bounds(m, n, ch);
                if (!(ppv_lower(m, n, ch) <= pe + 1e-15 &&
                      pe <= std::min(ppv_upper(m, n, ch), hi) + 1e-15 && lo <= pe + 1e-15))
                    pass = false;
            }
            report("sandwich m=" + std::to_string(m), pass);
        }
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ultrasmall block codes on the binary erasure channel"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a code family");
    std::string family, out_path, format = "json";
    int m = 0, k = 3, order = 8;
    std::uint64_t n = 0;
    c_construct->add_option("--family", family)->required();
    c_construct->add_option("--m", m);
    c_construct->add_option("--n", n);
    c_construct->add_option("--k", k);
    c_construct->add_option("--order", order);
    c_construct->add_option("--out", out_path);
    c_construct->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // evaluate
    auto* c_eval = app.add_subcommand("evaluate", "exact error probability of a code file");
    std::string in_path;
    double delta = 0.3;
    bool use_oracle = false;
    c_eval->add_option("--in", in_path)->required();
    c_eval->add_option("--delta", delta)->required();
    c_eval->add_flag("--oracle", use_oracle);

    // sweep
    auto* c_sweep = app.add_subcommand("sweep", "exact-vs-bounds table over a blocklength range");
    int sw_m = 3;
    double sw_delta = 0.3;
    std::uint64_t n_min = 2, n_max = 40;
    std::string sw_out;
    c_sweep->add_option("--m", sw_m)->check(CLI::IsMember({3, 4}));
    c_sweep->add_option("--delta", sw_delta);
    c_sweep->add_option("--n-min", n_min);
    c_sweep->add_option("--n-max", n_max);
    c_sweep->add_option("--out", sw_out);

    // table
    auto* c_table = app.add_subcommand("table", "best weak flip vs best linear code rows");
    int tb_m = 8;
    std::vector<std::uint64_t> tb_ns;
    double tb_delta = 0.3;
    std::uint64_t tb_seed = 2026, tb_iters = 200;
    std::string tb_out;
    c_table->add_option("--m", tb_m)->check(CLI::IsMember({8, 16}));
    c_table->add_option("--n", tb_ns)->required()->delimiter(',');
    c_table->add_option("--delta", tb_delta);
    c_table->add_option("--seed", tb_seed);
    c_table->add_option("--iterations", tb_iters);
    c_table->add_option("--out", tb_out);

    // search
    auto* c_search = app.add_subcommand("search", "code search procedures");
    std::string algo, restrict = "all";
    int s_m = 4, s_k = 3;
    std::uint64_t s_n = 3, s_kappa = 2;
    double s_delta = 0.3;
    SearchConfig cfg;
    c_search->add_option("--algo", algo)
        ->required()
        ->check(CLI::IsMember({"exhaustive", "exhaustive-linear", "sa", "concat"}));
    c_search->add_option("--m", s_m);
    c_search->add_option("--n", s_n);
    c_search->add_option("--k", s_k);
    c_search->add_option("--kappa", s_kappa);
    c_search->add_option("--delta", s_delta);
    c_search->add_option("--restrict", restrict)->check(CLI::IsMember({"all", "weak-flip"}));
    c_search->add_option("--seed", cfg.seed);
    c_search->add_option("--restarts", cfg.restarts);
    c_search->add_option("--alpha", cfg.alpha);
    c_search->add_option("--t-start", cfg.t_start);
    c_search->add_option("--t-freeze", cfg.t_freeze);
    c_search->add_option("--moves", cfg.moves_per_temp);
    c_search->add_option("--iterations", cfg.max_iterations);

    // verify
    auto* c_verify = app.add_subcommand("verify", "run a named acceptance suite");
    std::string suite;
    c_verify->add_option("suite", suite)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_construct) {
            Codebook cb;
            bool have_cb = false;
            TypeVector t;
            if (family == "fair-linear" || family.rfind("hadamard-", 0) == 0) {
                t = construct_family(family, m, n, k, order, &cb);
                have_cb = true;
            } else {
                t = construct_family(family, m, n, k, order, nullptr);
            }
            if (!have_cb) cb = codebook_from_type(t);
            const json j = type_to_json(t);
            if (!out_path.empty()) {
                write_file(out_path + ".json", j.dump(2) + "\n");
                write_file(out_path + ".txt", codebook_text(cb));
            } else {
                std::cout << j.dump(2) << "\n";
            }
            std::cout << profile_line(distance_profile(t)) << "\n";
            return 0;
        }
        if (*c_eval) {
            const TypeVector t = type_from_json(json::parse(read_file(in_path)));
            Channel ch{delta};
            const EvalResult exact = error_probability(t, ch);
            printf("p_error = %.15g\n", exact.p_error);
            if (use_oracle) {
                const EvalResult o = oracle_error_probability(codebook_from_type(t), ch);
                printf("oracle  = %.15g\n", o.p_error);
                printf("diff    = %.3e\n", std::fabs(o.p_error - exact.p_error));
                for (std::size_t i = 0; i < o.per_message->size(); ++i)
                    printf("lambda_%zu = %.15g\n", i + 1, (*o.per_message)[i]);
            }
            return 0;
        }
        if (*c_sweep) {
            Channel ch{sw_delta};
            std::string csv = "# wfc sweep m=" + std::to_string(sw_m) +
                              " delta=" + std::to_string(sw_delta) + "\n";
            csv += "n,delta,exact,sgb_lower,sgb_upper,ppv_lower,ppv_upper,family\n";
            const std::string fam = sw_m == 3 ? "optimal-m3" : "optimal-m4";
            for (std::uint64_t nn = n_min; nn <= n_max; ++nn) {
                const double pe = error_probability(optimal_m3m4(sw_m, nn), ch).p_error;
                auto [lo, hi] = sgb_bounds(sw_m, nn, ch);
                char row[256];
                snprintf(row, sizeof row, "%llu,%g,%.15g,%.15g,%.15g,%.15g,%.15g,%s\n",
                         (unsigned long long)nn, sw_delta, pe, lo, hi, ppv_lower(sw_m, nn, ch),
                         ppv_upper(sw_m, nn, ch), fam.c_str());
                csv += row;
            }
            if (!sw_out.empty()) write_file(sw_out, csv);
            else std::cout << csv;
            return 0;
        }
        if (*c_table) {
            Channel ch{tb_delta};
            SearchConfig tcfg;
            tcfg.seed = tb_seed;
            tcfg.max_iterations = tb_iters;
            std::string csv = "# wfc table m=" + std::to_string(tb_m) + " delta=" +
                              std::to_string(tb_delta) + " seed=" + std::to_string(tb_seed) + "\n";
            const int rmax = tb_m == 8 ? 4 : 8;
            csv += "n";
            for (int r = 2; r <= rmax; ++r) csv += ",weak_d" + std::to_string(r);
            for (int r = 2; r <= rmax; ++r) csv += ",lin_d" + std::to_string(r);
            csv += ",pe_weak,pe_lin,weak_beats_lin\n";
            for (std::uint64_t nn : tb_ns) {
                SearchReport weak_rep;
                SearchReport lin_rep;
                if (tb_m == 8) {
                    weak_rep = simulated_annealing(8, nn, ch, tcfg);
                    lin_rep = exhaustive_linear_search(3, nn, ch);
                } else {
                    if (nn % 15 != 0) throw std::invalid_argument("table m=16 supports multiples of 15 only");
                    weak_rep = permuted_concatenation_search(nn / 15, ch, tcfg);
                    lin_rep.best_type = canonicalize(fair_linear(4, nn));
                    lin_rep.best_p_error = error_probability(lin_rep.best_type, ch).p_error;
                }
                csv += std::to_string(nn);
                for (int r = 2; r <= rmax; ++r)
                    csv += "," + std::to_string(min_rwise_distance(weak_rep.best_type, r));
                for (int r = 2; r <= rmax; ++r)
                    csv += "," + std::to_string(min_rwise_distance(lin_rep.best_type, r));
                char tail[128];
                snprintf(tail, sizeof tail, ",%.15g,%.15g,%d\n", weak_rep.best_p_error,
                         lin_rep.best_p_error, weak_rep.best_p_error < lin_rep.best_p_error ? 1 : 0);
                csv += tail;
            }
            if (!tb_out.empty()) write_file(tb_out, csv);
            else std::cout << csv;
            return 0;
        }
        if (*c_search) {
            Channel ch{s_delta};
            SearchReport rep;
            if (algo == "exhaustive")
                rep = exhaustive_search(s_m, s_n, ch,
                                        restrict == "all" ? SearchRestrict::All : SearchRestrict::WeakFlip);
            else if (algo == "exhaustive-linear")
                rep = exhaustive_linear_search(s_k, s_n, ch);
            else if (algo == "sa")
                rep = simulated_annealing(s_m, s_n, ch, cfg);
            else
                rep = permuted_concatenation_search(s_kappa, ch, cfg);
            json j;
            j["best_p_error"] = rep.best_p_error;
            j["iterations"] = rep.iterations;
            j["seed"] = rep.seed;
            j["code"] = type_to_json(rep.best_type);
            j["profile"] = profile_to_json(rep.profile);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*c_verify) return run_verify(suite);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
