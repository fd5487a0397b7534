// Command-line front end: exact length invariants, certified classification,
// sequence simulation and the finiteness criteria, batch style.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modone/io.hpp"

using namespace modone;

namespace {

std::string g_format = "structured";

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", out);
    } else {
        out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

void print_json(const Json& j) {
    if (g_format == "structured") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    if (g_format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [k, v] : rows) std::cout << k << "," << v << "\n";
    } else {  // table
        std::size_t w = 0;
        for (const auto& [k, v] : rows) w = std::max(w, k.size());
        for (const auto& [k, v] : rows)
            std::cout << k << std::string(w - k.size() + 2, ' ') << v << "\n";
    }
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stol(tok));
    }
    if (out.empty()) throw input_error("empty integer list: " + s);
    return out;
}

int run_lengths(const std::string& poly, int e_max, const std::string& tol_s) {
    IntPoly p = parse_poly_str(poly);
    Rat tol = parse_rat(tol_s);
    auto ell = reduced_length(p, e_max, tol);
    auto lam = overreduced_length(p, e_max, tol);
    print_json(emit_lengths_report(p, ell, lam, ell.lower_bound));
    return 0;
}

int run_classify(const std::string& poly, int root_index) {
    IntPoly p = parse_poly_str(poly);
    AlgebraicNumber a(p, root_index);
    const auto& classes = a.all_modulus_classes();
    Json j;
    j["minpoly"] = emit_poly(a.minpoly());
    j["degree"] = a.degree();
    j["root_index"] = a.root_index();
    Json roots = Json::array();
    for (int i = 0; i < a.degree(); ++i) {
        CBox b = a.box_of(i, 40);
        Json r;
        r["index"] = i;
        r["re"] = dec((b.re.lo.to_rat() + b.re.hi.to_rat()) / 2, 17);
        r["im"] = dec((b.im.lo.to_rat() + b.im.hi.to_rat()) / 2, 17);
        r["modulus_class"] = to_string(classes[static_cast<std::size_t>(i)]);
        r["is_real"] = b.is_exact_real();
        roots.push_back(r);
    }
    j["roots"] = roots;
    j["algebraic_integer"] = a.is_algebraic_integer();
    auto rou = a.root_of_unity_order();
    j["root_of_unity_order"] = rou ? Json(*rou) : Json(nullptr);
    j["modulus_class"] = to_string(a.modulus_class());
    j["pisot_salem"] = to_string(a.pisot_salem());
    j["mahler"] = emit_interval(mahler_measure(p, Rat(1, 1000000000)));
    print_json(j);
    return 0;
}

int run_simulate(const std::string& expoly_path, long horizon, const std::string& m_list,
                 const std::string& eps_s, long burn_in, const std::string& cluster_s,
                 const std::string& eta_s, const std::string& out_dir) {
    Expoly x = load_expoly(expoly_path);
    Rat eps = parse_rat(eps_s);
    Rat eta = parse_rat(eta_s);
    Rat cluster_eps = parse_rat(cluster_s);
    std::string marker = out_dir.empty() ? "" : out_dir + "/INCOMPLETE";
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(marker) << "run in progress\n";
    }
    auto s = sample(x, 1, horizon, eps, eta);
    if (!out_dir.empty()) {
        std::ofstream csv(out_dir + "/sample.csv");
        write_sample_csv(csv, s);
        std::ofstream plot(out_dir + "/fractional.dat");
        for (long k = s.k_min; k <= s.k_max; ++k)
            if (!s.at(k).undecided)
                plot << k << " " << dec((s.at(k).frac_lo + s.at(k).frac_hi) / 2, 17) << "\n";
    }
    Json out;
    out["expoly"] = emit_expoly(x);
    out["mode"] = s.mode == SampleMode::ExactRational ? "exact_rational" : "ball";
    Json reports = Json::array();
    for (long m : parse_long_list(m_list)) {
        long bi = burn_in >= 0 ? burn_in : std::max<long>(50, horizon / 2);
        auto rep = limit_set_report(s, m, bi, cluster_eps);
        reports.push_back(emit_limit_set_report(rep));
        if (!out_dir.empty()) {
            std::ofstream plot(out_dir + "/diameters_M" + std::to_string(m) + ".dat");
            for (const auto& rr : rep.residues)
                plot << rr.residue << " " << dec(rr.diameter, 17) << "\n";
        }
    }
    out["limit_sets"] = reports;
    if (!marker.empty()) std::filesystem::remove(marker);
    print_json(out);
    return 0;
}

int run_finiteness(const std::string& expoly_path) {
    Expoly x = load_expoly(expoly_path);
    auto v = finiteness_verdict(x);
    Json j;
    j["expoly"] = emit_expoly(x);
    j["verdict"] = to_string(v.kind);
    j["reason"] = v.reason;
    if (v.failed_clause) j["failed_clause"] = v.failed_clause;
    if (v.witness) j["witness"] = emit_witness(*v.witness);
    j["conditions"] = emit_condition_report(check_conditions(x));
    // derived check for single-term F(k) alpha^k with real |alpha| > 1:
    // negative alpha is routed through |alpha| = -alpha
    if (x.terms().size() == 1) {
        const auto& t = x.terms()[0];
        bool realb = t.base.is_rational() || t.base.is_real();
        if (realb) {
            bool gt1 = t.base.is_real_greater_than_one() ||
                       t.base.negated().is_real_greater_than_one();
            if (gt1) j["spectrum_fin"] = to_string(spectrum_fin_class(t.base, t.coeffs));
        }
    }
    print_json(j);
    return 0;
}

int run_bounds(const std::string& expoly_path, const std::string& m_list, long horizon,
               int e_max) {
    Expoly x = load_expoly(expoly_path);
    auto rep = theorem_bounds(x, parse_long_list(m_list), horizon, e_max);
    Json j;
    j["annihilator"] = emit_poly(rep.annihilator);
    j["L"] = rep.length_r.get_str();
    j["one_over_L"] = rep.inv_length.get_str();
    j["lambda"] = rep.lambda_value.get_str();
    j["one_over_lambda"] = rep.inv_lambda.get_str();
    j["one_over_lambda_approx"] = dec(rep.inv_lambda);
    j["vacuous"] = rep.vacuous;
    j["conditions"] = emit_condition_report(rep.conditions);
    Json ms = Json::array();
    for (const auto& mb : rep.per_modulus) {
        Json mj;
        mj["M"] = mb.modulus;
        mj["some_residue_met"] = mb.some_residue_met;
        Json rs = Json::array();
        for (const auto& rb : mb.residues) {
            Json r;
            r["residue"] = rb.residue;
            r["diameter"] = dec(rb.diameter);
            r["met_lambda_bound"] = rb.met_lambda_bound;
            rs.push_back(r);
        }
        mj["residues"] = rs;
        ms.push_back(mj);
    }
    j["per_modulus"] = ms;
    print_json(j);
    return 0;
}

int run_words(const std::string& word_path, long fibonacci, long n_max, long morse_e,
              long morse_m, long min_count) {
    Word w = fibonacci > 0 ? fibonacci_word(static_cast<std::size_t>(fibonacci))
                           : load_word(word_path);
    Json j;
    j["length"] = static_cast<long>(w.size());
    auto rep = subword_complexity(w, n_max);
    Json cj;
    cj["p"] = rep.p;
    cj["verdict"] = to_string(rep.verdict);
    if (rep.verdict == PeriodicityVerdict::PeriodicEvidence) cj["period"] = rep.period;
    j["complexity"] = cj;
    if (morse_e >= 0) {
        auto mw = morse_witness(w, morse_e, morse_m, min_count);
        Json mj;
        mj["e"] = mw.e;
        mj["M"] = mw.modulus;
        mj["U"] = mw.u;
        mj["V"] = mw.v;
        mj["s"] = mw.s;
        mj["s_prime"] = mw.s_prime;
        mj["t"] = mw.t;
        mj["t_prime"] = mw.t_prime;
        mj["m_bar"] = mw.m_bar;
        mj["n_bar"] = mw.n_bar;
        mj["sU_positions"] = mw.su_positions;
        mj["s_primeU_positions"] = mw.spu_positions;
        mj["Vt_positions"] = mw.vt_positions;
        mj["Vt_prime_positions"] = mw.vtp_positions;
        j["morse_witness"] = mj;
    }
    print_json(j);
    return 0;
}

int run_density(const std::string& set_kind, const std::string& indices_path, long horizon,
                long window, long sqrt_d, long count, const std::string& shifts, long grid) {
    Json j;
    if (sqrt_d > 0) {
        mpfr_prec_t prec = 192;
        Interval root = iv::sqrt(Interval::of_long(sqrt_d, prec), prec);
        std::vector<Rat> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (long k = 0; k < count; ++k) {
            Interval v = iv::mul(Interval::of_long(k, prec), root, prec);
            pts.push_back(frac_rat(v.lo.to_rat()));
        }
        Rat disc = windowed_discrepancy(pts, window, parse_long_list(shifts), grid);
        j["points"] = std::string("k*sqrt(") + std::to_string(sqrt_d) + ")";
        j["n"] = window;
        j["shifts"] = shifts;
        j["grid"] = grid;
        j["discrepancy_sup"] = dec(disc);
        print_json(j);
        return 0;
    }
    std::vector<long> a;
    if (set_kind == "evens") {
        for (long k = 2; k <= horizon; k += 2) a.push_back(k);
    } else if (set_kind == "squares") {
        for (long k = 1; k * k <= horizon; ++k) a.push_back(k * k);
    } else if (!indices_path.empty()) {
        Word w = load_word(indices_path);
        a.assign(w.begin(), w.end());
        std::sort(a.begin(), a.end());
    } else {
        throw input_error("need --set evens|squares, --indices file, or --sqrt D");
    }
    auto est = uniform_density(a, horizon, window);
    j["n"] = est.window;
    j["lower"] = est.lower.get_str();
    j["upper"] = est.upper.get_str();
    j["lower_approx"] = dec(est.lower);
    j["upper_approx"] = dec(est.upper);
    j["horizon"] = est.horizon;
    print_json(j);
    return 0;
}

int run_zset(const std::string& xi, long p, long q, const std::string& s, const std::string& t,
             long horizon) {
    auto r = zset_prefix_test(parse_rat(xi), Int(p), Int(q), parse_rat(s), parse_rat(t), horizon);
    Json j;
    j["xi"] = xi;
    j["p"] = p;
    j["q"] = q;
    j["s"] = s;
    j["t"] = t;
    j["K"] = horizon;
    if (r.prefix_ok) {
        j["result"] = "PrefixOk";
    } else {
        j["result"] = "Failure";
        j["first_failure_k"] = r.first_failure;
        j["failing_fractional_part"] = r.failing_value.get_str();
    }
    print_json(j);
    return 0;
}

int run_c2bounds(const std::string& poly, int f, int g, int e_max) {
    IntPoly p = parse_poly_str(poly);
    auto b = corollary_c2_bounds(p, f, g, {}, e_max);
    Json j;
    j["P"] = emit_poly(p);
    j["f"] = f;
    j["g"] = g;
    j["ell_argument"] = emit_poly(b.ell_argument);
    j["ell_bound"] = b.ell_bound.get_str();
    j["ell_bound_approx"] = dec(b.ell_bound);
    j["l_bound"] = b.l_bound.get_str();
    j["l_bound_approx"] = dec(b.l_bound);
    j["best_q"] = emit_poly(b.best_q);
    print_json(j);
    return 0;
}

int run_selftest(unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dd(0, 5), dc(-9, 9), degq(0, 3);
    long failures = 0, checks = 0;

    // degree-sweep monotonicity on random polynomials
    for (int t = 0; t < 10; ++t) {
        std::vector<Int> c(static_cast<std::size_t>(dd(rng)) + 1);
        for (auto& v : c) v = dc(rng);
        IntPoly p(std::move(c));
        if (p.is_zero()) continue;
        Rat prev;
        bool first = true;
        for (int e = 0; e <= 6; ++e) {
            Rat v = l1_min_fixed_degree(to_rat(p), e, Normalization::ConstantOne).first;
            ++checks;
            if (!first && v > prev) ++failures;
            prev = v;
            first = false;
        }
    }

    // transform oracle on random rational expolys
    for (int t = 0; t < 10; ++t) {
        Rat base = make_rat(Int(dc(rng)), Int(1 + (dc(rng) + 9) % 4 + 1));
        if (base == 0) continue;
        std::vector<ExpolyCoefficient> cs{ExpolyCoefficient(Rat(dc(rng))),
                                          ExpolyCoefficient(Rat(1))};
        Expoly x({{AlgebraicNumber::of_rational(base), cs}});
        std::vector<Int> qc(static_cast<std::size_t>(degq(rng)) + 1);
        for (auto& v : qc) v = dc(rng);
        IntPoly q(std::move(qc));
        if (q.is_zero()) continue;
        Expoly y = apply_q_transform(x, q);
        for (long k = 1; k <= 25; ++k) {
            Rat direct(0);
            for (int s2 = 0; s2 <= q.degree(); ++s2)
                direct += Rat(q.coeff(static_cast<std::size_t>(s2))) * x.eval_rational(k + s2);
            ++checks;
            if (!(y.eval_rational(k) == direct)) ++failures;
        }
    }

    Json j;
    j["seed"] = seed;
    j["checks"] = checks;
    j["failures"] = failures;
    print_json(j);
    return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distribution modulo one of linear recurrent sequences"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "structured | table | csv")
        ->check(CLI::IsMember({"structured", "table", "csv"}));

    std::string poly, expoly_path, word_path, indices_path, out_dir;
    std::string m_list = "1", eps_s = "1/1000000000000", eta_s = "0";
    std::string cluster_s = "1/1000000", tol_s = "1/1000000000";
    std::string xi = "1", s_s = "0", t_s = "1/2", shifts = "0", set_kind;
    long horizon = 2000, burn_in = -1, fibonacci = 0, n_max = 12;
    long morse_e = -1, morse_m = 1, min_count = 10, zp = 3, zq = 2;
    long sqrt_d = 0, count = 0, window = 1000, grid = 64;
    int e_max = 32, root_index = 0, cf = 0, cg = -1;
    unsigned long seed = 0;

    auto* c_len = app.add_subcommand("lengths", "L, ell, lambda and Mahler report");
    c_len->add_option("--poly", poly, "ascending coefficients, e.g. [-3,2]")->required();
    c_len->add_option("--emax", e_max, "degree sweep bound");
    c_len->add_option("--tol", tol_s, "convergence tolerance");

    auto* c_cls = app.add_subcommand("classify", "algebraic number classification");
    c_cls->add_option("--poly", poly, "minimal polynomial")->required();
    c_cls->add_option("--root-index", root_index, "designated root");

    auto* c_sim = app.add_subcommand("simulate", "sample and limit-set report");
    c_sim->add_option("--expoly", expoly_path)->required();
    c_sim->add_option("--M", m_list, "comma-separated moduli");
    c_sim->add_option("--K", horizon, "sampling horizon");
    c_sim->add_option("--eps", eps_s);
    c_sim->add_option("--burn-in", burn_in);
    c_sim->add_option("--cluster-eps", cluster_s);
    c_sim->add_option("--eta", eta_s, "floor decomposition shift");
    c_sim->add_option("--out", out_dir, "directory for CSV/plot dumps");

    auto* c_fin = app.add_subcommand("finiteness", "limit-set finiteness verdict");
    c_fin->add_option("--expoly", expoly_path)->required();

    auto* c_bnd = app.add_subcommand("bounds", "1/L and 1/lambda with sampled diameters");
    c_bnd->add_option("--expoly", expoly_path)->required();
    c_bnd->add_option("--M", m_list);
    c_bnd->add_option("--K", horizon);
    c_bnd->add_option("--emax", e_max);

    auto* c_wrd = app.add_subcommand("words", "subword complexity and extension witnesses");
    c_wrd->add_option("--word", word_path, "CSV of integer letters");
    c_wrd->add_option("--fibonacci", fibonacci, "use a Fibonacci-word prefix of this length");
    c_wrd->add_option("--nmax", n_max);
    c_wrd->add_option("--morse-e", morse_e, "witness extension length (enables search)");
    c_wrd->add_option("--morse-M", morse_m);
    c_wrd->add_option("--min-count", min_count);

    auto* c_den = app.add_subcommand("density", "uniform density / discrepancy estimates");
    c_den->add_option("--set", set_kind, "evens | squares");
    c_den->add_option("--indices", indices_path, "CSV of indices");
    c_den->add_option("--horizon", horizon);
    c_den->add_option("--window", window);
    c_den->add_option("--sqrt", sqrt_d, "discrepancy of k*sqrt(D) mod 1");
    c_den->add_option("--count", count, "number of points for discrepancy");
    c_den->add_option("--shifts", shifts);
    c_den->add_option("--grid", grid);

    auto* c_zst = app.add_subcommand("zset", "exact prefix membership in Z_{p/q}(s,t)");
    c_zst->add_option("--xi", xi);
    c_zst->add_option("--p", zp);
    c_zst->add_option("--q", zq);
    c_zst->add_option("--s", s_s);
    c_zst->add_option("--t", t_s);
    c_zst->add_option("--K", horizon);

    auto* c_c2 = app.add_subcommand("c2bounds", "bound values from (x-1)^, P^ powers");
    c_c2->add_option("--poly", poly, "minimal polynomial P")->required();
    c_c2->add_option("--f", cf, "deg F >= 0")->required();
    c_c2->add_option("--g", cg, "deg G >= -1")->required();
    c_c2->add_option("--emax", e_max);

    auto* c_tst = app.add_subcommand("selftest", "randomized property corpus");
    c_tst->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_len->parsed()) return run_lengths(poly, e_max, tol_s);
        if (c_cls->parsed()) return run_classify(poly, root_index);
        if (c_sim->parsed())
            return run_simulate(expoly_path, horizon, m_list, eps_s, burn_in, cluster_s, eta_s,
                                out_dir);
        if (c_fin->parsed()) return run_finiteness(expoly_path);
        if (c_bnd->parsed()) return run_bounds(expoly_path, m_list, horizon, e_max);
        if (c_wrd->parsed())
            return run_words(word_path, fibonacci, n_max, morse_e, morse_m, min_count);
        if (c_den->parsed())
            return run_density(set_kind, indices_path, horizon, window, sqrt_d, count, shifts,
                               grid);
        if (c_zst->parsed()) return run_zset(xi, zp, zq, s_s, t_s, horizon);
        if (c_c2->parsed()) return run_c2bounds(poly, cf, cg, e_max);
        if (c_tst->parsed()) return run_selftest(seed);
    } catch (const precision_cap_exceeded& e) {
        std::cerr << "error (precision cap): " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "error (internal): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
