// wvo: exact computations with wreath-product characters, Heisenberg/Fock
// spaces, lattice vertex operators, and the McKay correspondence.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "wvo/io.hpp"

using namespace wvo;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << text << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct SuiteResult {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
    double ms = 0;
};

json suite_json(const SuiteResult& r) {
    return json{{"suite", r.name},
                {"cases", r.cases},
                {"failures", r.failures},
                {"pass", r.failures.empty()},
                {"ms", r.ms}};
}

// ---- verify suites ----------------------------------------------------------

SuiteResult run_isometry(const Group& g, int nmax, const std::string& xi_sel) {
    SuiteResult r{"isometry"};
    auto t0 = std::chrono::steady_clock::now();
    XiForm xf = make_xi(g, xi_sel);
    InnerCache cache(xf);
    for (int n = 1; n <= nmax; ++n) {
        auto rhos = enumerate_partfn(g->nc, n);
        std::vector<SymVec> images;
        for (const auto& rho : rhos) images.push_back(class_monomial_to_sym(g, rho));
        for (size_t a = 0; a < rhos.size(); ++a)
            for (size_t b = 0; b < rhos.size(); ++b) {
                ++r.cases;
                WreathClassFn f = sigma_rho(g, rhos[a]), h = sigma_rho(g, rhos[b]);
                if (!(weighted_pairing_n(xf, f, h) == cache.inner(images[a], images[b])) &&
                    r.failures.size() < 8)
                    r.failures.push_back("n=" + std::to_string(n) + " " + rhos[a].to_string('c') +
                                         " vs " + rhos[b].to_string('c'));
            }
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_heisenberg(const Group& g, long mode_bound, long degree_bound,
                           const std::string& xi_sel) {
    SuiteResult r{"heisenberg"};
    auto t0 = std::chrono::steady_clock::now();
    XiForm xf = make_xi(g, xi_sel);
    std::vector<SymVec> basis;
    for (long d = 0; d <= degree_bound; ++d)
        for (const auto& rho : enumerate_partfn(g->nc, static_cast<int>(d))) {
            SymVec v;
            v.add(rho, Cyclo(1));
            basis.push_back(std::move(v));
        }
    auto label_gamma = [&](int i) {
        CycloVec v(g->nc);
        v[i] = Cyclo(1);
        return v;
    };
    for (long m = -mode_bound; m <= mode_bound; ++m)
        for (long n = -mode_bound; n <= mode_bound; ++n) {
            if (m == 0 || n == 0) continue;
            for (int i = 0; i < g->nc; ++i)
                for (int j = 0; j < g->nc; ++j) {
                    CycloVec li = label_gamma(i), lj = label_gamma(j);
                    CycloVec ci = class_label_coefficients(g, g->inv_class[i]);
                    CycloVec cj = class_label_coefficients(g, j);
                    for (const SymVec& v : basis) {
                        ++r.cases;
                        SymVec lhs = apply_heis(xf, m, li, apply_heis(xf, n, lj, v)) -
                                     apply_heis(xf, n, lj, apply_heis(xf, m, li, v));
                        SymVec rhs;
                        if (m == -n) rhs = (Cyclo(m) * xf.a(i, j)) * v;
                        if (lhs != rhs && r.failures.size() < 8)
                            r.failures.push_back("gamma basis m=" + std::to_string(m) +
                                                 " n=" + std::to_string(n));
                        SymVec lhs2 = apply_heis(xf, m, ci, apply_heis(xf, n, cj, v)) -
                                      apply_heis(xf, n, cj, apply_heis(xf, m, ci, v));
                        SymVec rhs2;
                        if (m == -n && i == j)
                            rhs2 = (Cyclo(m * g->zeta[j]) * xf.xi().at(j)) * v;
                        if (lhs2 != rhs2 && r.failures.size() < 8)
                            r.failures.push_back("class basis m=" + std::to_string(m) +
                                                 " n=" + std::to_string(n));
                    }
                }
        }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_genseries(const Group& g, int order) {
    SuiteResult r{"genseries"};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ClassFn> gammas;
    for (int i = 0; i < g->nc; ++i) gammas.push_back(ClassFn::irreducible(g, i));
    if (g->nc >= 2)
        gammas.push_back(ClassFn::irreducible(g, 0) - ClassFn::irreducible(g, g->nc - 1));
    for (const auto& gamma : gammas) {
        ++r.cases;
        SeriesReport rep = gen_series_check(gamma, order);
        if (!rep.all_ok() && r.failures.size() < 8)
            r.failures.push_back(std::string("series failed: eta=") + (rep.eta_ok ? "ok" : "bad") +
                                 " eps=" + (rep.eps_ok ? "ok" : "bad") +
                                 " subst=" + (rep.substitution_ok ? "ok" : "bad"));
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_ope(const Group& g, long degree_bound, const std::string& xi_sel) {
    SuiteResult r{"ope"};
    auto t0 = std::chrono::steady_clock::now();
    VertexContext ctx(make_xi(g, xi_sel));
    int rank = ctx.rank();
    std::vector<LatticeVec> dirs;
    for (int i = 0; i < rank; ++i) {
        dirs.push_back(LatticeVec::unit(rank, i));
        dirs.push_back(-LatticeVec::unit(rank, i));
    }
    for (const auto& a : dirs)
        for (const auto& b : dirs) {
            OpeReport rep = ope_check(ctx, a, b, degree_bound);
            r.cases += rep.tested_pairs;
            for (const auto& m : rep.mismatches)
                if (r.failures.size() < 8) r.failures.push_back(m);
        }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_clifford(const Group& g, Half mode_bound, long degree_bound) {
    SuiteResult r{"clifford"};
    auto t0 = std::chrono::steady_clock::now();
    VertexContext ctx(xi_trivial(g));
    CliffordReport rep = clifford_check(ctx, mode_bound, degree_bound);
    r.cases = rep.cases;
    r.failures = rep.mismatches;
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_toroidal(const Group& g, long mode_bound, long degree_bound) {
    SuiteResult r{"toroidal"};
    auto t0 = std::chrono::steady_clock::now();
    RelationReport rep = toroidal_relation_check(g, mode_bound, degree_bound);
    r.cases = rep.cases;
    r.failures = rep.mismatches;
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_schur_states(const Group& g, int nmax) {
    SuiteResult r{"schurstates"};
    auto t0 = std::chrono::steady_clock::now();
    VertexContext ctx(xi_trivial(g));
    InnerCache cache(ctx.xi_form());
    std::vector<PartFn> lams;
    for (int n = 0; n <= nmax; ++n)
        for (const auto& lam : enumerate_partfn(g->nc, n)) lams.push_back(lam);
    std::vector<FockVec> states;
    for (const auto& lam : lams) {
        FockVec st = schur_state(ctx, lam, LatticeVec(g->nc));
        ++r.cases;
        if (st != FockVec::from_sym(schur_sym(g, lam), omega_of(lam)) && r.failures.size() < 8)
            r.failures.push_back("ch(s_{lambda,0}) != s_lambda e^omega at " + lam.to_string('g'));
        states.push_back(std::move(st));
    }
    for (size_t a = 0; a < states.size(); ++a)
        for (size_t b = 0; b < states.size(); ++b) {
            ++r.cases;
            if (!(ctx.inner(cache, states[a], states[b]) == Cyclo(a == b ? 1 : 0)) &&
                r.failures.size() < 8)
                r.failures.push_back("orthonormality fails at " + lams[a].to_string('g') + " / " +
                                     lams[b].to_string('g'));
        }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_chartable(const Group& g, int n) {
    SuiteResult r{"chartable"};
    auto t0 = std::chrono::steady_clock::now();
    WreathCharTable inner = character_table(g, n, TableRoute::inner_product);
    WreathCharTable vertex = character_table(g, n, TableRoute::vertex_operator);
    ++r.cases;
    if (inner.values != vertex.values) r.failures.push_back("inner and vertex routes disagree");
    auto fails = table_orthogonality_failures(inner);
    ++r.cases;
    for (const auto& f : fails)
        if (r.failures.size() < 8) r.failures.push_back(f);
    if (g->descriptor == "trivial") {
        ++r.cases;
        for (size_t i = 0; i < inner.rows.size(); ++i)
            for (size_t j = 0; j < inner.cols.size(); ++j)
                if (!(inner.values[i][j] ==
                      Cyclo(mn_character(inner.rows[i].at(0), inner.cols[j].at(0)))) &&
                    r.failures.size() < 8)
                    r.failures.push_back("MN mismatch");
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_basicrep(const Group& g, long degree_bound) {
    SuiteResult r{"basicrep"};
    auto t0 = std::chrono::steady_clock::now();
    BasicRepReport rep = basic_rep_check(g, degree_bound);
    r.cases = 2;
    if (!rep.relations_ok)
        for (const auto& m : rep.mismatches)
            if (r.failures.size() < 8) r.failures.push_back(m);
    if (!rep.graded_dims_ok) r.failures.push_back("graded dimensions disagree");
    r.ms = ms_since(t0);
    return r;
}

SuiteResult run_scalar_axioms(unsigned seed) {
    SuiteResult r{"scalar"};
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    auto rand_cyclo = [&](long n) {
        std::vector<Rational> c(euler_phi(n));
        for (auto& x : c) x = Rational(num(rng), den(rng));
        return Cyclo(n, std::move(c));
    };
    for (int t = 0; t < 200; ++t) {
        long n = std::vector<long>{4, 5, 6, 8, 12}[t % 5];
        Cyclo a = rand_cyclo(n), b = rand_cyclo(n), c = rand_cyclo(n);
        ++r.cases;
        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                  a * (b + c) == a * b + a * c;
        if (!a.is_zero()) ok = ok && a * a.inverse() == Cyclo(1);
        if (!ok && r.failures.size() < 8) r.failures.push_back("field axiom failed " + a.to_string());
    }
    r.ms = ms_since(t0);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wreath-product character tables, Fock spaces, vertex operators and the "
                 "McKay correspondence"};
    app.require_subcommand(1);

    std::string group_spec = "cyclic:2", format = "json", out_path, route_str = "inner";
    int n = 2;
    long modes = 2;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_spec,
                        "group descriptor: trivial, cyclic:m, bd:4m, bt, bo, bi, cayley:<file>");
        cmd->add_option("--format", format, "json | csv | pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* cmd_table = app.add_subcommand("chartable", "character table of the wreath product");
    add_common(cmd_table);
    cmd_table->add_option("--n", n, "wreath level")->check(CLI::NonNegativeNumber);
    cmd_table->add_option("--route", route_str, "inner | vertex")
        ->check(CLI::IsMember({"inner", "vertex"}));

    auto* cmd_mckay = app.add_subcommand("mckay", "affine Cartan data from an SU(2) subgroup");
    add_common(cmd_mckay);
    bool with_relations = false, with_group = false;
    long mckay_degree = 2;
    cmd_mckay->add_flag("--relations", with_relations, "also run the toroidal relation suite");
    cmd_mckay->add_flag("--with-group", with_group,
                        "include the base group's character table and the weight form");
    cmd_mckay->add_option("--degree", mckay_degree, "degree bound for relation checks");
    cmd_mckay->add_option("--modes", modes, "mode bound for relation checks");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    add_common(cmd_verify);
    std::string suite = "all", xi_opt = "trivial", degree_str = "2";
    cmd_verify->add_option("--suite", suite,
                           "isometry | heisenberg | genseries | ope | clifford | toroidal | "
                           "schurstates | chartable | basicrep | scalar | all");
    cmd_verify->add_option("--xi", xi_opt, "trivial | mckay");
    cmd_verify->add_option("--n", n, "wreath level bound");
    cmd_verify->add_option("--degree", degree_str, "degree bound (integer or k/2)");
    cmd_verify->add_option("--modes", modes, "mode bound");
    cmd_verify->add_option("--seed", seed, "seed for randomized property suites");

    auto* cmd_fock = app.add_subcommand("fock", "one-shot vector/operator evaluation");
    add_common(cmd_fock);
    std::string state_str = "1", apply_str, inner_str, fock_xi = "trivial";
    cmd_fock->add_option("--xi", fock_xi, "trivial | mckay");
    cmd_fock->add_option("--state", state_str,
                         "basis state, e.g. \"a[-2](g1)^1 a[-1](g0)^3 e[0,1]\"");
    cmd_fock->add_option("--apply", apply_str,
                         "operators applied right-to-left: a[m](gI), X[t](e[..]), e[..]");
    cmd_fock->add_option("--inner", inner_str, "pair the result against this state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_table->parsed()) {
            Group g = build_group(group_spec);
            TableRoute route =
                route_str == "vertex" ? TableRoute::vertex_operator : TableRoute::inner_product;
            WreathCharTable t = character_table(g, n, route);
            auto fails = table_orthogonality_failures(t);
            std::string text;
            if (format == "csv")
                text = char_table_csv(t);
            else if (format == "pretty")
                text = char_table_pretty(t);
            else
                text = char_table_json(t, route_str).dump(2);
            emit(out_path, text);
            if (!fails.empty()) {
                for (const auto& f : fails) std::cerr << "orthogonality: " << f << "\n";
                return 1;
            }
            return 0;
        }

        if (cmd_mckay->parsed()) {
            Group g = build_group(group_spec);
            AffineData ad = build_affine(g);
            auto roots = root_enumeration(ad);
            RelationReport rel;
            json j;
            if (with_relations) {
                rel = toroidal_relation_check(g, modes, mckay_degree);
                j = mckay_report_json(ad, static_cast<long>(roots.size()), &rel);
            } else {
                j = mckay_report_json(ad, static_cast<long>(roots.size()), nullptr);
            }
            if (with_group) {
                j["group_data"] = group_json(g);
                j["xi_form"] = xi_json(xi_mckay(g));
            }
            emit(out_path, j.dump(2));
            bool ok = ad.eigen_ok && ad.radical_ok &&
                      static_cast<long>(roots.size()) == expected_root_count(ad.ade_label) &&
                      (!with_relations || rel.ok());
            return ok ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            Group g = build_group(group_spec);
            Half degree_half = parse_half(degree_str);
            long degree_floor = degree_half.twice / 2;
            std::vector<SuiteResult> results;
            auto want = [&](const char* s) { return suite == s || suite == "all"; };
            if (want("scalar")) results.push_back(run_scalar_axioms(seed));
            if (want("isometry")) results.push_back(run_isometry(g, n, xi_opt));
            if (want("heisenberg"))
                results.push_back(run_heisenberg(g, modes, degree_floor, xi_opt));
            if (want("genseries")) results.push_back(run_genseries(g, n));
            if (want("ope")) results.push_back(run_ope(g, degree_floor, xi_opt));
            if (want("clifford")) results.push_back(run_clifford(g, degree_half, degree_floor));
            if (want("toroidal")) results.push_back(run_toroidal(g, modes, degree_floor));
            if (want("schurstates")) results.push_back(run_schur_states(g, n));
            if (want("chartable")) results.push_back(run_chartable(g, n));
            if (want("basicrep")) results.push_back(run_basicrep(g, degree_floor));
            if (results.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
            json j = json::array();
            bool pass = true;
            for (const auto& r : results) {
                j.push_back(suite_json(r));
                pass = pass && r.failures.empty();
            }
            emit(out_path, j.dump(2));
            return pass ? 0 : 1;
        }

        if (cmd_fock->parsed()) {
            Group g = build_group(group_spec);
            VertexContext ctx(make_xi(g, fock_xi));
            auto parse_state = [&](const std::string& s) {
                std::string mono_part = s;
                LatticeVec alpha(g->nc);
                auto epos = s.find("e[");
                if (epos != std::string::npos) {
                    alpha = parse_lattice(s.substr(epos));
                    mono_part = s.substr(0, epos);
                }
                if (alpha.rank() != g->nc)
                    throw std::invalid_argument("lattice vector has wrong rank");
                FockVec v;
                v.add(parse_monomial(mono_part, g->nc), alpha, Cyclo(1));
                return v;
            };
            FockVec state = parse_state(state_str);
            std::vector<std::string> ops;
            {
                std::istringstream is(apply_str);
                std::string tok;
                while (is >> tok) ops.push_back(tok);
            }
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                const std::string& tok = *it;
                if (tok.rfind("a[", 0) == 0) {
                    size_t close = tok.find(']');
                    long m = std::stol(tok.substr(2, close - 2));
                    size_t gp = tok.find("(g", close), ge = tok.find(')', gp);
                    int i = std::stoi(tok.substr(gp + 2, ge - gp - 2));
                    state = ctx.heis(m, LatticeVec::unit(g->nc, i), state);
                } else if (tok.rfind("X[", 0) == 0) {
                    size_t close = tok.find(']');
                    Half m = parse_half(tok.substr(2, close - 2));
                    size_t ep = tok.find("(e[", close);
                    LatticeVec gv = parse_lattice(tok.substr(ep + 1, tok.size() - ep - 2));
                    state = ctx.vertex(gv, m, state);
                } else if (tok.rfind("e[", 0) == 0) {
                    state = ctx.lattice_mul(parse_lattice(tok), state);
                } else {
                    throw std::invalid_argument("unknown operator token '" + tok + "'");
                }
            }
            json j = fock_json(state);
            if (!inner_str.empty()) {
                FockVec other = parse_state(inner_str);
                j["inner"] = ctx.inner(state, other).to_string();
            }
            emit(out_path, j.dump(2));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
