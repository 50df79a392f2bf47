// Acceptance suite: one line per criterion, exact checks only.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "wvo/io.hpp"

using namespace wvo;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<bool(std::string&)> run;
};

bool check_eq(const Cyclo& got, const Cyclo& want, std::string& why, const std::string& what) {
    if (got == want) return true;
    why = what + ": got " + got.to_string() + ", want " + want.to_string();
    return false;
}

// [1] McKay correspondence over the five families at desk scale.
bool crit_mckay(std::string& why) {
    std::vector<std::pair<std::string, std::string>> cases = {
        {"cyclic:2", "affine A1"}, {"cyclic:3", "affine A2"}, {"cyclic:4", "affine A3"},
        {"cyclic:5", "affine A4"}, {"cyclic:6", "affine A5"}, {"cyclic:7", "affine A6"},
        {"cyclic:8", "affine A7"}, {"bd:8", "affine D4"},     {"bd:12", "affine D5"},
        {"bd:16", "affine D6"},    {"bt", "affine E6"},       {"bo", "affine E7"},
        {"bi", "affine E8"}};
    for (const auto& [spec, label] : cases) {
        AffineData ad = build_affine(build_group(spec));  // throws on invariant failure
        if (!ad.eigen_ok) {
            why = spec + ": AE = ED failed";
            return false;
        }
        if (!ad.radical_ok) {
            why = spec + ": radical not one-dimensional or A delta != 0";
            return false;
        }
        if (ad.ade_label != label) {
            why = spec + ": detected " + ad.ade_label + ", expected " + label;
            return false;
        }
    }
    return true;
}

// [2] ch is an isometry on the full sigma basis.
bool crit_isometry(std::string& why) {
    for (const char* spec : {"trivial", "cyclic:2", "cyclic:3"}) {
        Group g = build_group(spec);
        for (const char* sel : {"trivial", "mckay"}) {
            XiForm xf = make_xi(g, sel);
            InnerCache cache(xf);
            for (int n = 1; n <= 4; ++n) {
                auto rhos = enumerate_partfn(g->nc, n);
                std::vector<SymVec> images;
                for (const auto& rho : rhos) images.push_back(class_monomial_to_sym(g, rho));
                for (size_t a = 0; a < rhos.size(); ++a)
                    for (size_t b = 0; b < rhos.size(); ++b) {
                        Cyclo lhs = weighted_pairing_n(xf, sigma_rho(g, rhos[a]),
                                                       sigma_rho(g, rhos[b]));
                        Cyclo rhs = cache.inner(images[a], images[b]);
                        if (!(lhs == rhs)) {
                            why = std::string(spec) + " xi=" + sel + " n=" + std::to_string(n) +
                                  " sigma pairing mismatch at " + rhos[a].to_string('c') + " / " +
                                  rhos[b].to_string('c');
                            return false;
                        }
                    }
            }
        }
    }
    return true;
}

// [3] Heisenberg commutation relations in both bases.
bool crit_heisenberg(std::string& why) {
    Group g = build_group("cyclic:2");
    for (const char* sel : {"trivial", "mckay"}) {
        XiForm xf = make_xi(g, sel);
        std::vector<SymVec> basis;
        for (int d = 0; d <= 4; ++d)
            for (const auto& rho : enumerate_partfn(2, d)) {
                SymVec v;
                v.add(rho, Cyclo(1));
                basis.push_back(std::move(v));
            }
        for (long m = -4; m <= 4; ++m)
            for (long n = -4; n <= 4; ++n) {
                if (m == 0 || n == 0) continue;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        CycloVec li(2), lj(2);
                        li[i] = Cyclo(1);
                        lj[j] = Cyclo(1);
                        CycloVec ci = class_label_coefficients(g, g->inv_class[i]);
                        CycloVec cj = class_label_coefficients(g, j);
                        for (const SymVec& v : basis) {
                            SymVec lhs = apply_heis(xf, m, li, apply_heis(xf, n, lj, v)) -
                                         apply_heis(xf, n, lj, apply_heis(xf, m, li, v));
                            SymVec rhs;
                            if (m == -n) rhs = (Cyclo(m) * xf.a(i, j)) * v;
                            if (lhs != rhs) {
                                why = "gamma basis failure at m=" + std::to_string(m) +
                                      " n=" + std::to_string(n) + " xi=" + sel;
                                return false;
                            }
                            SymVec lhs2 = apply_heis(xf, m, ci, apply_heis(xf, n, cj, v)) -
                                          apply_heis(xf, n, cj, apply_heis(xf, m, ci, v));
                            SymVec rhs2;
                            if (m == -n && i == j)
                                rhs2 = (Cyclo(m * g->zeta[j]) * xf.xi().at(j)) * v;
                            if (lhs2 != rhs2) {
                                why = "class basis failure at m=" + std::to_string(m) +
                                      " n=" + std::to_string(n) + " xi=" + sel;
                                return false;
                            }
                        }
                    }
            }
    }
    return true;
}

// [4] generating-function identities to z^4, including a virtual character.
bool crit_genseries(std::string& why) {
    Group g = build_group("cyclic:2");
    ClassFn g0 = ClassFn::irreducible(g, 0), g1 = ClassFn::irreducible(g, 1);
    int idx = 0;
    for (const ClassFn& gamma : {g0, g1, g0 - g1}) {
        SeriesReport rep = gen_series_check(gamma, 4);
        if (!rep.all_ok()) {
            why = "series identity failed for gamma #" + std::to_string(idx);
            return false;
        }
        ++idx;
    }
    return true;
}

// [5] operator product expansion, both weights.
bool crit_ope(std::string& why) {
    Group g = build_group("cyclic:2");
    for (const char* sel : {"mckay", "trivial"}) {
        VertexContext ctx(make_xi(g, sel));
        std::vector<LatticeVec> dirs = {LatticeVec::unit(2, 0), -LatticeVec::unit(2, 0),
                                        LatticeVec::unit(2, 1), -LatticeVec::unit(2, 1)};
        for (const auto& a : dirs)
            for (const auto& b : dirs) {
                OpeReport rep = ope_check(ctx, a, b, 2);
                if (!rep.ok()) {
                    why = std::string("xi=") + sel + ": " + rep.mismatches.front();
                    return false;
                }
            }
    }
    return true;
}

// [6] Clifford anticommutators, modes up to 5/2.
bool crit_clifford(std::string& why) {
    for (const char* spec : {"trivial", "cyclic:2"}) {
        VertexContext ctx(xi_trivial(build_group(spec)));
        CliffordReport rep = clifford_check(ctx, Half(5), 2);
        if (!rep.ok()) {
            why = std::string(spec) + ": " + rep.mismatches.front();
            return false;
        }
    }
    return true;
}

// [7] character tables: MN comparison and element-level genuineness.
bool crit_chartable(std::string& why) {
    // trivial group: the vertex-operator table equals the MN table
    Group t = build_group("trivial");
    for (int n = 1; n <= 5; ++n) {
        WreathCharTable table = character_table(t, n, TableRoute::vertex_operator);
        for (size_t i = 0; i < table.rows.size(); ++i)
            for (size_t j = 0; j < table.cols.size(); ++j) {
                long expect = mn_character(table.rows[i].at(0), table.cols[j].at(0));
                if (!(table.values[i][j] == Cyclo(expect))) {
                    why = "S_" + std::to_string(n) + " MN mismatch at row " + std::to_string(i) +
                          " col " + std::to_string(j);
                    return false;
                }
            }
    }
    // Z/2 and Z/3: orthogonality and (small orders) element-level genuineness
    for (const char* spec : {"cyclic:2", "cyclic:3"}) {
        Group g = build_group(spec);
        for (int n = 1; n <= 3; ++n) {
            WreathCharTable table = character_table(g, n, TableRoute::vertex_operator);
            auto fails = table_orthogonality_failures(table);
            if (!fails.empty()) {
                why = std::string(spec) + " n=" + std::to_string(n) + ": " + fails.front();
                return false;
            }
            long order = 1;
            for (int k = 0; k < n; ++k) order *= g->elements->order();
            for (int k = 2; k <= n; ++k) order *= k;
            if (order > 48) continue;

            // brute-force element-level verification
            WreathGroup w = build_wreath_group(g, n);
            const CayleyGroup& cg = *w.cayley;
            std::vector<int> col_of_class(cg.num_classes());
            for (int c = 0; c < cg.num_classes(); ++c)
                col_of_class[c] = table.col_index(type_of(g, w.elements[cg.class_rep(c)]));
            // identity column and value: positive integer degree
            PartFn id_type(g->nc);
            id_type.at(0) = Partition(n, 1);
            int id_col = table.col_index(id_type);
            auto constants = cg.class_algebra_constants();
            for (size_t row = 0; row < table.rows.size(); ++row) {
                const Cyclo& deg = table.values[row][id_col];
                if (!deg.is_integer() || deg.to_rational().sign() <= 0) {
                    why = std::string(spec) + " n=" + std::to_string(n) + " row " +
                          std::to_string(row) + ": identity value not a positive integer";
                    return false;
                }
                // central character: w_i w_j = sum_k a_ijk w_k with
                // w_i = |K_i| chi(K_i) / chi(1)
                std::vector<Cyclo> wvals(cg.num_classes());
                for (int c = 0; c < cg.num_classes(); ++c)
                    wvals[c] = Cyclo(static_cast<long>(cg.class_members(c).size())) *
                               table.values[row][col_of_class[c]] / deg;
                for (int i = 0; i < cg.num_classes(); ++i)
                    for (int j = 0; j < cg.num_classes(); ++j) {
                        Cyclo rhs;
                        for (int k = 0; k < cg.num_classes(); ++k)
                            rhs += Cyclo(constants[i][j][k]) * wvals[k];
                        if (!(wvals[i] * wvals[j] == rhs)) {
                            why = std::string(spec) + " n=" + std::to_string(n) + " row " +
                                  std::to_string(row) + ": class-algebra consistency failed";
                            return false;
                        }
                    }
            }
        }
    }
    return true;
}

// [8] toroidal/affine relations including the depth-3 Serre relation.
bool crit_toroidal(std::string& why) {
    for (const char* spec : {"cyclic:2", "cyclic:3"}) {
        RelationReport rep = toroidal_relation_check(build_group(spec), 2, 2);
        if (!rep.ok()) {
            why = std::string(spec) + ": " + rep.mismatches.front();
            return false;
        }
    }
    return true;
}

// [9] Schur-state orthonormality and the ch image.
bool crit_schur_states(std::string& why) {
    Group g = build_group("cyclic:2");
    VertexContext ctx(xi_trivial(g));
    InnerCache cache(ctx.xi_form());
    std::vector<PartFn> lams;
    for (int n = 0; n <= 3; ++n)
        for (const auto& lam : enumerate_partfn(2, n)) lams.push_back(lam);
    for (const LatticeVec& alpha : {LatticeVec(2), LatticeVec::unit(2, 0)}) {
        std::vector<FockVec> states;
        for (const auto& lam : lams) states.push_back(schur_state(ctx, lam, alpha));
        for (size_t a = 0; a < states.size(); ++a)
            for (size_t b = 0; b < states.size(); ++b) {
                Cyclo got = ctx.inner(cache, states[a], states[b]);
                std::string what = "<s_{" + lams[a].to_string('g') + "," + alpha.to_string() +
                                   "}, s_{" + lams[b].to_string('g') + "}>";
                if (!check_eq(got, Cyclo(a == b ? 1 : 0), why, what)) return false;
            }
    }
    // ch(s_{lambda,0}) = s_lambda e^{omega(lambda)}, on the nose at alpha = 0
    for (const auto& lam : lams) {
        FockVec state = schur_state(ctx, lam, LatticeVec(2));
        if (state != FockVec::from_sym(schur_sym(g, lam), omega_of(lam))) {
            why = "ch(s_{lambda,0}) != s_lambda e^omega at " + lam.to_string('g');
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "mckay correspondence (AE=ED, radical, ADE labels; 13 groups)", 10.0, crit_mckay},
        {2, "isometry of ch on the sigma basis (3 groups, both weights, n<=4)", 30.0,
         crit_isometry},
        {3, "heisenberg relations, gamma and class bases (modes<=4, deg<=4)", 10.0,
         crit_heisenberg},
        {4, "generating-function identities to z^4 (incl. virtual character)", 30.0,
         crit_genseries},
        {5, "operator product expansion (Z/2, both weights, deg<=2)", 60.0, crit_ope},
        {6, "clifford anticommutators (modes<=5/2, deg<=2)", 30.0, crit_clifford},
        {7, "character tables: MN for S_n (n<=5), orthogonality + element-level", 120.0,
         crit_chartable},
        {8, "toroidal relations incl. depth-3 serre (Z/2, Z/3, modes<=2, deg<=2)", 120.0,
         crit_toroidal},
        {9, "schur-state orthonormality and ch image (norm<=3)", 60.0, crit_schur_states},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_s;
        bool pass = ok && in_budget;
        std::printf("[%d] %s  %s (%.2fs, budget %.0fs)\n", c.id, pass ? "PASS" : "FAIL",
                    c.name.c_str(), secs, c.budget_s);
        if (!ok) std::printf("      reason: %s\n", why.c_str());
        if (ok && !in_budget) std::printf("      reason: over time budget\n");
        if (!pass) ++failed;
    }
    return failed;
}
