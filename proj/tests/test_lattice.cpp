#include "doctest.h"
#include "wvo/io.hpp"
#include "wvo/lattice.hpp"

using namespace wvo;

TEST_SUITE_BEGIN("lattice");

TEST_CASE("cocycle properties") {
    auto g = build_group("cyclic:2");

    SUBCASE("trivial xi reproduces the standard sign choice") {
        VertexContext ctx((xi_trivial(g)));
        LatticeVec e0 = LatticeVec::unit(2, 0), e1 = LatticeVec::unit(2, 1);
        CHECK(ctx.cocycle().eps(e0, e1) == 1);   // i <= j
        CHECK(ctx.cocycle().eps(e1, e0) == -1);  // i > j
        CHECK(ctx.cocycle().eps(e0, LatticeVec(2)) == 1);
        CHECK(ctx.cocycle().eps(LatticeVec(2), e1) == 1);
    }

    for (const char* sel : {"trivial", "mckay"}) {
        VertexContext ctx(make_xi(g, sel));
        const Cocycle& eps = ctx.cocycle();
        const LatticeForm& form = ctx.form();
        std::vector<LatticeVec> pts;
        for (long a = -2; a <= 2; ++a)
            for (long b = -2; b <= 2; ++b) {
                LatticeVec v(2);
                v.c = {a, b};
                pts.push_back(v);
            }
        // cocycle identity eps(a,b) eps(a+b,c) = eps(a,b+c) eps(b,c)
        for (size_t i = 0; i < pts.size(); i += 3)
            for (size_t j = 1; j < pts.size(); j += 4)
                for (size_t k = 2; k < pts.size(); k += 5) {
                    const auto &a = pts[i], &b = pts[j], &c = pts[k];
                    CHECK(eps.eps(a, b) * eps.eps(a + b, c) == eps.eps(a, b + c) * eps.eps(b, c));
                }
        // B_eps(a,b) = (-1)^{<a,b> + <a,a><b,b>}
        for (size_t i = 0; i < pts.size(); i += 2)
            for (size_t j = 0; j < pts.size(); j += 3) {
                const auto &a = pts[i], &b = pts[j];
                long expo = form.pair(a, b) + form.norm(a) * form.norm(b);
                CHECK(eps.b_eps(a, b) == (expo % 2 ? -1 : 1));
            }
    }
}

TEST_CASE("lattice operators") {
    auto g = build_group("cyclic:2");
    VertexContext ctx(xi_mckay(g));
    LatticeVec e0 = LatticeVec::unit(2, 0), e1 = LatticeVec::unit(2, 1), zero(2);

    FockVec eb = FockVec::lattice_point(2, e1);
    CHECK(ctx.lattice_mul(zero, eb) == eb);
    // partial_{g0} e^{g1} = a_{01} e^{g1} = -2 e^{g1}
    CHECK(ctx.partial(e0, eb) == Cyclo(-2) * eb);
    // associativity of e^a up to the cocycle identity
    FockVec lhs = ctx.lattice_mul(e0, ctx.lattice_mul(e1, eb));
    FockVec rhs = ctx.lattice_mul(e0 + e1, eb);
    int fix = ctx.cocycle().eps(e0, e1);
    CHECK(lhs == (fix < 0 ? Cyclo(-1) * rhs : rhs));
}

TEST_CASE("half vertex series") {
    auto g = build_group("cyclic:2");
    VertexContext ctx(xi_trivial(g));
    FockVec vac = FockVec::lattice_point(2, LatticeVec(2));
    CycloVec label(2);
    label[0] = Cyclo(1);

    auto hp = ctx.half_vertex(HalfSide::HPlus, label, 3, vac);
    CHECK(hp[0] == vac);  // z^0 coefficient is the identity
    // z^1 coefficient of H_+ . 1 is a_{-1}(gamma) . 1
    FockVec a1 = ctx.heis(-1, LatticeVec::unit(2, 0), vac);
    CHECK(hp[1] == a1);
    // E_+ flips the sign of the degree-1 slice
    auto ep = ctx.half_vertex(HalfSide::EPlus, label, 3, vac);
    CHECK(ep[1] == Cyclo(-1) * a1);
    // minus sides annihilate the vacuum beyond k = 0
    auto hm = ctx.half_vertex(HalfSide::HMinus, label, 3, vac);
    CHECK(hm[0] == vac);
    CHECK(hm[1].is_zero());

    // adjointness: <H_+(z)u, v> = <u, H_-(z^{-1})v> coefficientwise
    auto basis = fock_test_basis(ctx, 3, 1);
    for (size_t bi = 0; bi < basis.size(); bi += 7)
        for (size_t bj = 0; bj < basis.size(); bj += 5) {
            auto up = ctx.half_vertex(HalfSide::HPlus, label, 3, basis[bi]);
            auto vm = ctx.half_vertex(HalfSide::HMinus, label, 3, basis[bj]);
            auto ue = ctx.half_vertex(HalfSide::EPlus, label, 3, basis[bi]);
            auto ve = ctx.half_vertex(HalfSide::EMinus, label, 3, basis[bj]);
            for (int k = 0; k <= 3; ++k) {
                CHECK(ctx.inner(up[k], basis[bj]) == ctx.inner(basis[bi], vm[k]));
                CHECK(ctx.inner(ue[k], basis[bj]) == ctx.inner(basis[bi], ve[k]));
            }
        }
}

TEST_CASE("mode support on lattice points (trivial weight)") {
    // X_m(g) e^alpha = eps(g, alpha) delta_{m, -<alpha,g> - 1/2} e^{alpha+g}
    // for m >= -<g,alpha> - 1/2, exhaustively over |alpha_i| <= 2.
    auto g = build_group("cyclic:2");
    VertexContext ctx(xi_trivial(g));
    for (int i = 0; i < 2; ++i) {
        LatticeVec gi = LatticeVec::unit(2, i);
        for (long a0 = -2; a0 <= 2; ++a0)
            for (long a1 = -2; a1 <= 2; ++a1) {
                LatticeVec alpha(2);
                alpha.c = {a0, a1};
                FockVec ea = FockVec::lattice_point(2, alpha);
                long s = ctx.form().pair(alpha, gi);
                // threshold mode: -s - 1/2
                Half threshold = Half(-2 * s - 1);
                for (long t = threshold.twice; t <= threshold.twice + 8; t += 2) {
                    FockVec got = ctx.vertex(gi, Half(t), ea);
                    if (t == threshold.twice) {
                        int sign = ctx.cocycle().eps(gi, alpha);
                        FockVec want = FockVec::lattice_point(2, alpha + gi);
                        CHECK(got == (sign < 0 ? Cyclo(-1) * want : want));
                    } else {
                        CHECK(got.is_zero());
                    }
                }
            }
    }
    // X_{-1/2}(g_i) e^0 = e^{g_i}
    for (int i = 0; i < 2; ++i) {
        FockVec got = ctx.vertex(LatticeVec::unit(2, i), Half(-1),
                                 FockVec::lattice_point(2, LatticeVec(2)));
        CHECK(got == FockVec::lattice_point(2, LatticeVec::unit(2, i)));
    }
}

TEST_CASE("primitivity: [a_n(alpha), X_m(beta)] = <alpha,beta> X_{m+n}(beta)") {
    auto g = build_group("cyclic:2");
    for (const char* sel : {"trivial", "mckay"}) {
        VertexContext ctx(make_xi(g, sel));
        auto basis = fock_test_basis(ctx, 2, 1);
        long qb = 0;
        for (int ia = 0; ia < 2; ++ia)
            for (int ib = 0; ib < 2; ++ib) {
                LatticeVec av = LatticeVec::unit(2, ia), bv = LatticeVec::unit(2, ib);
                qb = ctx.form().norm(bv);
                for (long n = -2; n <= 2; ++n) {
                    if (n == 0) continue;
                    for (long mt = -2 * 2 - qb; mt <= 2 * 2 + qb; mt += 2) {
                        if (((mt - qb) % 2 + 2) % 2 != 0) continue;
                        Half m = Half(mt);
                        for (size_t k = 0; k < basis.size(); k += 3) {
                            const FockVec& v = basis[k];
                            FockVec lhs = ctx.heis(n, av, ctx.vertex(bv, m, v)) -
                                          ctx.vertex(bv, m, ctx.heis(n, av, v));
                            FockVec rhs = Cyclo(ctx.form().pair(av, bv)) *
                                          ctx.vertex(bv, m + Half::of_int(n), v);
                            CHECK(lhs == rhs);
                        }
                    }
                }
            }
    }
}

TEST_CASE("vertex adjointness on basis directions") {
    // <X_n(g)u, v> = <u, X_{-n}(-g)v> for g = +-e_i
    auto g = build_group("cyclic:2");
    VertexContext ctx(xi_trivial(g));
    auto basis = fock_test_basis(ctx, 3, 1);
    for (int i = 0; i < 2; ++i)
        for (int sgn : {+1, -1}) {
            LatticeVec gv = sgn > 0 ? LatticeVec::unit(2, i) : -LatticeVec::unit(2, i);
            for (long t = -5; t <= 5; t += 2) {
                Half n = Half(t);
                for (size_t a = 0; a < basis.size(); a += 6)
                    for (size_t b = 0; b < basis.size(); b += 7) {
                        Cyclo lhs = ctx.inner(ctx.vertex(gv, n, basis[a]), basis[b]);
                        Cyclo rhs = ctx.inner(basis[a], ctx.vertex(-gv, -n, basis[b]));
                        CHECK(lhs == rhs);
                    }
            }
        }
}

TEST_CASE("operator product expansion") {
    auto g = build_group("cyclic:2");
    SUBCASE("trivial weight, mixed directions") {
        VertexContext ctx(xi_trivial(g));
        for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}}) {
            OpeReport rep =
                ope_check(ctx, LatticeVec::unit(2, i), LatticeVec::unit(2, j), 1);
            INFO(i, " ", j, " first mismatch: ",
                 rep.mismatches.empty() ? "none" : rep.mismatches.front());
            CHECK(rep.ok());
            CHECK(rep.tested_pairs > 0);
        }
    }
    SUBCASE("McKay weight") {
        VertexContext ctx(xi_mckay(g));
        LatticeVec g1 = LatticeVec::unit(2, 1);
        OpeReport rep = ope_check(ctx, g1, g1, 1);
        INFO("first mismatch: ", rep.mismatches.empty() ? "none" : rep.mismatches.front());
        CHECK(rep.ok());
        OpeReport rep2 = ope_check(ctx, g1, -g1, 1);
        CHECK(rep2.ok());
    }
}

TEST_CASE("clifford relations at small scale") {
    for (const char* spec : {"trivial", "cyclic:2"}) {
        auto g = build_group(spec);
        VertexContext ctx(xi_trivial(g));
        CliffordReport rep = clifford_check(ctx, Half(3), 1);  // modes up to 3/2
        INFO(spec, " first mismatch: ", rep.mismatches.empty() ? "none" : rep.mismatches.front());
        CHECK(rep.ok());
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("schur states map to schur functions") {
    auto g = build_group("cyclic:2");
    VertexContext ctx(xi_trivial(g));

    SUBCASE("single box") {
        PartFn lam(2);
        lam.at(0) = {1};
        FockVec state = schur_state(ctx, lam, LatticeVec(2));
        FockVec want = FockVec::from_sym(schur_sym(g, lam), omega_of(lam));
        CHECK(state == want);
    }
    SUBCASE("alpha = 0 states are on the nose") {
        for (int n = 0; n <= 3; ++n)
            for (const auto& lam : enumerate_partfn(2, n)) {
                FockVec state = schur_state(ctx, lam, LatticeVec(2));
                FockVec want = FockVec::from_sym(schur_sym(g, lam), omega_of(lam));
                INFO("lambda = ", lam.to_string('g'));
                CHECK(state == want);
            }
    }
    SUBCASE("orthonormality, including a nonzero alpha") {
        for (const LatticeVec& alpha : {LatticeVec(2), LatticeVec::unit(2, 0)}) {
            InnerCache cache(ctx.xi_form());
            for (int n = 0; n <= 2; ++n)
                for (const auto& a : enumerate_partfn(2, n))
                    for (int m = 0; m <= 2; ++m)
                        for (const auto& b : enumerate_partfn(2, m)) {
                            Cyclo got = ctx.inner(cache, schur_state(ctx, a, alpha),
                                                  schur_state(ctx, b, alpha));
                            CHECK(got == Cyclo(a == b ? 1 : 0));
                        }
        }
    }
}

TEST_CASE("schur state cocycle sign at alpha = -omega") {
    // States entering the matrix-coefficient table come with the cocycle
    // gauge sign (-1)^{sum_{i<j} l_i l_j}; the table assembly normalizes it.
    for (const char* spec : {"cyclic:2", "cyclic:3"}) {
        auto g = build_group(spec);
        VertexContext ctx(xi_trivial(g));
        InnerCache cache(ctx.xi_form());
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : enumerate_partfn(g->nc, n)) {
                FockVec state = schur_state(ctx, lam, -omega_of(lam));
                Cyclo sign = ctx.inner(cache, state,
                                       FockVec::from_sym(schur_sym(g, lam), LatticeVec(g->nc)));
                long cross = 0;
                for (int i = 0; i < g->nc; ++i)
                    for (int j = i + 1; j < g->nc; ++j)
                        cross += part_length(lam.at(i)) * part_length(lam.at(j));
                CHECK(sign == Cyclo(cross % 2 ? -1 : 1));
            }
    }
}

TEST_CASE("character tables against murnaghan-nakayama") {
    auto t = build_group("trivial");
    for (int n = 1; n <= 4; ++n) {
        WreathCharTable inner = character_table(t, n, TableRoute::inner_product);
        WreathCharTable vertex = character_table(t, n, TableRoute::vertex_operator);
        REQUIRE(inner.rows.size() == partitions_of(n).size());
        for (size_t i = 0; i < inner.rows.size(); ++i)
            for (size_t j = 0; j < inner.cols.size(); ++j) {
                long expect = mn_character(inner.rows[i].at(0), inner.cols[j].at(0));
                CHECK(inner.values[i][j] == Cyclo(expect));
                CHECK(vertex.values[i][j] == Cyclo(expect));
            }
    }
}

TEST_CASE("character table orthogonality for Z/2 and Z/3") {
    for (const char* spec : {"cyclic:2", "cyclic:3"}) {
        auto g = build_group(spec);
        for (int n = 1; n <= 2; ++n) {
            WreathCharTable t = character_table(g, n, TableRoute::inner_product);
            CHECK(table_orthogonality_failures(t).empty());
            WreathCharTable tv = character_table(g, n, TableRoute::vertex_operator);
            CHECK(t.values == tv.values);
        }
    }
}

TEST_CASE("spec example: trivial character row") {
    // lambda with lambda(gamma_0) = (n) is the trivial character: all values 1
    auto g = build_group("cyclic:2");
    WreathCharTable t = character_table(g, 3, TableRoute::inner_product);
    PartFn lam(2);
    lam.at(0) = {3};
    int row = -1;
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i] == lam) row = static_cast<int>(i);
    REQUIRE(row >= 0);
    for (const auto& v : t.values[row]) CHECK(v == Cyclo(1));
}

TEST_CASE("json exports are deterministic") {
    auto g = build_group("cyclic:3");
    WreathCharTable t1 = character_table(g, 2, TableRoute::inner_product);
    WreathCharTable t2 = character_table(g, 2, TableRoute::inner_product);
    CHECK(char_table_json(t1, "inner").dump() == char_table_json(t2, "inner").dump());
    CHECK(group_json(g).dump() == group_json(build_group("cyclic:3")).dump());
    // WreathClassFn rendering: {type-string: cyclo-string}
    WreathClassFn f = eta_n(ClassFn::irreducible(g, 1), 2);
    json j = wreath_fn_json(f);
    CHECK(j["n"] == 2);
    CHECK(j["values"].size() == f.terms().size());
}

TEST_CASE("io round trips") {
    PartFn rho(3);
    rho.at(0) = {1, 1, 1};
    rho.at(1) = {2};
    CHECK(monomial_string(rho) == "a[-2](g1)^1 a[-1](g0)^3");
    CHECK(parse_monomial("a[-2](g1)^1 a[-1](g0)^3", 3) == rho);
    CHECK(parse_monomial("1", 2) == PartFn(2));
    LatticeVec v;
    v.c = {1, -2, 0};
    CHECK(v.to_string() == "e[1,-2,0]");
    CHECK(parse_lattice("e[1,-2,0]") == v);
    CHECK(parse_half("-5/2") == Half(-5));
    CHECK(parse_half("3") == Half::of_int(3));
}

TEST_SUITE_END();
