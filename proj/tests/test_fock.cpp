#include "doctest.h"
#include "wvo/fock.hpp"

using namespace wvo;

TEST_SUITE_BEGIN("fock");

namespace {

CycloVec unit_label(int n, int i) {
    CycloVec v(n);
    v[i] = Cyclo(1);
    return v;
}

PartFn mono(int labels, std::initializer_list<std::pair<int, Partition>> parts) {
    PartFn rho(labels);
    for (auto& [x, p] : parts) rho.at(x) = p;
    return rho;
}

}  // namespace

TEST_CASE("heisenberg action basics") {
    auto g = build_group("cyclic:2");
    XiForm xf = xi_mckay(g);
    SymVec vac = SymVec::vacuum(2);

    // a_1(gamma) a_{-1}(gamma') . 1 = <gamma, gamma'> . 1
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SymVec v = apply_heis(xf, -1, unit_label(2, j), vac);
            SymVec w = apply_heis(xf, 1, unit_label(2, i), v);
            CHECK(w == xf.a(i, j) * vac);
        }

    // a_2 annihilates a degree-2 monomial with no part 2
    SymVec v = apply_heis(xf, -1, unit_label(2, 0), apply_heis(xf, -1, unit_label(2, 0), vac));
    CHECK(apply_heis(xf, 2, unit_label(2, 0), v).is_zero());
    // a_0 acts as zero on the symmetric algebra
    CHECK(apply_heis(xf, 0, unit_label(2, 0), v).is_zero());
}

TEST_CASE("heisenberg commutation relations, gamma basis") {
    auto g = build_group("cyclic:2");
    for (const char* sel : {"trivial", "mckay"}) {
        XiForm xf = make_xi(g, sel);
        // test vector: a_{-1}(g0)^2 a_{-2}(g1) . 1
        SymVec v;
        v.add(mono(2, {{0, {1, 1}}, {1, {2}}}), Cyclo(1));
        for (long m = -3; m <= 3; ++m)
            for (long n = -3; n <= 3; ++n) {
                if (m == 0 || n == 0) continue;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        SymVec lhs =
                            apply_heis(xf, m, unit_label(2, i), apply_heis(xf, n, unit_label(2, j), v)) -
                            apply_heis(xf, n, unit_label(2, j), apply_heis(xf, m, unit_label(2, i), v));
                        SymVec rhs;
                        if (m == -n) rhs = (Cyclo(m) * xf.a(i, j)) * v;
                        CHECK(lhs == rhs);
                    }
            }
    }
}

TEST_CASE("class-basis commutation relations") {
    // [a_m(c'^{-1}), a_n(c)] = m delta_{m,-n} delta_{c',c} zeta_c xi(c)
    auto g = build_group("cyclic:3");
    XiForm xf = xi_mckay(g);
    SymVec v;
    v.add(mono(3, {{0, {2}}, {2, {1}}}), Cyclo(1));
    for (long m = -2; m <= 2; ++m)
        for (long n = -2; n <= 2; ++n) {
            if (m == 0 || n == 0) continue;
            for (int cp = 0; cp < 3; ++cp)
                for (int c = 0; c < 3; ++c) {
                    CycloVec lab1 = class_label_coefficients(g, g->inv_class[cp]);
                    CycloVec lab2 = class_label_coefficients(g, c);
                    SymVec lhs = apply_heis(xf, m, lab1, apply_heis(xf, n, lab2, v)) -
                                 apply_heis(xf, n, lab2, apply_heis(xf, m, lab1, v));
                    SymVec rhs;
                    if (m == -n && cp == c) rhs = (Cyclo(m * g->zeta[c]) * xf.xi().at(c)) * v;
                    CHECK(lhs == rhs);
                }
        }
}

TEST_CASE("basis change round trip") {
    auto g = build_group("cyclic:2");
    // a_m(c1) = a_m(gamma_0) - a_m(gamma_1)
    CycloVec lab = class_label_coefficients(g, 1);
    CHECK(lab[0] == Cyclo(1));
    CHECK(lab[1] == Cyclo(-1));
    // trivial group: a_m(c0) = a_m(gamma_0)
    auto t = build_group("trivial");
    CHECK(class_label_coefficients(t, 0) == CycloVec{Cyclo(1)});
}

TEST_CASE("inner product basics and the class-monomial gram matrix") {
    auto g = build_group("cyclic:2");
    XiForm xf = xi_mckay(g);
    InnerCache cache(xf);

    SymVec vac = SymVec::vacuum(2);
    CHECK(cache.inner(vac, vac) == Cyclo(1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SymVec u = apply_heis(xf, -1, unit_label(2, i), vac);
            SymVec v = apply_heis(xf, -1, unit_label(2, j), vac);
            CHECK(cache.inner(u, v) == xf.a(i, j));
        }

    // <a'_{-rho'}, a'_{-rho-bar}> = delta Z_rho prod_c xi(c)^{l(rho(c))}
    for (int n = 1; n <= 4; ++n) {
        for (const auto& rho : enumerate_partfn(2, n))
            for (const auto& rhop : enumerate_partfn(2, n)) {
                SymVec a = class_monomial_to_sym(g, rhop);
                SymVec b = class_monomial_to_sym(g, bar_type(g, rho));
                Cyclo expect;
                if (rho == rhop) {
                    expect = Cyclo(Rational(wreath_centralizer(g, rho)));
                    for (int c = 0; c < 2; ++c)
                        for (long k = 0; k < part_length(rho.at(c)); ++k)
                            expect = expect * xf.xi().at(c);
                }
                CHECK(cache.inner(a, b) == expect);
            }
    }
}

TEST_CASE("characteristic map sends sigma functions to power sums") {
    auto g = build_group("cyclic:2");
    // ch(sigma_n(c)) = a_{-n}(c)
    for (int c = 0; c < 2; ++c)
        for (int n = 1; n <= 3; ++n) {
            PartFn rho(2);
            rho.at(c) = {n};
            CHECK(ch(sigma_class(g, c, n)) == class_monomial_to_sym(g, rho));
        }
    // ch(sigma_n(gamma)) = a_{-n}(gamma)
    XiForm xf = xi_trivial(g);
    for (int i = 0; i < 2; ++i) {
        SymVec expect = apply_heis(xf, -2, unit_label(2, i), SymVec::vacuum(2));
        CHECK(ch(sigma_of(ClassFn::irreducible(g, i), 2)) == expect);
    }
    // ch(eta_n(gamma)) = sum_lambda z_lambda^{-1} a_{-lambda}(gamma)
    for (int i = 0; i < 2; ++i) {
        int n = 3;
        SymVec expect;
        for (const auto& lam : partitions_of(n))
            expect.add(mono(2, {{i, lam}}), Cyclo(Rational(Integer(1), z_lambda(lam))));
        CHECK(ch(eta_n(ClassFn::irreducible(g, i), n)) == expect);
    }
}

TEST_CASE("ch_inverse round trip") {
    auto g = build_group("cyclic:2");
    WreathClassFn f(g, 3);
    int k = 0;
    for (const auto& rho : enumerate_partfn(2, 3)) {
        f.add(rho, Cyclo(Rational(k * k - 3, k + 1)));
        ++k;
    }
    CHECK(ch_inverse(g, 3, ch(f)) == f);
}

TEST_CASE("murnaghan-nakayama table for S3/S4") {
    // rows chi^lambda, columns cycle types in canonical order
    CHECK(mn_character({3}, {3}) == 1);
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK(mn_character({1, 1, 1}, {2, 1}) == -1);
    CHECK(mn_character({2, 2}, {1, 1, 1, 1}) == 2);
    CHECK(mn_character({2, 2}, {2, 1, 1}) == 0);
    CHECK(mn_character({2, 2}, {2, 2}) == 2);
    CHECK(mn_character({2, 2}, {3, 1}) == -1);
    CHECK(mn_character({2, 2}, {4}) == 0);
    CHECK(mn_character({2, 1, 1}, {2, 1, 1}) == -1);
}

TEST_CASE("schur expansions in power sums") {
    auto t = build_group("trivial");
    SymVec s2 = schur_single(t, 0, {2});
    SymVec expect;
    expect.add(mono(1, {{0, {1, 1}}}), Cyclo(Rational(1, 2)));
    expect.add(mono(1, {{0, {2}}}), Cyclo(Rational(1, 2)));
    CHECK(s2 == expect);

    SymVec s11 = schur_single(t, 0, {1, 1});
    SymVec expect11;
    expect11.add(mono(1, {{0, {1, 1}}}), Cyclo(Rational(1, 2)));
    expect11.add(mono(1, {{0, {2}}}), Cyclo(Rational(-1, 2)));
    CHECK(s11 == expect11);

    auto g = build_group("cyclic:2");
    PartFn lam(2);
    lam.at(1) = {1};
    CHECK(schur_sym(g, lam) == apply_heis(xi_trivial(g), -1, unit_label(2, 1), SymVec::vacuum(2)));
}

TEST_CASE("schur orthonormality under the standard weight") {
    auto g = build_group("cyclic:2");
    XiForm xf = xi_trivial(g);
    InnerCache cache(xf);
    for (int n = 1; n <= 3; ++n) {
        auto lams = enumerate_partfn(2, n);
        for (const auto& a : lams)
            for (const auto& b : lams)
                CHECK(cache.inner(schur_sym(g, a), schur_sym(g, b)) == Cyclo(a == b ? 1 : 0));
    }
}

TEST_CASE("isometry on the sigma basis") {
    for (const char* spec : {"trivial", "cyclic:2"}) {
        auto g = build_group(spec);
        for (const char* sel : {"trivial", "mckay"}) {
            if (g->pi.empty() && std::string(sel) == "mckay") continue;
            XiForm xf = make_xi(g, sel);
            InnerCache cache(xf);
            for (int n = 1; n <= 3; ++n)
                for (const auto& r1 : enumerate_partfn(g->nc, n))
                    for (const auto& r2 : enumerate_partfn(g->nc, n)) {
                        WreathClassFn f = sigma_rho(g, r1), h = sigma_rho(g, r2);
                        CHECK(weighted_pairing_n(xf, f, h) == cache.inner(ch(f), ch(h)));
                    }
        }
    }
}

TEST_CASE("pairing adjoint to comultiplication on power sum monomials") {
    // <f g, h> = <f (x) g, Delta h> with Delta(a_n) = a_n (x) 1 + 1 (x) a_n.
    auto g = build_group("cyclic:2");
    XiForm xf = xi_mckay(g);
    InnerCache cache(xf);

    auto delta_pairing = [&](const SymVec& f, const SymVec& h, const PartFn& target) {
        // Delta(a_{-target}) = sum over subsets of the factor list
        std::vector<std::pair<int, int>> factors;  // (label, part)
        for (int x = 0; x < target.labels(); ++x)
            for (int p : target.at(x)) factors.emplace_back(x, p);
        Cyclo total;
        int k = static_cast<int>(factors.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            PartFn left(target.labels()), right(target.labels());
            for (int b = 0; b < k; ++b) {
                auto [x, p] = factors[b];
                if (mask & (1 << b))
                    left = with_part(left, x, p);
                else
                    right = with_part(right, x, p);
            }
            SymVec l, r;
            l.add(left, Cyclo(1));
            r.add(right, Cyclo(1));
            total += cache.inner(f, l) * cache.inner(h, r);
        }
        return total;
    };

    std::vector<PartFn> monos = {mono(2, {{0, {1}}}), mono(2, {{1, {2}}}),
                                 mono(2, {{0, {1}}, {1, {1}}}), mono(2, {{0, {2, 1}}})};
    for (const auto& mf : monos)
        for (const auto& mh : monos) {
            SymVec f, h;
            f.add(mf, Cyclo(1));
            h.add(mh, Cyclo(1));
            for (const auto& target : enumerate_partfn(2, mf.norm() + mh.norm())) {
                SymVec th;
                th.add(target, Cyclo(1));
                CHECK(cache.inner(f * h, th) == delta_pairing(f, h, target));
            }
        }
}

TEST_CASE("radical of the McKay form") {
    // monomials containing a_{-n}(delta) pair to zero against everything
    auto g = build_group("cyclic:2");
    XiForm xf = xi_mckay(g);
    CycloVec delta(2);
    for (int i = 0; i < 2; ++i) delta[i] = Cyclo(g->degrees[i]);
    SymVec vac = SymVec::vacuum(2);
    for (int n = 1; n <= 3; ++n) {
        SymVec dmono = apply_heis(xf, -n, delta, vac);
        for (const auto& rho : enumerate_partfn(2, n)) {
            SymVec other;
            other.add(rho, Cyclo(1));
            CHECK(inner_sym(xf, dmono, other) == Cyclo(0));
        }
    }
}

TEST_CASE("generating function identities") {
    auto g = build_group("cyclic:2");
    ClassFn g0 = ClassFn::irreducible(g, 0), g1 = ClassFn::irreducible(g, 1);
    for (const ClassFn& gamma : {g0, g1, g0 - g1}) {
        SeriesReport rep = gen_series_check(gamma, 3);
        CHECK(rep.eta_ok);
        CHECK(rep.eps_ok);
        CHECK(rep.substitution_ok);
    }
}

TEST_SUITE_END();
