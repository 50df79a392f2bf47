#include "wvo/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wvo {

std::string LatticeVec::to_string() const {
    std::ostringstream os;
    os << "e[";
    for (int i = 0; i < rank(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

std::string Half::to_string() const {
    if (is_integer()) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

LatticeForm::LatticeForm(const XiForm& xf) {
    int n = xf.group()->nc;
    a_.assign(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!xf.a(i, j).is_integer())
                throw std::invalid_argument("LatticeForm: Gram matrix is not integral");
            a_[i][j] = xf.a(i, j).to_long();
        }
}

long LatticeForm::pair(const LatticeVec& x, const LatticeVec& y) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < rank(); ++j) s += x.c[i] * a_[i][j] * y.c[j];
    }
    return s;
}

Cocycle::Cocycle(const LatticeForm& form) {
    int n = form.rank();
    parity_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            long e = form.entry(i, j) + form.entry(i, i) * form.entry(j, j);
            parity_[i][j] = static_cast<int>(((e % 2) + 2) % 2);
        }
}

int Cocycle::eps(const LatticeVec& a, const LatticeVec& b) const {
    long par = 0;
    int n = static_cast<int>(parity_.size());
    for (int i = 0; i < n; ++i) {
        if (a.c[i] % 2 == 0) continue;
        for (int j = 0; j < i; ++j)
            if (parity_[i][j] && b.c[j] % 2 != 0) ++par;
    }
    return par % 2 ? -1 : 1;
}

FockVec FockVec::from_sym(const SymVec& s, const LatticeVec& alpha) {
    FockVec v;
    for (const auto& [rho, c] : s.terms()) v.add(rho, alpha, c);
    return v;
}

void FockVec::add(const PartFn& rho, const LatticeVec& alpha, const Cyclo& c) {
    if (c.is_zero()) return;
    FockKey key{rho, alpha};
    auto [it, inserted] = t_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Cyclo FockVec::at(const PartFn& rho, const LatticeVec& alpha) const {
    auto it = t_.find(FockKey{rho, alpha});
    return it == t_.end() ? Cyclo(0) : it->second;
}

FockVec operator+(const FockVec& a, const FockVec& b) {
    FockVec out = a;
    for (const auto& [k, c] : b.t_) out.add(k.rho, k.alpha, c);
    return out;
}

FockVec operator-(const FockVec& a, const FockVec& b) {
    FockVec out = a;
    for (const auto& [k, c] : b.t_) out.add(k.rho, k.alpha, -c);
    return out;
}

FockVec operator*(const Cyclo& s, const FockVec& a) {
    FockVec out;
    if (s.is_zero()) return out;
    for (const auto& [k, c] : a.t_) out.add(k.rho, k.alpha, s * c);
    return out;
}

VertexContext::VertexContext(XiForm xf) : xf_(std::move(xf)), form_(xf_), eps_(form_) {}

Half VertexContext::max_degree(const FockVec& v) const {
    Half d(0);
    for (const auto& [k, c] : v.terms()) d = std::max(d, degree(k.rho, k.alpha));
    return d;
}

namespace {

// Group the terms of a FockVec by lattice point.
std::map<LatticeVec, SymVec> by_sector(const FockVec& v) {
    std::map<LatticeVec, SymVec> out;
    for (const auto& [k, c] : v.terms()) out[k.alpha].add(k.rho, c);
    return out;
}

// Coefficient of z^{-k} in exp(-+ sum_{n>=1} a_n(label) z^{-n} / n) applied
// to v: sum over partitions of k of (-+1)^{l} z_lambda^{-1} a_{lambda_1}...
SymVec ann_series_coeff(const XiForm& xf, const CycloVec& label, int k, bool negate,
                        const SymVec& v) {
    if (k == 0) return v;
    SymVec out;
    for (const auto& lam : partitions_of(k)) {
        SymVec w = v;
        for (int p : lam) {
            w = apply_heis(xf, p, label, w);
            if (w.is_zero()) break;
        }
        if (w.is_zero()) continue;
        Rational coeff(Integer(1), z_lambda(lam));
        if (negate && part_length(lam) % 2) coeff = -coeff;
        out = out + Cyclo(coeff) * w;
    }
    return out;
}

// exp series on the creation side as multiplication operators: slice k is the
// coefficient of z^k.
std::vector<SymVec> creation_series(const XiForm& xf, const CycloVec& label, int order,
                                    bool negate) {
    int labels = xf.group()->nc;
    SymVec arg;
    for (int n = 1; n <= order; ++n) {
        for (int i = 0; i < labels; ++i) {
            if (label[i].is_zero()) continue;
            PartFn rho(labels);
            rho.at(i) = {n};
            Rational c(1, n);
            if (negate) c = -c;
            arg.add(rho, Cyclo(c) * label[i]);
        }
    }
    SymVec e = sym_exp_truncated(arg, order, labels);
    std::vector<SymVec> slices;
    for (int k = 0; k <= order; ++k) slices.push_back(degree_slice(e, k));
    return slices;
}

}  // namespace

std::shared_ptr<const std::vector<SymVec>> VertexContext::creation_slices(const CycloVec& label,
                                                                          bool negate,
                                                                          long order) const {
    std::string key = negate ? "-" : "+";
    for (const Cyclo& c : label) key += c.to_string() + "|";
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto& slot = creation_cache_[key];
    if (!slot || static_cast<long>(slot->size()) <= order) {
        long target = order;
        if (slot) target = std::max(order, 2 * static_cast<long>(slot->size()));
        slot = std::make_shared<const std::vector<SymVec>>(
            creation_series(xf_, label, static_cast<int>(target), negate));
    }
    return slot;
}

SymVec VertexContext::ann_slice(const CycloVec& label, const std::string& label_key, int k,
                                const PartFn& mono) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = ann_cache_.find(std::make_tuple(label_key, k, mono));
        if (it != ann_cache_.end()) return it->second;
    }
    SymVec mv;
    mv.add(mono, Cyclo(1));
    SymVec out = ann_series_coeff(xf_, label, k, true, mv);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return ann_cache_.emplace(std::make_tuple(label_key, k, mono), std::move(out)).first->second;
}

FockVec VertexContext::heis(long m, const CycloVec& label, const FockVec& v) const {
    if (m == 0) throw std::invalid_argument("heis: zero mode needs a lattice label");
    FockVec out;
    for (const auto& [alpha, s] : by_sector(v)) {
        SymVec w = apply_heis(xf_, m, label, s);
        for (const auto& [rho, c] : w.terms()) out.add(rho, alpha, c);
    }
    return out;
}

FockVec VertexContext::heis(long m, const LatticeVec& gamma, const FockVec& v) const {
    if (m == 0) return partial(gamma, v);
    return heis(m, gamma.label(), v);
}

FockVec VertexContext::partial(const LatticeVec& gamma, const FockVec& v) const {
    FockVec out;
    for (const auto& [k, c] : v.terms()) {
        long p = form_.pair(gamma, k.alpha);
        if (p != 0) out.add(k.rho, k.alpha, Cyclo(p) * c);
    }
    return out;
}

FockVec VertexContext::lattice_mul(const LatticeVec& beta, const FockVec& v) const {
    FockVec out;
    for (const auto& [k, c] : v.terms()) {
        int sign = eps_.eps(beta, k.alpha);
        out.add(k.rho, k.alpha + beta, sign < 0 ? -c : c);
    }
    return out;
}

std::vector<FockVec> VertexContext::half_vertex(HalfSide side, const CycloVec& label, int order,
                                                const FockVec& v) const {
    std::vector<FockVec> out(order + 1);
    bool negate = (side == HalfSide::EPlus || side == HalfSide::EMinus);
    bool creation = (side == HalfSide::HPlus || side == HalfSide::EPlus);
    if (creation) {
        auto slices_ptr = creation_slices(label, negate, order);
        const std::vector<SymVec>& slices = *slices_ptr;
        for (const auto& [alpha, s] : by_sector(v))
            for (int k = 0; k <= order; ++k) {
                SymVec res = slices[k] * s;
                for (const auto& [rho, c] : res.terms()) out[k].add(rho, alpha, c);
            }
    } else {
        for (const auto& [alpha, s] : by_sector(v))
            for (int k = 0; k <= order; ++k) {
                SymVec res = ann_series_coeff(xf_, label, k, negate, s);
                for (const auto& [rho, c] : res.terms()) out[k].add(rho, alpha, c);
            }
    }
    return out;
}

FockVec VertexContext::vertex(const LatticeVec& gamma, Half n, const FockVec& v) const {
    long q = form_.norm(gamma);
    if (((n.twice - q) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("vertex: mode not in Z + <g,g>/2");
    // X_n picks the z-power t = -n - <g,g>/2, an integer.
    long t = (-n.twice - q) / 2;
    CycloVec label = gamma.label();

    FockVec out;
    long max_create = 0;
    for (const auto& [k, c] : v.terms())
        max_create = std::max(max_create, t - form_.pair(gamma, k.alpha) + k.rho.norm());
    if (max_create < 0) return out;
    auto create_ptr = creation_slices(label, false, max_create);
    const std::vector<SymVec>& create = *create_ptr;
    std::string label_key;
    for (const Cyclo& c : label) label_key += c.to_string() + "|";

    for (const auto& [key, coeff] : v.terms()) {
        long s = form_.pair(gamma, key.alpha);
        int sign = eps_.eps(gamma, key.alpha);
        Cyclo base = sign < 0 ? -coeff : coeff;
        LatticeVec target = key.alpha + gamma;
        for (long km = 0; km <= key.rho.norm(); ++km) {
            long kp = t - s + km;
            if (kp < 0 || kp > max_create) continue;
            SymVec ann = ann_slice(label, label_key, static_cast<int>(km), key.rho);
            if (ann.is_zero()) continue;
            SymVec res = create[kp] * ann;
            for (const auto& [rho, c] : res.terms()) {
                // homogeneity: mode n shifts degree by exactly -n
                if (degree(rho, target) != degree(key.rho, key.alpha) - n)
                    throw std::runtime_error("vertex: degree bookkeeping violated");
                out.add(rho, target, base * c);
            }
        }
    }
    return out;
}

Cyclo VertexContext::inner(InnerCache& cache, const FockVec& u, const FockVec& v) const {
    Cyclo s;
    auto us = by_sector(u), vs = by_sector(v);
    for (const auto& [alpha, su] : us) {
        auto it = vs.find(alpha);
        if (it == vs.end()) continue;
        s += cache.inner(su, it->second);
    }
    return s;
}

Cyclo VertexContext::inner(const FockVec& u, const FockVec& v) const {
    InnerCache cache(xf_);
    return inner(cache, u, v);
}

// --- test basis --------------------------------------------------------------

std::vector<FockVec> fock_test_basis(const VertexContext& ctx, long degree_bound,
                                     long coord_bound) {
    int rank = ctx.rank();
    std::vector<LatticeVec> points;
    LatticeVec cur(rank);
    std::function<void(int)> rec = [&](int i) {
        if (i == rank) {
            if (ctx.form().norm(cur) <= 2 * degree_bound) points.push_back(cur);
            return;
        }
        for (long x = -coord_bound; x <= coord_bound; ++x) {
            cur.c[i] = x;
            rec(i + 1);
        }
        cur.c[i] = 0;
    };
    rec(0);

    std::vector<FockVec> basis;
    for (const auto& alpha : points) {
        long slack = degree_bound - ctx.form().norm(alpha) / 2;
        for (long d = 0; d <= slack; ++d)
            for (const auto& rho : enumerate_partfn(rank, static_cast<int>(d))) {
                FockVec v;
                v.add(rho, alpha, Cyclo(1));
                basis.push_back(std::move(v));
            }
    }
    return basis;
}

// --- OPE ---------------------------------------------------------------------

namespace {

Rational binomial(long e, long k) {
    Rational out(1);
    for (long t = 0; t < k; ++t) out *= Rational(e - t, t + 1);
    return out;
}

std::string describe_mismatch(const LatticeVec& a, const LatticeVec& b, long za, long zb,
                              const FockVec& v) {
    std::ostringstream os;
    os << "alpha=" << a.to_string() << " beta=" << b.to_string() << " z^" << za << " w^" << zb
       << " on " << (v.terms().empty() ? "0" : v.terms().begin()->first.rho.to_string('g') + "*" +
                                                  v.terms().begin()->first.alpha.to_string());
    return os.str();
}

}  // namespace

OpeReport ope_check(const VertexContext& ctx, const LatticeVec& alpha, const LatticeVec& beta,
                    long degree_bound) {
    OpeReport rep;
    const LatticeForm& form = ctx.form();
    long qa = form.norm(alpha), qb = form.norm(beta), e = form.pair(alpha, beta);
    long window = degree_bound + 2;
    rep.window = window;

    auto basis = fock_test_basis(ctx, degree_bound, 1);
    rep.vectors = static_cast<long>(basis.size());
    CycloVec la = alpha.label(), lb = beta.label();

    // Largest creation index reachable in the window, from the constraints
    // p = x - <a,mu> + i, q = y - <b,mu> + j with x = za - e + k, y = zb - k.
    long pair_bound_a = 0, pair_bound_b = 0;
    for (const FockVec& v : basis)
        for (const auto& [key, c] : v.terms()) {
            pair_bound_a = std::max(pair_bound_a, std::abs(form.pair(alpha, key.alpha)));
            pair_bound_b = std::max(pair_bound_b, std::abs(form.pair(beta, key.alpha)));
        }
    long kmax_global = window + degree_bound + pair_bound_b;
    long xmax = (e >= 0) ? window : window - e + kmax_global;
    long create_max =
        std::max({xmax + pair_bound_a + degree_bound, window + pair_bound_b + degree_bound, 0L});
    auto create_a_ptr = ctx.creation_slices(la, false, create_max);
    auto create_b_ptr = ctx.creation_slices(lb, false, create_max);
    const std::vector<SymVec>& create_a = *create_a_ptr;
    const std::vector<SymVec>& create_b = *create_b_ptr;

    for (const FockVec& v : basis) {
        // Per-term annihilation pieces e-_i(a) e-_j(b) . mono are shared by
        // every coefficient; the normal-ordered coefficient at (x, y) is
        // memoized since many (za, zb, k) triples land on the same pair.
        struct TermPre {
            LatticeVec target;
            Cyclo base;
            long sa, sb, deg;
            std::vector<std::vector<SymVec>> ann2;  // [i][j]
        };
        std::vector<TermPre> pres;
        for (const auto& [key, coeff] : v.terms()) {
            TermPre t;
            t.target = key.alpha + alpha + beta;
            int sign = ctx.cocycle().eps(alpha + beta, key.alpha);
            t.base = sign < 0 ? -coeff : coeff;
            t.sa = form.pair(alpha, key.alpha);
            t.sb = form.pair(beta, key.alpha);
            t.deg = key.rho.norm();
            SymVec mono;
            mono.add(key.rho, Cyclo(1));
            t.ann2.assign(t.deg + 1, std::vector<SymVec>(t.deg + 1));
            for (long i = 0; i <= t.deg; ++i) {
                SymVec ai = ann_series_coeff(ctx.xi_form(), la, static_cast<int>(i), true, mono);
                for (long j = 0; i + j <= t.deg; ++j)
                    t.ann2[i][j] = ann_series_coeff(ctx.xi_form(), lb, static_cast<int>(j), true, ai);
            }
            pres.push_back(std::move(t));
        }
        std::map<std::pair<long, long>, FockVec> nop_memo;
        auto nop_at = [&](long x, long y) -> const FockVec& {
            auto it = nop_memo.find({x, y});
            if (it != nop_memo.end()) return it->second;
            FockVec nop;
            for (const TermPre& t : pres) {
                for (long i = 0; i <= t.deg; ++i) {
                    long p = x - t.sa + i;
                    if (p < 0 || p > create_max) continue;
                    for (long j = 0; i + j <= t.deg; ++j) {
                        long qq = y - t.sb + j;
                        if (qq < 0 || qq > create_max) continue;
                        if (t.ann2[i][j].is_zero()) continue;
                        SymVec res = create_a[p] * (create_b[qq] * t.ann2[i][j]);
                        for (const auto& [rho, c2] : res.terms()) nop.add(rho, t.target, t.base * c2);
                    }
                }
            }
            return nop_memo.emplace(std::make_pair(x, y), std::move(nop)).first->second;
        };

        for (long zb = -window; zb <= window; ++zb) {
            Half m = Half(-2 * zb - qb);  // w-power zb = -m - qb/2
            FockVec wv = ctx.vertex(beta, m, v);
            for (long za = -window; za <= window; ++za) {
                Half n = Half(-2 * za - qa);
                FockVec lhs = ctx.vertex(alpha, n, wv);

                // RHS: eps(a,b) sum_k C(e,k) (-1)^k NOP_{za-e+k, zb-k}
                FockVec rhs;
                long kmax = 0;
                for (const auto& [key, c] : v.terms())
                    kmax = std::max(kmax, zb - form.pair(beta, key.alpha) + key.rho.norm());
                if (e >= 0) kmax = std::min(kmax, e);
                for (long k = 0; k <= kmax; ++k) {
                    Rational bc = binomial(e, k);
                    if (k % 2) bc = -bc;
                    if (bc.is_zero()) continue;
                    rhs = rhs + Cyclo(bc) * nop_at(za - e + k, zb - k);
                }
                int se = ctx.cocycle().eps(alpha, beta);
                if (se < 0) rhs = Cyclo(-1) * rhs;

                ++rep.tested_pairs;
                if (lhs != rhs && rep.mismatches.size() < 16)
                    rep.mismatches.push_back(describe_mismatch(alpha, beta, za, zb, v));
            }
        }
    }
    return rep;
}

// --- Clifford ----------------------------------------------------------------

CliffordReport clifford_check(const VertexContext& ctx, Half mode_bound, long degree_bound) {
    CliffordReport rep;
    if (!ctx.xi_form().is_trivial())
        throw std::invalid_argument("clifford_check: requires the trivial weight");
    int rank = ctx.rank();
    auto basis = fock_test_basis(ctx, degree_bound, 1);
    // modes live in Z + 1/2: odd half-units up to the bound
    std::vector<Half> modes;
    for (long t = -mode_bound.twice; t <= mode_bound.twice; ++t)
        if (((t % 2) + 2) % 2 == 1) modes.push_back(Half(t));

    auto anti = [&](const LatticeVec& g1, Half m, const LatticeVec& g2, Half n,
                    const FockVec& v) {
        return ctx.vertex(g1, m, ctx.vertex(g2, n, v)) + ctx.vertex(g2, n, ctx.vertex(g1, m, v));
    };

    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            LatticeVec gi = LatticeVec::unit(rank, i), gj = LatticeVec::unit(rank, j);
            for (Half m : modes)
                for (Half n : modes)
                    for (const FockVec& v : basis) {
                        ++rep.cases;
                        FockVec pp = anti(gi, m, gj, n, v);
                        if (!pp.is_zero() && rep.mismatches.size() < 16)
                            rep.mismatches.push_back("{X+_" + m.to_string() + "(g" +
                                                     std::to_string(i) + "), X+_" + n.to_string() +
                                                     "(g" + std::to_string(j) + ")} != 0");
                        FockVec mm = anti(-gi, m, -gj, n, v);
                        if (!mm.is_zero() && rep.mismatches.size() < 16)
                            rep.mismatches.push_back("{X-_" + m.to_string() + "(g" +
                                                     std::to_string(i) + "), X-_" + n.to_string() +
                                                     "(g" + std::to_string(j) + ")} != 0");
                        FockVec pm = anti(gi, m, -gj, n, v);
                        FockVec expect;
                        if (i == j && (m + n).twice == 0) expect = v;
                        if (pm != expect && rep.mismatches.size() < 16)
                            rep.mismatches.push_back("{X+_" + m.to_string() + "(g" +
                                                     std::to_string(i) + "), X-_" + n.to_string() +
                                                     "(g" + std::to_string(j) +
                                                     ")} != delta*id");
                    }
        }
    return rep;
}

// --- Schur states and character tables ----------------------------------------

LatticeVec omega_of(const PartFn& lambda) {
    LatticeVec w(lambda.labels());
    for (int i = 0; i < lambda.labels(); ++i) w.c[i] = part_length(lambda.at(i));
    return w;
}

FockVec schur_state(const VertexContext& ctx, const PartFn& lambda, const LatticeVec& alpha) {
    if (!ctx.xi_form().is_trivial())
        throw std::invalid_argument("schur_state: requires the trivial weight");
    int rank = ctx.rank();
    FockVec state = FockVec::lattice_point(rank, alpha);
    // product over gamma_0..gamma_r left to right: the gamma_r string acts
    // first; within a string the rightmost mode acts first.
    for (int i = rank - 1; i >= 0; --i) {
        const Partition& lam = lambda.at(i);
        long l = part_length(lam);
        if (l == 0) continue;
        long s = ctx.form().pair(LatticeVec::unit(rank, i), alpha);
        for (long j = l; j >= 1; --j) {
            // mode -lambda_j - (l - j) - s - 1/2
            Half mode(-2 * lam[j - 1] - 2 * (l - j) - 2 * s - 1);
            state = ctx.vertex(LatticeVec::unit(rank, i), mode, state);
        }
    }
    return state;
}

int WreathCharTable::col_index(const PartFn& mu) const {
    for (size_t j = 0; j < cols.size(); ++j)
        if (cols[j] == mu) return static_cast<int>(j);
    throw std::invalid_argument("col_index: unknown type");
}

WreathCharTable character_table(const Group& g, int n, TableRoute route) {
    WreathCharTable t;
    t.g = g;
    t.n = n;
    t.rows = enumerate_partfn(g->nc, n);
    t.cols = enumerate_partfn(g->nc, n);
    for (const auto& mu : t.cols) t.col_centralizer.push_back(wreath_centralizer(g, mu));

    XiForm xf = xi_trivial(g);
    InnerCache cache(xf);
    VertexContext ctx(xf);

    std::vector<SymVec> col_vecs;
    for (const auto& mu : t.cols) col_vecs.push_back(class_monomial_to_sym(g, mu));

    for (const auto& lambda : t.rows) {
        SymVec s_lambda = schur_sym(g, lambda);
        std::vector<Cyclo> row;
        if (route == TableRoute::inner_product) {
            for (const auto& cv : col_vecs) row.push_back(cache.inner(s_lambda, cv));
        } else {
            LatticeVec w = omega_of(lambda);
            FockVec state = schur_state(ctx, lambda, -w);
            FockVec target = FockVec::from_sym(s_lambda, LatticeVec(g->nc));
            Cyclo sign = ctx.inner(cache, state, target);
            if (!(sign == Cyclo(1)) && !(sign == Cyclo(-1)))
                throw std::runtime_error("character_table: schur state has non-unit norm");
            for (const auto& cv : col_vecs) {
                Cyclo val =
                    sign * ctx.inner(cache, state, FockVec::from_sym(cv, LatticeVec(g->nc)));
                row.push_back(val);
            }
        }
        t.values.push_back(std::move(row));
    }
    return t;
}

Cyclo character_value(const Group& g, const PartFn& lambda, const PartFn& mu, TableRoute route) {
    if (lambda.norm() != mu.norm())
        throw std::invalid_argument("character_value: size mismatch between label and type");
    WreathCharTable t = character_table(g, static_cast<int>(lambda.norm()), route);
    int r = -1;
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (t.rows[i] == lambda) r = static_cast<int>(i);
    if (r < 0) throw std::invalid_argument("character_value: unknown label");
    return t.values[r][t.col_index(mu)];
}

std::vector<std::string> table_orthogonality_failures(const WreathCharTable& t) {
    std::vector<std::string> fails;
    const Group& g = t.g;
    size_t nr = t.rows.size();
    std::vector<int> bar_index;
    for (const auto& mu : t.cols) bar_index.push_back(t.col_index(bar_type(g, mu)));

    // first: sum_mu Z_mu^{-1} chi[l][mu] chi[l'][mu-bar] = delta
    for (size_t a = 0; a < nr; ++a)
        for (size_t b = 0; b < nr; ++b) {
            Cyclo s;
            for (size_t j = 0; j < t.cols.size(); ++j)
                s += Cyclo(Rational(Integer(1), t.col_centralizer[j])) * t.values[a][j] *
                     t.values[b][bar_index[j]];
            if (!(s == Cyclo(a == b ? 1 : 0)))
                fails.push_back("row orthogonality fails at rows " + std::to_string(a) + "," +
                                std::to_string(b));
        }
    // second: sum_lambda chi[l][mu] chi[l][mu'-bar] = delta_{mu,mu'} Z_mu
    for (size_t i = 0; i < t.cols.size(); ++i)
        for (size_t j = 0; j < t.cols.size(); ++j) {
            Cyclo s;
            for (size_t a = 0; a < nr; ++a) s += t.values[a][i] * t.values[a][bar_index[j]];
            Cyclo expect = (i == j) ? Cyclo(Rational(t.col_centralizer[i])) : Cyclo(0);
            if (!(s == expect))
                fails.push_back("column orthogonality fails at cols " + std::to_string(i) + "," +
                                std::to_string(j));
        }
    return fails;
}

}  // namespace wvo
