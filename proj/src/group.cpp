#include "wvo/group.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wvo {

ClassFn::ClassFn(Group g, CycloVec v) : g_(std::move(g)), v_(std::move(v)) {
    if (static_cast<int>(v_.size()) != g_->nc)
        throw std::invalid_argument("ClassFn: value count != number of classes");
}

ClassFn ClassFn::dual() const {
    CycloVec w(v_.size());
    for (int c = 0; c < size(); ++c) w[c] = v_[g_->inv_class[c]];
    return ClassFn(g_, std::move(w));
}

ClassFn operator+(const ClassFn& a, const ClassFn& b) {
    CycloVec w(a.v_.size());
    for (size_t c = 0; c < w.size(); ++c) w[c] = a.v_[c] + b.v_[c];
    return ClassFn(a.g_, std::move(w));
}

ClassFn operator-(const ClassFn& a, const ClassFn& b) {
    CycloVec w(a.v_.size());
    for (size_t c = 0; c < w.size(); ++c) w[c] = a.v_[c] - b.v_[c];
    return ClassFn(a.g_, std::move(w));
}

ClassFn operator*(const Cyclo& s, const ClassFn& a) {
    CycloVec w(a.v_.size());
    for (size_t c = 0; c < w.size(); ++c) w[c] = s * a.v_[c];
    return ClassFn(a.g_, std::move(w));
}

ClassFn operator*(const ClassFn& a, const ClassFn& b) {
    CycloVec w(a.v_.size());
    for (size_t c = 0; c < w.size(); ++c) w[c] = a.v_[c] * b.v_[c];
    return ClassFn(a.g_, std::move(w));
}

Cyclo standard_pairing(const ClassFn& f, const ClassFn& g) {
    if (f.group() != g.group()) throw std::invalid_argument("standard_pairing: group mismatch");
    const auto& gd = *f.group();
    Cyclo s;
    for (int c = 0; c < gd.nc; ++c) {
        if (f.at(c).is_zero()) continue;
        const Cyclo& gv = g.at(gd.inv_class[c]);
        if (gv.is_zero()) continue;
        s += Cyclo(Rational(1, gd.zeta[c])) * f.at(c) * gv;
    }
    return s;
}

CycloVec ClassFn::irrep_coefficients() const {
    CycloVec out(g_->nc);
    for (int i = 0; i < g_->nc; ++i) out[i] = standard_pairing(*this, ClassFn::irreducible(g_, i));
    return out;
}

XiForm::XiForm(Group g, ClassFn xi) : g_(std::move(g)), xi_(std::move(xi)) {
    if (!xi_.is_self_dual()) throw std::invalid_argument("XiForm: xi is not self-dual");
    int n = g_->nc;
    a_.assign(n, CycloVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            a_[i][j] = pair(ClassFn::irreducible(g_, i), ClassFn::irreducible(g_, j));
            if (j > i) {
                Cyclo mirrored = pair(ClassFn::irreducible(g_, j), ClassFn::irreducible(g_, i));
                if (!(mirrored == a_[i][j]))
                    throw std::runtime_error("XiForm: Gram matrix not symmetric");
                a_[j][i] = a_[i][j];
            }
        }
    trivial_ = true;
    for (int c = 0; c < n; ++c)
        if (!(xi_.at(c) == Cyclo(1))) trivial_ = false;
}

Cyclo XiForm::pair(const ClassFn& f, const ClassFn& g) const {
    if (f.group() != g_ || g.group() != g_) throw std::invalid_argument("XiForm::pair: group mismatch");
    Cyclo s;
    for (int c = 0; c < g_->nc; ++c) {
        if (xi_.at(c).is_zero() || f.at(c).is_zero()) continue;
        const Cyclo& gv = g.at(g_->inv_class[c]);
        if (gv.is_zero()) continue;
        s += Cyclo(Rational(1, g_->zeta[c])) * xi_.at(c) * f.at(c) * gv;
    }
    return s;
}

Cyclo XiForm::pair_coeffs(const CycloVec& s, const CycloVec& t) const {
    Cyclo out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i].is_zero()) continue;
        for (size_t j = 0; j < t.size(); ++j) {
            if (t[j].is_zero()) continue;
            out += s[i] * t[j] * a_[i][j];
        }
    }
    return out;
}

XiForm xi_trivial(const Group& g) { return XiForm(g, ClassFn::irreducible(g, 0)); }

XiForm xi_mckay(const Group& g) {
    if (g->pi.empty())
        throw std::invalid_argument("xi_mckay: group has no natural 2-dim character");
    CycloVec v(g->nc);
    for (int c = 0; c < g->nc; ++c) v[c] = Cyclo(2) - g->pi[c];
    return XiForm(g, ClassFn(g, std::move(v)));
}

XiForm make_xi(const Group& g, const std::string& selector) {
    if (selector == "trivial") return xi_trivial(g);
    if (selector == "mckay") return xi_mckay(g);
    throw std::invalid_argument("make_xi: unknown selector '" + selector + "'");
}

EigenReport mckay_eigencheck(const XiForm& xf) {
    const auto& g = *xf.group();
    EigenReport rep;
    rep.all_ok = true;
    for (int c = 0; c < g.nc; ++c) {
        Cyclo lam = xf.xi().at(c);
        rep.eigenvalues.push_back(lam);
        bool ok = true;
        for (int i = 0; i < g.nc && ok; ++i) {
            Cyclo lhs;
            for (int j = 0; j < g.nc; ++j) lhs += xf.a(i, j) * g.chi[j][c];
            if (lhs != lam * g.chi[i][c]) ok = false;
        }
        rep.column_ok.push_back(ok);
        if (!ok) rep.all_ok = false;
    }
    return rep;
}

namespace {

// Row echelon over the cyclotomic field; returns rank and optionally a basis
// of the kernel.
long cyclo_rank(std::vector<CycloVec> m, std::vector<CycloVec>* kernel) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    std::vector<long> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        Cyclo inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] = inv * m[rank][j];
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Cyclo f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        pivot_col.push_back(static_cast<long>(col));
        ++rank;
    }
    if (kernel) {
        kernel->clear();
        std::vector<bool> is_pivot(cols, false);
        for (long c : pivot_col) is_pivot[c] = true;
        for (size_t free_col = 0; free_col < cols; ++free_col) {
            if (is_pivot[free_col]) continue;
            CycloVec v(cols);
            v[free_col] = Cyclo(1);
            for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
            kernel->push_back(std::move(v));
        }
    }
    return static_cast<long>(rank);
}

}  // namespace

RadicalReport radical_check(const XiForm& xf) {
    const auto& g = *xf.group();
    RadicalReport rep;
    rep.delta_in_kernel = true;
    for (int i = 0; i < g.nc; ++i) {
        Cyclo s;
        for (int j = 0; j < g.nc; ++j) s += xf.a(i, j) * Cyclo(g.degrees[j]);
        if (!s.is_zero()) rep.delta_in_kernel = false;
    }
    std::vector<CycloVec> kernel;
    cyclo_rank(xf.A(), &kernel);
    rep.kernel_dim = static_cast<long>(kernel.size());
    if (rep.kernel_dim == 1) rep.kernel_basis = kernel[0];
    return rep;
}

CycloVec class_label_coefficients(const Group& g, int c) {
    CycloVec out(g->nc);
    int cinv = g->inv_class[c];
    for (int i = 0; i < g->nc; ++i) out[i] = g->chi[i][cinv];
    return out;
}

CycloVec irrep_label_in_class_basis(const Group& g, int i) {
    CycloVec out(g->nc);
    for (int c = 0; c < g->nc; ++c) out[c] = Cyclo(Rational(1, g->zeta[c])) * g->chi[i][c];
    return out;
}

// ---------------------------------------------------------------------------
// Construction of GroupData
// ---------------------------------------------------------------------------

namespace {

using Row = CycloVec;

Cyclo row_pairing(const GroupData& g, const Row& f, const Row& h) {
    Cyclo s;
    for (int c = 0; c < g.nc; ++c) {
        if (f[c].is_zero()) continue;
        const Cyclo& hv = h[g.inv_class[c]];
        if (hv.is_zero()) continue;
        s += Cyclo(Rational(1, g.zeta[c])) * f[c] * hv;
    }
    return s;
}

void fill_class_data(GroupData& g) {
    const CayleyGroup& cg = *g.elements;
    g.nc = cg.num_classes();
    g.zeta.clear();
    g.class_size.clear();
    g.class_elt_order.clear();
    g.inv_class.clear();
    for (int c = 0; c < g.nc; ++c) {
        g.zeta.push_back(cg.centralizer_order(c));
        g.class_size.push_back(static_cast<long>(cg.class_members(c).size()));
        g.class_elt_order.push_back(cg.class_element_order(c));
        g.inv_class.push_back(cg.inverse_class(c));
    }
    g.exponent = cg.exponent();
}

// Degree-then-lex canonical order, trivial character first.
void sort_rows(GroupData& g, std::vector<Row>& rows) {
    std::vector<std::pair<std::string, Row>> keyed;
    keyed.reserve(rows.size());
    for (Row& r : rows) {
        bool trivial = std::all_of(r.begin(), r.end(), [](const Cyclo& v) { return v == Cyclo(1); });
        std::ostringstream os;
        os << (trivial ? "0" : "1") << "|";
        std::string deg = r[0].to_rational().to_string();
        os << std::string(12 - std::min<size_t>(12, deg.size()), '0') << deg << "|";
        for (const Cyclo& v : r) os << v.embedded(g.exponent).to_string() << "#";
        keyed.emplace_back(os.str(), std::move(r));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.clear();
    for (auto& kv : keyed) rows.push_back(std::move(kv.second));
}

void validate_table(const GroupData& g) {
    int n = g.nc;
    if (static_cast<int>(g.chi.size()) != n)
        throw std::runtime_error(g.descriptor + ": wrong number of irreducible characters");
    Integer sumsq(0);
    for (int i = 0; i < n; ++i) {
        if (!g.chi[i][0].is_integer() || g.chi[i][0].to_rational().sign() <= 0)
            throw std::runtime_error(g.descriptor + ": bad character degree");
        Integer d = g.chi[i][0].to_integer();
        sumsq += d * d;
    }
    if (sumsq != Integer(g.elements->order()))
        throw std::runtime_error(g.descriptor + ": sum of squared degrees != |G|");
    for (int c = 0; c < n; ++c)
        if (!(g.chi[0][c] == Cyclo(1)))
            throw std::runtime_error(g.descriptor + ": first character not trivial");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(row_pairing(g, g.chi[i], g.chi[j]) == Cyclo(i == j ? 1 : 0)))
                throw std::runtime_error(g.descriptor + ": row orthogonality failed");
    for (int c = 0; c < n; ++c)
        for (int cp = 0; cp < n; ++cp) {
            Cyclo s;
            for (int i = 0; i < n; ++i) s += g.chi[i][cp] * g.chi[i][g.inv_class[c]];
            if (!(s == Cyclo(c == cp ? g.zeta[c] : 0)))
                throw std::runtime_error(g.descriptor + ": column orthogonality failed");
        }
}

// --- subgroup helpers on the Cayley table ----------------------------------

std::vector<int> subgroup_closure(const CayleyGroup& cg, const std::vector<int>& gens) {
    std::vector<char> in(cg.order(), 0);
    std::vector<int> members{cg.identity()};
    in[cg.identity()] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            members.push_back(g);
        }
    for (size_t head = 0; head < members.size(); ++head)
        for (size_t j = 0; j < members.size(); ++j) {
            int p = cg.mul(members[head], members[j]);
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
            }
            p = cg.mul(members[j], members[head]);
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> commutator_subgroup(const CayleyGroup& cg) {
    std::vector<int> comms;
    for (int x = 0; x < cg.order(); ++x)
        for (int y = 0; y < cg.order(); ++y)
            comms.push_back(cg.mul(cg.mul(x, y), cg.mul(cg.inverse(x), cg.inverse(y))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(cg, comms);
}

// All 1-dimensional characters, built on the abelianization G/[G,G] with
// integer exponent arithmetic (values are zeta_E^a, E = exponent of the
// quotient), then lifted to class rows.
std::vector<Row> one_dim_characters(const GroupData& g) {
    const CayleyGroup& cg = *g.elements;
    std::vector<int> k = commutator_subgroup(cg);
    std::vector<char> in_k(cg.order(), 0);
    for (int e : k) in_k[e] = 1;

    // Cosets of K: representative-indexed quotient group.
    std::vector<int> coset_of(cg.order(), -1);
    std::vector<int> reps;
    for (int e = 0; e < cg.order(); ++e) {
        if (coset_of[e] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int h : k) coset_of[cg.mul(e, h)] = id;
    }
    int q = static_cast<int>(reps.size());
    auto qmul = [&](int a, int b) { return coset_of[cg.mul(reps[a], reps[b])]; };
    int qid = coset_of[cg.identity()];

    auto qorder = [&](int a) {
        int x = a, n = 1;
        while (x != qid) {
            x = qmul(x, a);
            ++n;
        }
        return n;
    };
    long E = 1;
    for (int a = 0; a < q; ++a) E = std::lcm(E, static_cast<long>(qorder(a)));

    // Characters as exponent vectors over Q, extended one generator at a
    // time: chi'(g) solves d*x = chi(g^d) (mod E), giving d extensions.
    std::vector<char> in_h(q, 0);
    in_h[qid] = 1;
    std::vector<int> h_members{qid};
    std::vector<std::vector<long>> chars{std::vector<long>(q, 0)};
    for (int gen = 0; gen < q; ++gen) {
        if (in_h[gen]) continue;
        int d = 1, p = gen;
        while (!in_h[p]) {
            p = qmul(p, gen);
            ++d;
        }
        // p = gen^d is in H
        std::vector<std::vector<long>> next;
        for (const auto& chi : chars) {
            long a = chi[p] % E;
            if (a % d != 0) throw std::runtime_error("one_dim_characters: extension failed");
            for (long t = 0; t < d; ++t) {
                long x = (a / d + t * (E / d)) % E;
                std::vector<long> ext(q, -1);
                int gp = qid;
                for (int j = 0; j < d; ++j) {
                    for (int h : h_members) ext[qmul(h, gp)] = (chi[h] + j * x) % E;
                    gp = qmul(gp, gen);
                }
                next.push_back(std::move(ext));
            }
        }
        chars = std::move(next);
        std::vector<int> new_members;
        for (int e = 0; e < q; ++e)
            if (chars[0][e] >= 0) {
                in_h[e] = 1;
                new_members.push_back(e);
            }
        h_members = std::move(new_members);
    }

    std::vector<Row> rows;
    for (const auto& chi : chars) {
        Row r(g.nc);
        for (int c = 0; c < g.nc; ++c)
            r[c] = Cyclo::zeta(E, chi[coset_of[cg.class_rep(c)]]);
        rows.push_back(std::move(r));
    }
    return rows;
}

// Characters induced from cyclic subgroups <x>, x ranging over class
// representatives. Used as a stuck-breaker for the generative table search;
// every value is exact.
std::vector<Row> cyclic_induced_characters(const GroupData& g) {
    const CayleyGroup& cg = *g.elements;
    std::vector<Row> rows;
    for (int c0 = 1; c0 < g.nc; ++c0) {
        int x = cg.class_rep(c0);
        int m = cg.element_order(x);
        std::vector<int> dlog(cg.order(), -1);
        int cur = cg.identity();
        for (int j = 0; j < m; ++j) {
            dlog[cur] = j;
            cur = cg.mul(cur, x);
        }
        for (int lam = 0; lam < m; ++lam) {
            Row r(g.nc, Cyclo(0));
            for (int c = 0; c < g.nc; ++c) {
                int t = cg.class_rep(c);
                Cyclo s;
                for (int y = 0; y < cg.order(); ++y) {
                    int z = cg.mul(cg.mul(cg.inverse(y), t), y);
                    if (dlog[z] >= 0) s += Cyclo::zeta(m, static_cast<long>(lam) * dlog[z]);
                }
                r[c] = Cyclo(Rational(1, m)) * s;
            }
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

// --- generative character table --------------------------------------------
//
// Maintains a growing set of found irreducible rows. Candidates are genuine
// characters: the seeds, pairwise products, Sym^2/Lambda^2 via the class
// power map, Galois twists, and (when progress stalls) characters induced
// from cyclic subgroups. A candidate reduced by the found irreducibles with
// remainder of norm 1 is a new irreducible. Guarded by an iteration cap.

struct CharGen {
    const GroupData& g;
    const CayleyGroup& cg;
    std::vector<Row> found;

    explicit CharGen(const GroupData& gd) : g(gd), cg(*gd.elements) {
        found.push_back(Row(g.nc, Cyclo(1)));
    }

    Cyclo pairing(const Row& a, const Row& b) const { return row_pairing(g, a, b); }

    Row sym2(const Row& f) const {
        Row out(g.nc);
        for (int c = 0; c < g.nc; ++c)
            out[c] = Cyclo(Rational(1, 2)) * (f[c] * f[c] + f[cg.class_of_power(c, 2)]);
        return out;
    }
    Row alt2(const Row& f) const {
        Row out(g.nc);
        for (int c = 0; c < g.nc; ++c)
            out[c] = Cyclo(Rational(1, 2)) * (f[c] * f[c] - f[cg.class_of_power(c, 2)]);
        return out;
    }
    Row product(const Row& a, const Row& b) const {
        Row out(g.nc);
        for (int c = 0; c < g.nc; ++c) out[c] = a[c] * b[c];
        return out;
    }
    Row galois_twist(const Row& f, long k) const {
        Row out(g.nc);
        for (int c = 0; c < g.nc; ++c) out[c] = f[c].embedded(g.exponent).galois(k);
        return out;
    }

    static bool is_zero_row(const Row& f) {
        return std::all_of(f.begin(), f.end(), [](const Cyclo& v) { return v.is_zero(); });
    }

    Row reduce(Row f) const {
        for (const Row& irr : found) {
            Cyclo m = pairing(f, irr);
            if (m.is_zero()) continue;
            Rational mr = m.to_rational();
            if (!mr.is_integer() || mr.sign() < 0)
                throw std::runtime_error(g.descriptor + ": candidate is not a genuine character");
            for (int c = 0; c < g.nc; ++c) f[c] = f[c] - m * irr[c];
        }
        return f;
    }

    bool consider(const Row& cand) {
        if (static_cast<int>(found.size()) == g.nc) return false;
        Row rem = reduce(cand);
        if (is_zero_row(rem)) return false;
        Rational n = pairing(rem, rem).to_rational();
        if (n == Rational(1)) {
            if (rem[0].to_rational().sign() <= 0)
                throw std::runtime_error(g.descriptor + ": norm-1 remainder with nonpositive degree");
            found.push_back(rem);
            return true;
        }
        // Peel a repeated constituent m*chi when the norm is m^2.
        if (n.is_integer()) {
            Integer ni = n.to_integer();
            for (long m = 2; Integer(m * m) <= ni; ++m) {
                if (Integer(m * m) != ni) continue;
                Row scaled(g.nc);
                for (int c = 0; c < g.nc; ++c) scaled[c] = Cyclo(Rational(1, m)) * rem[c];
                const Rational deg = scaled[0].to_rational();
                if (pairing(scaled, scaled) == Cyclo(1) && deg.is_integer() && deg.sign() > 0) {
                    found.push_back(scaled);
                    return true;
                }
            }
        }
        return false;
    }

    void run(const std::vector<Row>& seeds, int max_rounds = 40) {
        std::vector<long> galois_ks;
        for (long k = 2; k < g.exponent; ++k)
            if (std::gcd(k, g.exponent) == 1) galois_ks.push_back(k);

        for (const Row& r : one_dim_characters(g)) consider(r);
        for (const Row& s : seeds) consider(s);

        bool tried_induction = false;
        for (int round = 0; round < max_rounds && static_cast<int>(found.size()) < g.nc; ++round) {
            bool progress = false;
            size_t nf = found.size();
            for (size_t i = 0; i < nf && static_cast<int>(found.size()) < g.nc; ++i) {
                for (size_t j = i; j < nf; ++j) progress |= consider(product(found[i], found[j]));
                progress |= consider(sym2(found[i]));
                progress |= consider(alt2(found[i]));
                for (long k : galois_ks) progress |= consider(galois_twist(found[i], k));
                for (const Row& s : seeds) progress |= consider(product(found[i], s));
            }
            if (!progress) {
                if (tried_induction) break;
                tried_induction = true;
                for (const Row& r : cyclic_induced_characters(g)) consider(r);
            }
        }
        if (static_cast<int>(found.size()) != g.nc)
            throw std::runtime_error(g.descriptor + ": character table generation did not converge");
    }
};

GroupData make_group_data(std::string descriptor, std::shared_ptr<const CayleyGroup> cg) {
    GroupData g;
    g.descriptor = std::move(descriptor);
    g.elements = std::move(cg);
    fill_class_data(g);
    if (g.elements->has_matrices()) g.pi = g.elements->trace_by_class();
    return g;
}

void finalize_table(GroupData& g, std::vector<Row> rows) {
    sort_rows(g, rows);
    g.chi = std::move(rows);
    g.degrees.clear();
    for (int i = 0; i < g.nc; ++i) g.degrees.push_back(g.chi[i][0].to_long());
    validate_table(g);
}

GroupData build_trivial() {
    auto cg = std::make_shared<CayleyGroup>(CayleyGroup::from_generators({Mat2::identity()}, 1));
    GroupData g = make_group_data("trivial", cg);
    finalize_table(g, {Row{Cyclo(1)}});
    return g;
}

// Discrete log of x base gen; -1 if x is not a power of gen.
long dlog(const CayleyGroup& cg, int gen, int x) {
    int cur = cg.identity();
    for (int k = 0; k < cg.order(); ++k) {
        if (cur == x) return k;
        cur = cg.mul(cur, gen);
    }
    return -1;
}

GroupData build_cyclic(long m) {
    if (m == 1) {
        GroupData g = build_trivial();
        g.descriptor = "cyclic:1";
        return g;
    }
    Mat2 gen{Cyclo::zeta(m), Cyclo(0), Cyclo(0), Cyclo::zeta(m, -1)};
    auto cg = std::make_shared<CayleyGroup>(CayleyGroup::from_generators({gen}, m));
    if (cg->order() != m) throw std::runtime_error("cyclic: unexpected closure size");
    GroupData g = make_group_data("cyclic:" + std::to_string(m), cg);

    int gen_idx = -1;
    for (int i = 0; i < cg->order() && gen_idx < 0; ++i)
        if (cg->element_order(i) == m) gen_idx = i;
    if (gen_idx < 0) throw std::runtime_error("cyclic: no generator found");
    std::vector<long> k_of_class(g.nc);
    for (int c = 0; c < g.nc; ++c) {
        long k = dlog(*cg, gen_idx, cg->class_rep(c));
        if (k < 0) throw std::runtime_error("cyclic: dlog failed");
        k_of_class[c] = k;
    }
    std::vector<Row> rows;
    for (long j = 0; j < m; ++j) {
        Row r(g.nc);
        for (int c = 0; c < g.nc; ++c) r[c] = Cyclo::zeta(m, j * k_of_class[c]);
        rows.push_back(std::move(r));
    }
    finalize_table(g, std::move(rows));
    return g;
}

GroupData build_binary_dihedral(long total_order) {
    if (total_order % 4 != 0 || total_order < 8)
        throw std::invalid_argument("bd: order must be 4m with m >= 2");
    long m = total_order / 4;
    long n2 = 2 * m;
    Mat2 a{Cyclo::zeta(n2), Cyclo(0), Cyclo(0), Cyclo::zeta(n2, -1)};
    Mat2 b{Cyclo(0), Cyclo(1), Cyclo(-1), Cyclo(0)};
    long conductor = std::lcm(n2, 4L);
    auto cg = std::make_shared<CayleyGroup>(CayleyGroup::from_generators({a, b}, conductor));
    if (cg->order() != total_order) throw std::runtime_error("bd: unexpected closure size");
    GroupData g = make_group_data("bd:" + std::to_string(total_order), cg);

    int a_idx = -1, b_idx = -1;
    for (int i = 0; i < cg->order(); ++i) {
        const Mat2& mm = cg->matrix(i);
        if (mm.b.is_zero() && mm.c.is_zero() && mm.a == a.a) a_idx = i;
        if (mm.a.is_zero() && mm.d.is_zero() && mm.b == Cyclo(1)) b_idx = i;
    }
    if (a_idx < 0 || b_idx < 0) throw std::runtime_error("bd: generators not located");
    std::vector<long> apow(cg->order(), -1);
    {
        int cur = cg->identity();
        for (long k = 0; k < n2; ++k) {
            apow[cur] = k;
            cur = cg->mul(cur, a_idx);
        }
    }
    auto eval_elem = [&](int x, const std::function<Cyclo(bool, long)>& f) {
        if (apow[x] >= 0) return f(false, apow[x]);
        int y = cg->mul(cg->inverse(b_idx), x);
        if (apow[y] < 0) throw std::runtime_error("bd: normal form failed");
        return f(true, apow[y]);
    };
    auto row_from = [&](const std::function<Cyclo(bool, long)>& f) {
        Row r(g.nc);
        for (int c = 0; c < g.nc; ++c) {
            r[c] = eval_elem(cg->class_rep(c), f);
            for (int e : cg->class_members(c))
                if (!(eval_elem(e, f) == r[c]))
                    throw std::runtime_error("bd: character not constant on a class");
        }
        return r;
    };

    std::vector<Row> rows;
    if (m % 2 == 0) {
        for (int s : {1, -1})
            for (int t : {1, -1})
                rows.push_back(row_from([&](bool has_b, long k) {
                    return Cyclo((k % 2 == 0 ? 1 : s) * (has_b ? t : 1));
                }));
    } else {
        for (int t : {1, -1})
            rows.push_back(row_from([&](bool has_b, long) { return Cyclo(has_b ? t : 1); }));
        for (int u : {1, -1})
            rows.push_back(row_from([&](bool has_b, long k) {
                Cyclo v(k % 2 == 0 ? 1 : -1);
                if (has_b) v = v * Cyclo::zeta(4, u);
                return v;
            }));
    }
    for (long j = 1; j < m; ++j)
        rows.push_back(row_from([&](bool has_b, long k) {
            if (has_b) return Cyclo(0);
            return Cyclo::zeta(n2, j * k) + Cyclo::zeta(n2, -j * k);
        }));
    finalize_table(g, std::move(rows));
    return g;
}

Mat2 quat_mat(const Cyclo& w, const Cyclo& x, const Cyclo& y, const Cyclo& z) {
    Cyclo i = Cyclo::zeta(4);
    return {w + x * i, y + z * i, Cyclo(0) - y + z * i, w - x * i};
}

GroupData build_exceptional(const std::string& which) {
    Cyclo half(Rational(1, 2));
    Cyclo mhalf(Rational(-1, 2));
    Mat2 quat_i = quat_mat(Cyclo(0), Cyclo(1), Cyclo(0), Cyclo(0));
    Mat2 omega = quat_mat(mhalf, half, half, half);  // (-1+i+j+k)/2, order 3

    std::vector<Mat2> gens;
    long conductor = 4;
    int expect_order = 0, expect_classes = 0;
    if (which == "bt") {
        gens = {quat_i, omega};
        expect_order = 24;
        expect_classes = 7;
    } else if (which == "bo") {
        Mat2 s8{Cyclo::zeta(8), Cyclo(0), Cyclo(0), Cyclo::zeta(8, -1)};
        gens = {s8, omega};
        conductor = 8;
        expect_order = 48;
        expect_classes = 8;
    } else if (which == "bi") {
        Cyclo z5 = Cyclo::zeta(5);
        Cyclo sqrt5 = z5 - Cyclo::zeta(5, 2) - Cyclo::zeta(5, 3) + Cyclo::zeta(5, 4);
        Cyclo phi = half * (Cyclo(1) + sqrt5);  // golden ratio
        Cyclo phinv = phi - Cyclo(1);
        Mat2 s10 = quat_mat(half * phi, half * phinv, half, Cyclo(0));  // order 10
        gens = {omega, s10};
        conductor = 20;
        expect_order = 120;
        expect_classes = 9;
    } else {
        throw std::invalid_argument("unknown exceptional group '" + which + "'");
    }
    auto cg = std::make_shared<CayleyGroup>(CayleyGroup::from_generators(gens, conductor));
    if (cg->order() != expect_order)
        throw std::runtime_error(which + ": unexpected closure size " + std::to_string(cg->order()));
    GroupData g = make_group_data(which, cg);
    if (g.nc != expect_classes) throw std::runtime_error(which + ": unexpected class count");

    CharGen gen(g);
    gen.run({g.pi});
    finalize_table(g, std::move(gen.found));
    return g;
}

GroupData build_from_cayley_table(std::vector<std::vector<int>> table, const std::string& name) {
    auto cg = std::make_shared<CayleyGroup>(CayleyGroup::from_table(std::move(table)));
    GroupData g = make_group_data(name, cg);
    CharGen gen(g);
    Row conj(g.nc), reg(g.nc, Cyclo(0));
    for (int c = 0; c < g.nc; ++c) conj[c] = Cyclo(g.zeta[c]);
    reg[0] = Cyclo(cg->order());
    gen.run({conj, reg});
    finalize_table(g, std::move(gen.found));
    return g;
}

std::vector<std::vector<int>> read_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cayley: cannot open '" + path + "'");
    int n;
    if (!(in >> n) || n <= 0) throw std::invalid_argument("cayley: bad element count");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> t[i][j]) || t[i][j] < 0 || t[i][j] >= n)
                throw std::invalid_argument("cayley: bad table entry");
    return t;
}

std::map<std::string, Group> g_group_cache;
std::mutex g_group_mutex;

}  // namespace

Group build_group_from_table(std::vector<std::vector<int>> table, const std::string& name) {
    return std::make_shared<const GroupData>(build_from_cayley_table(std::move(table), name));
}

Group build_group(const std::string& spec) {
    {
        std::lock_guard<std::mutex> lock(g_group_mutex);
        auto it = g_group_cache.find(spec);
        if (it != g_group_cache.end()) return it->second;
    }
    GroupData g;
    if (spec == "trivial") {
        g = build_trivial();
    } else if (spec.rfind("cyclic:", 0) == 0) {
        long m = std::stol(spec.substr(7));
        if (m < 1) throw std::invalid_argument("cyclic: order must be positive");
        g = build_cyclic(m);
    } else if (spec.rfind("bd:", 0) == 0) {
        g = build_binary_dihedral(std::stol(spec.substr(3)));
    } else if (spec == "bt" || spec == "bo" || spec == "bi") {
        g = build_exceptional(spec);
    } else if (spec.rfind("cayley:", 0) == 0) {
        g = build_from_cayley_table(read_cayley_file(spec.substr(7)), spec);
    } else {
        throw std::invalid_argument("build_group: unknown descriptor '" + spec + "'");
    }
    auto sp = std::make_shared<const GroupData>(std::move(g));
    std::lock_guard<std::mutex> lock(g_group_mutex);
    g_group_cache.emplace(spec, sp);
    return sp;
}

}  // namespace wvo
