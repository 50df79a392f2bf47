#include "wvo/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace wvo {

Cyclo SymVec::at(const PartFn& rho) const {
    auto it = t_.find(rho);
    return it == t_.end() ? Cyclo(0) : it->second;
}

void SymVec::add(const PartFn& rho, const Cyclo& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(rho, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

long SymVec::max_degree() const {
    long d = 0;
    for (const auto& [rho, c] : t_) d = std::max(d, rho.norm());
    return d;
}

SymVec operator+(const SymVec& a, const SymVec& b) {
    SymVec out = a;
    for (const auto& [rho, c] : b.t_) out.add(rho, c);
    return out;
}

SymVec operator-(const SymVec& a, const SymVec& b) {
    SymVec out = a;
    for (const auto& [rho, c] : b.t_) out.add(rho, -c);
    return out;
}

SymVec operator*(const Cyclo& s, const SymVec& a) {
    SymVec out;
    if (s.is_zero()) return out;
    for (const auto& [rho, c] : a.t_) out.add(rho, s * c);
    return out;
}

namespace {

PartFn merge_monomials(const PartFn& a, const PartFn& b) {
    PartFn out = a;
    for (int x = 0; x < b.labels(); ++x) {
        auto& parts = out.at(x);
        parts.insert(parts.end(), b.at(x).begin(), b.at(x).end());
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }
    return out;
}

}  // namespace

SymVec operator*(const SymVec& a, const SymVec& b) {
    SymVec out;
    for (const auto& [ra, ca] : a.t_)
        for (const auto& [rb, cb] : b.t_) out.add(merge_monomials(ra, rb), ca * cb);
    return out;
}

SymVec SymVec::truncated(long max_deg) const {
    SymVec out;
    for (const auto& [rho, c] : t_)
        if (rho.norm() <= max_deg) out.add(rho, c);
    return out;
}

PartFn with_part(PartFn rho, int label, int n) {
    auto& parts = rho.at(label);
    parts.insert(std::upper_bound(parts.begin(), parts.end(), n, std::greater<int>()), n);
    return rho;
}

PartFn without_part(PartFn rho, int label, int n) {
    auto& parts = rho.at(label);
    auto it = std::find(parts.begin(), parts.end(), n);
    if (it == parts.end()) throw std::invalid_argument("without_part: part not present");
    parts.erase(it);
    return rho;
}

SymVec apply_heis(const XiForm& xf, long m, const CycloVec& label, const SymVec& v) {
    SymVec out;
    if (m == 0) return out;
    int nl = xf.group()->nc;
    if (m < 0) {
        long n = -m;
        for (int i = 0; i < nl; ++i) {
            if (label[i].is_zero()) continue;
            for (const auto& [rho, c] : v.terms())
                out.add(with_part(rho, i, static_cast<int>(n)), label[i] * c);
        }
        return out;
    }
    // Derivation: delete one factor a_{-m}(gamma_j) with coefficient
    // m * multiplicity * <label, gamma_j>_xi.
    CycloVec t(nl);
    for (int j = 0; j < nl; ++j)
        for (int i = 0; i < nl; ++i)
            if (!label[i].is_zero()) t[j] += label[i] * xf.a(i, j);
    for (const auto& [rho, c] : v.terms()) {
        for (int j = 0; j < nl; ++j) {
            if (t[j].is_zero()) continue;
            const auto& parts = rho.at(j);
            long mult = std::count(parts.begin(), parts.end(), static_cast<int>(m));
            if (mult == 0) continue;
            out.add(without_part(rho, j, static_cast<int>(m)), Cyclo(m * mult) * t[j] * c);
        }
    }
    return out;
}

Cyclo InnerCache::inner(const PartFn& a, const PartFn& b) {
    if (a.norm() != b.norm()) return Cyclo(0);
    if (a.norm() == 0) return Cyclo(1);
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    // Peel the first part of a and contract it against every matching part
    // of b; each matched pair contributes n * A_ij.
    int i = 0;
    while (a.at(i).empty()) ++i;
    int n = a.at(i).front();
    PartFn a_rest = without_part(a, i, n);
    Cyclo total;
    for (int j = 0; j < b.labels(); ++j) {
        if (xf_.a(i, j).is_zero()) continue;
        long mult = std::count(b.at(j).begin(), b.at(j).end(), n);
        if (mult == 0) continue;
        total +=
            Cyclo(static_cast<long>(n) * mult) * xf_.a(i, j) * inner(a_rest, without_part(b, j, n));
    }
    memo_.emplace(std::move(key), total);
    return total;
}

Cyclo InnerCache::inner(const SymVec& u, const SymVec& v) {
    Cyclo s;
    for (const auto& [ra, ca] : u.terms()) {
        for (const auto& [rb, cb] : v.terms()) {
            if (ra.norm() != rb.norm()) continue;
            Cyclo t = inner(ra, rb);
            if (t.is_zero()) continue;
            s += ca * cb * t;
        }
    }
    return s;
}

Cyclo inner_sym(const XiForm& xf, const SymVec& u, const SymVec& v) {
    InnerCache cache(xf);
    return cache.inner(u, v);
}

SymVec class_monomial_to_sym(const Group& g, const PartFn& rho) {
    SymVec out = SymVec::vacuum(g->nc);
    for (int c = 0; c < rho.labels(); ++c) {
        if (rho.at(c).empty()) continue;
        CycloVec label = class_label_coefficients(g, c);
        for (int n : rho.at(c)) {
            SymVec next;
            for (int i = 0; i < g->nc; ++i) {
                if (label[i].is_zero()) continue;
                for (const auto& [r, coef] : out.terms()) next.add(with_part(r, i, n), label[i] * coef);
            }
            out = std::move(next);
        }
    }
    return out;
}

std::map<PartFn, Cyclo> sym_to_class_coeffs(const Group& g, const SymVec& v) {
    std::map<PartFn, Cyclo> acc;
    for (const auto& [rho, coef] : v.terms()) {
        std::map<PartFn, Cyclo> cur;
        cur.emplace(PartFn(g->nc), coef);
        for (int i = 0; i < rho.labels(); ++i) {
            if (rho.at(i).empty()) continue;
            CycloVec expand = irrep_label_in_class_basis(g, i);
            for (int n : rho.at(i)) {
                std::map<PartFn, Cyclo> next;
                for (const auto& [r, cc] : cur)
                    for (int c = 0; c < g->nc; ++c) {
                        if (expand[c].is_zero()) continue;
                        Cyclo term = cc * expand[c];
                        auto [it, inserted] = next.emplace(with_part(r, c, n), term);
                        if (!inserted) it->second += term;
                    }
                cur = std::move(next);
            }
        }
        for (const auto& [r, cc] : cur) {
            auto [it, inserted] = acc.emplace(r, cc);
            if (!inserted) it->second += cc;
        }
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

SymVec ch(const WreathClassFn& f) {
    const Group& g = f.group();
    SymVec out;
    for (const auto& [rho, v] : f.terms()) {
        Cyclo scale = Cyclo(Rational(Integer(1), wreath_centralizer(g, rho))) * v;
        out = out + scale * class_monomial_to_sym(g, rho);
    }
    return out;
}

WreathClassFn ch_inverse(const Group& g, int n, const SymVec& v) {
    WreathClassFn out(g, n);
    for (const auto& [rho, c] : sym_to_class_coeffs(g, v)) {
        if (rho.norm() != n) throw std::invalid_argument("ch_inverse: inhomogeneous vector");
        out.add(rho, Cyclo(Rational(wreath_centralizer(g, rho))) * c);
    }
    return out;
}

WreathClassFn induction_product(const WreathClassFn& f, const WreathClassFn& g) {
    if (f.group() != g.group()) throw std::invalid_argument("induction_product: group mismatch");
    return ch_inverse(f.group(), f.level() + g.level(), ch(f) * ch(g));
}

namespace {

long mn_rec(const Partition& lambda, const std::vector<int>& mu, size_t mu_idx,
            std::map<std::pair<Partition, size_t>, long>& memo) {
    if (mu_idx == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu_idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu[mu_idx];
    long total = 0;
    // Beta-set form of the border-strip recursion: remove r from one beta
    // number keeping the set distinct; the sign counts entries jumped over.
    int len = static_cast<int>(lambda.size());
    std::vector<long> beta(len);
    for (int j = 0; j < len; ++j) beta[j] = lambda[j] + (len - 1 - j);
    for (int j = 0; j < len; ++j) {
        long nb = beta[j] - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        std::vector<long> nbeta = beta;
        nbeta[j] = nb;
        int jumped = 0;
        for (int k = 0; k < len; ++k)
            if (k != j && beta[k] < beta[j] && beta[k] > nb) ++jumped;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<long>());
        Partition nl(len);
        for (int k = 0; k < len; ++k) nl[k] = static_cast<int>(nbeta[k] - (len - 1 - k));
        while (!nl.empty() && nl.back() == 0) nl.pop_back();
        long sub = mn_rec(nl, mu, mu_idx + 1, memo);
        total += (jumped % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
    if (part_sum(lambda) != part_sum(mu))
        throw std::invalid_argument("mn_character: size mismatch");
    std::map<std::pair<Partition, size_t>, long> memo;
    std::vector<int> m(mu.begin(), mu.end());
    return mn_rec(lambda, m, 0, memo);
}

SymVec schur_single(const Group& g, int label, const Partition& mu) {
    SymVec out;
    int n = static_cast<int>(part_sum(mu));
    for (const auto& nu : partitions_of(n)) {
        long chi = mn_character(mu, nu);
        if (chi == 0) continue;
        PartFn rho(g->nc);
        rho.at(label) = nu;
        out.add(rho, Cyclo(Rational(Integer(chi), z_lambda(nu))));
    }
    return out;
}

SymVec schur_sym(const Group& g, const PartFn& lambda) {
    SymVec out = SymVec::vacuum(g->nc);
    for (int i = 0; i < lambda.labels(); ++i) {
        if (lambda.at(i).empty()) continue;
        out = out * schur_single(g, i, lambda.at(i));
    }
    return out;
}

SymVec sym_exp_truncated(const SymVec& s, long max_deg, int labels) {
    SymVec out = SymVec::vacuum(labels);
    SymVec power = out;
    Rational factorial(1);
    for (long k = 1; k <= max_deg; ++k) {
        power = (power * s).truncated(max_deg);
        if (power.is_zero()) break;
        factorial *= Rational(k);
        out = out + Cyclo(factorial.inverse()) * power;
    }
    return out;
}

SymVec degree_slice(const SymVec& v, long d) {
    SymVec out;
    for (const auto& [rho, c] : v.terms())
        if (rho.norm() == d) out.add(rho, c);
    return out;
}

SeriesReport gen_series_check(const ClassFn& gamma, int order) {
    const Group& g = gamma.group();
    SeriesReport rep;
    rep.order = order;
    CycloVec label = gamma.irrep_coefficients();

    SymVec exp_arg, exp_arg_sign;
    for (int n = 1; n <= order; ++n) {
        for (int i = 0; i < g->nc; ++i) {
            if (label[i].is_zero()) continue;
            PartFn rho(g->nc);
            rho.at(i) = {n};
            Cyclo c = Cyclo(Rational(1, n)) * label[i];
            exp_arg.add(rho, c);
            exp_arg_sign.add(rho, n % 2 ? c : -c);
        }
    }
    SymVec eta_series = sym_exp_truncated(exp_arg, order, g->nc);
    SymVec eps_series = sym_exp_truncated(exp_arg_sign, order, g->nc);

    rep.eta_ok = rep.eps_ok = rep.substitution_ok = true;
    for (int n = 0; n <= order; ++n) {
        SymVec lhs_eta = ch(eta_n(gamma, n));
        SymVec lhs_eps = ch(epsilon_n(gamma, n));
        if (lhs_eta != degree_slice(eta_series, n)) rep.eta_ok = false;
        if (lhs_eps != degree_slice(eps_series, n)) rep.eps_ok = false;
        // substituting gamma -> -gamma and z -> -z swaps the two series
        ClassFn neg = Cyclo(-1) * gamma;
        SymVec rhs = ch(eta_n(neg, n));
        if (n % 2) rhs = Cyclo(-1) * rhs;
        if (lhs_eps != rhs) rep.substitution_ok = false;
    }
    return rep;
}

}  // namespace wvo
