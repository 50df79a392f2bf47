#include "wvo/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wvo {

WreathElement wreath_identity(const Group& base, int n) {
    WreathElement e;
    e.g.assign(n, base->elements->identity());
    e.sigma.resize(n);
    std::iota(e.sigma.begin(), e.sigma.end(), 0);
    return e;
}

WreathElement wreath_mul(const Group& base, const WreathElement& a, const WreathElement& b) {
    const CayleyGroup& cg = *base->elements;
    int n = static_cast<int>(a.g.size());
    std::vector<int> sigma_inv(n);
    for (int i = 0; i < n; ++i) sigma_inv[a.sigma[i]] = i;
    WreathElement out;
    out.g.resize(n);
    out.sigma.resize(n);
    for (int i = 0; i < n; ++i) {
        out.g[i] = cg.mul(a.g[i], b.g[sigma_inv[i]]);
        out.sigma[i] = a.sigma[b.sigma[i]];
    }
    return out;
}

WreathElement wreath_inverse(const Group& base, const WreathElement& a) {
    const CayleyGroup& cg = *base->elements;
    int n = static_cast<int>(a.g.size());
    WreathElement out;
    out.g.resize(n);
    out.sigma.resize(n);
    for (int i = 0; i < n; ++i) out.sigma[a.sigma[i]] = i;
    for (int j = 0; j < n; ++j) out.g[j] = cg.inverse(a.g[a.sigma[j]]);
    return out;
}

PartFn type_of(const Group& base, const WreathElement& x) {
    const CayleyGroup& cg = *base->elements;
    int n = static_cast<int>(x.g.size());
    PartFn rho(base->nc);
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // walk the cycle (i_1 i_2 ... i_k), i_{j+1} = sigma(i_j)
        std::vector<int> cyc;
        int i = start;
        while (!seen[i]) {
            seen[i] = true;
            cyc.push_back(i);
            i = x.sigma[i];
        }
        int prod = cg.identity();
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) prod = cg.mul(prod, x.g[*it]);
        rho.at(cg.class_of(prod)).push_back(static_cast<int>(cyc.size()));
    }
    for (auto& part : rho.p) std::sort(part.begin(), part.end(), std::greater<int>());
    return rho;
}

Cyclo WreathClassFn::at(const PartFn& rho) const {
    auto it = v_.find(rho);
    return it == v_.end() ? Cyclo(0) : it->second;
}

void WreathClassFn::add(const PartFn& rho, const Cyclo& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = v_.emplace(rho, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) v_.erase(it);
    }
}

WreathClassFn operator+(const WreathClassFn& a, const WreathClassFn& b) {
    if (a.g_ != b.g_ || a.n_ != b.n_) throw std::invalid_argument("WreathClassFn: mismatch");
    WreathClassFn out = a;
    for (const auto& [rho, v] : b.v_) out.add(rho, v);
    return out;
}

WreathClassFn operator*(const Cyclo& s, const WreathClassFn& a) {
    WreathClassFn out(a.g_, a.n_);
    if (s.is_zero()) return out;
    for (const auto& [rho, v] : a.v_) out.add(rho, s * v);
    return out;
}

bool operator==(const WreathClassFn& a, const WreathClassFn& b) {
    return a.g_ == b.g_ && a.n_ == b.n_ && a.v_ == b.v_;
}

PartFn bar_type(const Group& base, const PartFn& rho) { return rho.relabel(base->inv_class); }

Integer wreath_centralizer(const Group& base, const PartFn& rho) { return big_Z(rho, base->zeta); }

namespace {

// prod_c gamma(c)^{l(rho(c))} with an extra sign (-1)^{|rho(c)| - l(rho(c))}
// per class when signed = true.
Cyclo product_over_classes(const ClassFn& gamma, const PartFn& rho, bool signed_version) {
    Cyclo out(1);
    for (int c = 0; c < rho.labels(); ++c) {
        long l = part_length(rho.at(c));
        if (l == 0) continue;
        Cyclo v = gamma.at(c);
        if (v.is_zero()) return Cyclo(0);
        Cyclo p(1);
        for (long k = 0; k < l; ++k) p = p * v;
        if (signed_version && (part_sum(rho.at(c)) - l) % 2 != 0) p = -p;
        out = out * p;
    }
    return out;
}

}  // namespace

WreathClassFn eta_n(const ClassFn& gamma, int n) {
    const Group& g = gamma.group();
    WreathClassFn out(g, n);
    for (const auto& rho : enumerate_partfn(g->nc, n))
        out.add(rho, product_over_classes(gamma, rho, false));
    return out;
}

WreathClassFn epsilon_n(const ClassFn& gamma, int n) {
    // (-1)^n prod_c (-gamma(c))^{l} = prod_c (-1)^{|rho(c)|-l} gamma(c)^{l}
    const Group& g = gamma.group();
    WreathClassFn out(g, n);
    for (const auto& rho : enumerate_partfn(g->nc, n))
        out.add(rho, product_over_classes(gamma, rho, true));
    return out;
}

WreathClassFn sigma_class(const Group& base, int c, int n) {
    if (n < 1) throw std::invalid_argument("sigma_class: n must be >= 1");
    WreathClassFn out(base, n);
    PartFn rho(base->nc);
    rho.at(c) = {n};
    out.add(rho, Cyclo(static_cast<long>(n) * base->zeta[c]));
    return out;
}

WreathClassFn sigma_of(const ClassFn& gamma, int n) {
    if (n < 1) throw std::invalid_argument("sigma_of: n must be >= 1");
    const Group& g = gamma.group();
    WreathClassFn out(g, n);
    for (int c = 0; c < g->nc; ++c) {
        PartFn rho(g->nc);
        rho.at(c) = {n};
        out.add(rho, Cyclo(n) * gamma.at(c));
    }
    return out;
}

WreathClassFn sigma_rho(const Group& base, const PartFn& rho) {
    WreathClassFn out(base, static_cast<int>(rho.norm()));
    out.add(rho, Cyclo(Rational(wreath_centralizer(base, rho))));
    return out;
}

Cyclo weighted_pairing_n(const XiForm& xf, const WreathClassFn& f, const WreathClassFn& g) {
    if (f.group() != g.group() || f.group() != xf.group())
        throw std::invalid_argument("weighted_pairing_n: group mismatch");
    if (f.level() != g.level()) throw std::invalid_argument("weighted_pairing_n: level mismatch");
    const Group& base = f.group();
    Cyclo s;
    for (const auto& [rho, fv] : f.terms()) {
        Cyclo gv = g.at(bar_type(base, rho));
        if (gv.is_zero()) continue;
        Cyclo w = product_over_classes(xf.xi(), rho, false);
        if (w.is_zero()) continue;
        s += Cyclo(Rational(Integer(1), wreath_centralizer(base, rho))) * w * fv * gv;
    }
    return s;
}

// --- brute-force oracle -----------------------------------------------------

int WreathGroup::index_of(const WreathElement& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw std::runtime_error("WreathGroup: element not found");
    return it->second;
}

WreathGroup build_wreath_group(const Group& base, int n, int max_order) {
    long order = 1;
    for (int i = 0; i < n; ++i) {
        order *= base->elements->order();
        if (order > max_order) throw std::invalid_argument("build_wreath_group: too large");
    }
    for (int i = 2; i <= n; ++i) {
        order *= i;
        if (order > max_order) throw std::invalid_argument("build_wreath_group: too large");
    }

    WreathGroup w;
    w.base = base;
    w.n = n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    int m = base->elements->order();
    std::vector<int> tuple(n, 0);
    bool done = false;
    while (!done) {
        for (const auto& s : perms) {
            WreathElement e;
            e.g = tuple;
            e.sigma = s;
            w.index_.emplace(e, static_cast<int>(w.elements.size()));
            w.elements.push_back(std::move(e));
        }
        done = true;
        for (int i = 0; i < n; ++i) {
            if (++tuple[i] < m) {
                done = false;
                break;
            }
            tuple[i] = 0;
        }
        if (n == 0) break;
    }

    int total = static_cast<int>(w.elements.size());
    std::vector<std::vector<int>> table(total, std::vector<int>(total));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
            table[i][j] = w.index_of(wreath_mul(base, w.elements[i], w.elements[j]));
    w.cayley = std::make_shared<const CayleyGroup>(CayleyGroup::from_table(std::move(table)));
    return w;
}

WreathClassFn induction_product_bruteforce(const WreathClassFn& f, const WreathClassFn& h,
                                           int max_order) {
    const Group& base = f.group();
    if (h.group() != base) throw std::invalid_argument("induction: group mismatch");
    int n = f.level(), m = h.level(), total = n + m;
    WreathGroup big = build_wreath_group(base, total, max_order);

    // Indicator of H = Gamma_n x Gamma_m (block-embedded) weighted by f x h.
    std::vector<Cyclo> fh(big.elements.size(), Cyclo(0));
    long subgroup_order = 0;
    for (const auto& x : big.elements) {
        bool block = true;
        for (int i = 0; i < n && block; ++i)
            if (x.sigma[i] >= n) block = false;
        for (int i = n; i < total && block; ++i)
            if (x.sigma[i] < n) block = false;
        if (!block) continue;
        ++subgroup_order;
        WreathElement a{std::vector<int>(x.g.begin(), x.g.begin() + n),
                        std::vector<int>(x.sigma.begin(), x.sigma.begin() + n)};
        WreathElement b{std::vector<int>(x.g.begin() + n, x.g.end()),
                        std::vector<int>(x.sigma.begin() + n, x.sigma.end())};
        for (int& v : b.sigma) v -= n;
        fh[big.index_of(x)] = f.at(type_of(base, a)) * h.at(type_of(base, b));
    }

    // Ind(F)(y) = |H|^{-1} sum_{u in G} F(u^{-1} y u).
    WreathClassFn out(base, total);
    const CayleyGroup& cg = *big.cayley;
    for (int c = 0; c < cg.num_classes(); ++c) {
        int y = cg.class_rep(c);
        Cyclo s;
        for (int u = 0; u < cg.order(); ++u) s += fh[cg.mul(cg.mul(cg.inverse(u), y), u)];
        if (s.is_zero()) continue;
        out.add(type_of(base, big.elements[y]), Cyclo(Rational(1, subgroup_order)) * s);
    }
    return out;
}

}  // namespace wvo
