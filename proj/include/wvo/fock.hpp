#pragma once

#include <map>

#include "wvo/group.hpp"
#include "wvo/wreath.hpp"

namespace wvo {

// An element of the symmetric algebra on the generators a_{-n}(gamma_i),
// n >= 1, gamma_i irreducible: a finite linear combination of power-sum
// monomials indexed by partition-valued functions on the irreducibles.
// The empty index is the vacuum.
class SymVec {
  public:
    SymVec() = default;
    static SymVec vacuum(int labels) {
        SymVec v;
        v.add(PartFn(labels), Cyclo(1));
        return v;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<PartFn, Cyclo>& terms() const { return t_; }
    Cyclo at(const PartFn& rho) const;
    void add(const PartFn& rho, const Cyclo& c);
    long max_degree() const;

    friend SymVec operator+(const SymVec& a, const SymVec& b);
    friend SymVec operator-(const SymVec& a, const SymVec& b);
    friend SymVec operator*(const Cyclo& s, const SymVec& a);
    friend SymVec operator*(const SymVec& a, const SymVec& b);  // algebra product
    friend bool operator==(const SymVec& a, const SymVec& b) { return a.t_ == b.t_; }
    friend bool operator!=(const SymVec& a, const SymVec& b) { return !(a.t_ == b.t_); }

    SymVec truncated(long max_deg) const;

    // "a[-2](g1)^1 a[-1](g0)^3"-style rendering of a single monomial plus
    // coefficients; see io.hpp for the full format.

  private:
    std::map<PartFn, Cyclo> t_;
};

// Monomial surgery used by the Heisenberg action.
PartFn with_part(PartFn rho, int label, int n);     // insert one part n
PartFn without_part(PartFn rho, int label, int n);  // remove one part n (must exist)

// a_m acting on S_Gamma: m < 0 multiplies by the generator, m > 0 is the
// derivation deleting one factor a_{-m}(gamma_j) with coefficient
// m * <gamma, gamma_j>_xi, and a_0 acts as 0. The label is a coefficient
// vector over the irreducibles.
SymVec apply_heis(const XiForm& xf, long m, const CycloVec& label, const SymVec& v);

// Bilinear form with <1,1> = 1 and a_n(gamma)* = a_{-n}(gamma), evaluated by
// contraction of power-sum monomials. The cache is reused across calls within
// one assembly; xi enters through the Gram matrix A.
class InnerCache {
  public:
    explicit InnerCache(const XiForm& xf) : xf_(xf) {}
    Cyclo inner(const PartFn& a, const PartFn& b);
    Cyclo inner(const SymVec& u, const SymVec& v);

  private:
    const XiForm& xf_;
    std::map<std::pair<PartFn, PartFn>, Cyclo> memo_;
};

Cyclo inner_sym(const XiForm& xf, const SymVec& u, const SymVec& v);

// Basis changes between the class-indexed monomials a'_{-rho} and the
// gamma-indexed power sums.
SymVec class_monomial_to_sym(const Group& g, const PartFn& rho_over_classes);
std::map<PartFn, Cyclo> sym_to_class_coeffs(const Group& g, const SymVec& v);

// ch(f) = sum_rho Z_rho^{-1} f_rho a'_{-rho}, expanded to the gamma basis.
SymVec ch(const WreathClassFn& f);
WreathClassFn ch_inverse(const Group& g, int n, const SymVec& v);

// Hopf product on class functions, routed through ch.
WreathClassFn induction_product(const WreathClassFn& f, const WreathClassFn& g);

// Murnaghan-Nakayama: the symmetric group character chi^lambda at cycle type
// mu, exact integer. Doubles as the independent oracle for the character
// tables of S_n.
long mn_character(const Partition& lambda, const Partition& mu);

// Schur function s_mu in the alphabet gamma_i, expanded into power sums via
// s_mu = sum_nu z_nu^{-1} chi^mu(nu) p_nu.
SymVec schur_single(const Group& g, int label, const Partition& mu);
// s_lambda = prod_gamma s_{lambda(gamma)}(gamma) for a partition-valued
// lambda on the irreducibles.
SymVec schur_sym(const Group& g, const PartFn& lambda);

// exp of a vector with positive-degree terms, truncated above max_deg.
SymVec sym_exp_truncated(const SymVec& s, long max_deg, int labels);
SymVec degree_slice(const SymVec& v, long d);

struct SeriesReport {
    int order = 0;
    bool eta_ok = false;
    bool eps_ok = false;
    bool substitution_ok = false;
    bool all_ok() const { return eta_ok && eps_ok && substitution_ok; }
};

// Verifies coefficientwise to z^N:
//   sum_n ch(eta_n(gamma)) z^n = exp(sum_n a_{-n}(gamma) z^n / n)
//   sum_n ch(eps_n(gamma)) z^n = exp(sum_n (-1)^{n-1} a_{-n}(gamma) z^n / n)
// plus the substitution symmetry ch(eps_n(gamma)) = (-1)^n ch(eta_n(-gamma)).
SeriesReport gen_series_check(const ClassFn& gamma, int order);

}  // namespace wvo
