#pragma once

#include <map>

#include "wvo/group.hpp"

namespace wvo {

// An element (g, sigma) of the wreath product Gamma_n: n entries of the base
// group and a permutation of {0..n-1}. Multiplication is
// (g, sigma)(h, tau) = (g * sigma(h), sigma tau) with sigma acting on tuples
// by sigma(h)_i = h_{sigma^{-1}(i)}.
struct WreathElement {
    std::vector<int> g;
    std::vector<int> sigma;

    friend bool operator<(const WreathElement& a, const WreathElement& b) {
        return std::tie(a.g, a.sigma) < std::tie(b.g, b.sigma);
    }
    friend bool operator==(const WreathElement& a, const WreathElement& b) {
        return a.g == b.g && a.sigma == b.sigma;
    }
};

WreathElement wreath_identity(const Group& base, int n);
WreathElement wreath_mul(const Group& base, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const Group& base, const WreathElement& a);

// The type of (g, sigma): for each cycle (i_1 .. i_k) of sigma the
// cycle-product g_{i_k} g_{i_{k-1}} ... g_{i_1} determines a conjugacy class
// of the base group; the type records the cycle length k under that class.
// A complete conjugacy invariant of Gamma_n.
PartFn type_of(const Group& base, const WreathElement& x);

// A class function on Gamma_n, stored sparsely by type. Missing types are 0.
class WreathClassFn {
  public:
    WreathClassFn(Group g, int n) : g_(std::move(g)), n_(n) {}

    const Group& group() const { return g_; }
    int level() const { return n_; }

    Cyclo at(const PartFn& rho) const;
    void add(const PartFn& rho, const Cyclo& v);
    const std::map<PartFn, Cyclo>& terms() const { return v_; }

    friend WreathClassFn operator+(const WreathClassFn& a, const WreathClassFn& b);
    friend WreathClassFn operator*(const Cyclo& s, const WreathClassFn& a);
    friend bool operator==(const WreathClassFn& a, const WreathClassFn& b);

  private:
    Group g_;
    int n_;
    std::map<PartFn, Cyclo> v_;
};

// Type of the inverse: componentwise rho(c) -> rho(c^{-1}).
PartFn bar_type(const Group& base, const PartFn& rho);
// Centralizer order of elements of type rho.
Integer wreath_centralizer(const Group& base, const PartFn& rho);

// eta_n(gamma)(rho) = prod_c gamma(c)^{l(rho(c))}, the n-th tensor-power
// character extended to virtual gamma.
WreathClassFn eta_n(const ClassFn& gamma, int n);
// epsilon_n(gamma)(rho) = (-1)^n prod_c (-gamma(c))^{l(rho(c))}.
WreathClassFn epsilon_n(const ClassFn& gamma, int n);
// sigma_n(c): n*zeta_c on the class c_n (one n-cycle with cycle-product in c).
WreathClassFn sigma_class(const Group& base, int c, int n);
// sigma_n(gamma): n*gamma(c) on every class c_n.
WreathClassFn sigma_of(const ClassFn& gamma, int n);
// sigma_rho: Z_rho on the class of type rho, 0 elsewhere.
WreathClassFn sigma_rho(const Group& base, const PartFn& rho);

// <f, g>_{xi, Gamma_n} = sum_rho Z_rho^{-1} eta_n(xi)(rho) f(rho) g(rho-bar).
Cyclo weighted_pairing_n(const XiForm& xf, const WreathClassFn& f, const WreathClassFn& g);

// --- brute-force oracle: Gamma_n as an explicit group ----------------------

struct WreathGroup {
    Group base;
    int n = 0;
    std::vector<WreathElement> elements;
    std::shared_ptr<const CayleyGroup> cayley;  // same element indexing

    int index_of(const WreathElement& x) const;

  private:
    friend WreathGroup build_wreath_group(const Group& base, int n, int max_order);
    std::map<WreathElement, int> index_;
};

WreathGroup build_wreath_group(const Group& base, int n, int max_order = 256);

// Ind_{Gamma_n x Gamma_m}^{Gamma_{n+m}}(f x h) computed element by element;
// feasible only at oracle scale.
WreathClassFn induction_product_bruteforce(const WreathClassFn& f, const WreathClassFn& h,
                                           int max_order = 256);

}  // namespace wvo
