#pragma once

#include <mutex>

#include "wvo/fock.hpp"

namespace wvo {

// A point of the character lattice in the basis gamma_0..gamma_r.
struct LatticeVec {
    std::vector<long> c;

    LatticeVec() = default;
    explicit LatticeVec(int rank) : c(rank, 0) {}
    static LatticeVec unit(int rank, int i) {
        LatticeVec v(rank);
        v.c[i] = 1;
        return v;
    }

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
    }

    friend LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
        LatticeVec out = a;
        for (int i = 0; i < out.rank(); ++i) out.c[i] += b.c[i];
        return out;
    }
    friend LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
        LatticeVec out = a;
        for (int i = 0; i < out.rank(); ++i) out.c[i] -= b.c[i];
        return out;
    }
    LatticeVec operator-() const {
        LatticeVec out = *this;
        for (auto& x : out.c) x = -x;
        return out;
    }
    friend LatticeVec operator*(long s, const LatticeVec& a) {
        LatticeVec out = a;
        for (auto& x : out.c) x *= s;
        return out;
    }
    friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.c == b.c; }
    friend bool operator<(const LatticeVec& a, const LatticeVec& b) { return a.c < b.c; }

    std::string to_string() const;  // "e[1,-2,0]"
    CycloVec label() const {        // coefficient vector over the irreducibles
        CycloVec v(c.size());
        for (size_t i = 0; i < c.size(); ++i) v[i] = Cyclo(c[i]);
        return v;
    }
};

// The Gram matrix of xi restricted to the lattice; entries must be integers.
class LatticeForm {
  public:
    explicit LatticeForm(const XiForm& xf);

    int rank() const { return static_cast<int>(a_.size()); }
    long entry(int i, int j) const { return a_[i][j]; }
    long pair(const LatticeVec& x, const LatticeVec& y) const;
    long norm(const LatticeVec& x) const { return pair(x, x); }

  private:
    std::vector<std::vector<long>> a_;
};

// The standard bimultiplicative 2-cocycle on the lattice:
// eps(e_i, e_j) = 1 for i <= j and (-1)^{a_ij + a_ii a_jj} for i > j,
// extended bimultiplicatively. Satisfies
// eps(a,b)/eps(b,a) = (-1)^{<a,b> + <a,a><b,b>}.
class Cocycle {
  public:
    explicit Cocycle(const LatticeForm& form);
    int eps(const LatticeVec& a, const LatticeVec& b) const;  // +1 or -1
    int b_eps(const LatticeVec& a, const LatticeVec& b) const { return eps(a, b) * eps(b, a); }

  private:
    std::vector<std::vector<int>> parity_;  // parity of the exponent on (e_i, e_j)
};

// Half-integers (modes and degrees live in (1/2)Z).
struct Half {
    long twice = 0;

    Half() = default;
    explicit Half(long t) : twice(t) {}
    static Half of_int(long n) { return Half(2 * n); }
    static Half halves(long t) { return Half(t); }

    bool is_integer() const { return twice % 2 == 0; }
    long to_int() const {
        if (!is_integer()) throw std::runtime_error("Half: not an integer");
        return twice / 2;
    }
    friend Half operator+(Half a, Half b) { return Half(a.twice + b.twice); }
    friend Half operator-(Half a, Half b) { return Half(a.twice - b.twice); }
    Half operator-() const { return Half(-twice); }
    friend bool operator==(Half a, Half b) { return a.twice == b.twice; }
    friend bool operator!=(Half a, Half b) { return a.twice != b.twice; }
    friend bool operator<(Half a, Half b) { return a.twice < b.twice; }
    friend bool operator<=(Half a, Half b) { return a.twice <= b.twice; }
    std::string to_string() const;
};

struct FockKey {
    PartFn rho;
    LatticeVec alpha;

    friend bool operator<(const FockKey& a, const FockKey& b) {
        return std::tie(a.rho, a.alpha) < std::tie(b.rho, b.alpha);
    }
    friend bool operator==(const FockKey& a, const FockKey& b) {
        return a.rho == b.rho && a.alpha == b.alpha;
    }
};

// An element of V_Gamma = S_Gamma (x) C[lattice]: finitely many terms
// (power-sum monomial, lattice point) with exact coefficients. The degree of
// a term is ||rho|| + <alpha, alpha>/2.
class FockVec {
  public:
    FockVec() = default;
    static FockVec lattice_point(int labels, const LatticeVec& alpha) {
        FockVec v;
        v.add(PartFn(labels), alpha, Cyclo(1));
        return v;
    }
    static FockVec from_sym(const SymVec& s, const LatticeVec& alpha);

    bool is_zero() const { return t_.empty(); }
    const std::map<FockKey, Cyclo>& terms() const { return t_; }
    void add(const PartFn& rho, const LatticeVec& alpha, const Cyclo& c);
    Cyclo at(const PartFn& rho, const LatticeVec& alpha) const;

    friend FockVec operator+(const FockVec& a, const FockVec& b);
    friend FockVec operator-(const FockVec& a, const FockVec& b);
    friend FockVec operator*(const Cyclo& s, const FockVec& a);
    friend bool operator==(const FockVec& a, const FockVec& b) { return a.t_ == b.t_; }
    friend bool operator!=(const FockVec& a, const FockVec& b) { return !(a.t_ == b.t_); }

  private:
    std::map<FockKey, Cyclo> t_;
};

enum class HalfSide { HPlus, HMinus, EPlus, EMinus };

// Bundles the weight form, its integer lattice form and the 2-cocycle; all
// vertex-operator arithmetic runs through this context.
class VertexContext {
  public:
    explicit VertexContext(XiForm xf);

    const Group& group() const { return xf_.group(); }
    const XiForm& xi_form() const { return xf_; }
    const LatticeForm& form() const { return form_; }
    const Cocycle& cocycle() const { return eps_; }
    int rank() const { return form_.rank(); }

    Half degree(const PartFn& rho, const LatticeVec& alpha) const {
        return Half(2 * rho.norm() + form_.norm(alpha));
    }
    // max term degree, for truncation bookkeeping (zero vector -> 0)
    Half max_degree(const FockVec& v) const;

    // a_m on V_Gamma: for m != 0 the Heisenberg action on the symmetric
    // factor; a_0(gamma) = partial_gamma, the lattice pairing eigenvalue.
    FockVec heis(long m, const LatticeVec& gamma, const FockVec& v) const;
    FockVec heis(long m, const CycloVec& label, const FockVec& v) const;  // m != 0
    FockVec partial(const LatticeVec& gamma, const FockVec& v) const;
    // e^beta: twisted group-algebra translation.
    FockVec lattice_mul(const LatticeVec& beta, const FockVec& v) const;

    // Coefficients z^0..z^order of the four exponential half-vertex series
    // applied to v (z^{-k} coefficients for the minus sides).
    std::vector<FockVec> half_vertex(HalfSide side, const CycloVec& label, int order,
                                     const FockVec& v) const;

    // X_n(gamma) = coefficient of z^{-n-<g,g>/2} in
    // H_+(gamma,z) E_-(gamma,z) e^gamma z^{partial_gamma}; mode n must lie in
    // Z + <gamma,gamma>/2. Each application asserts the degree shift -n.
    FockVec vertex(const LatticeVec& gamma, Half n, const FockVec& v) const;

    Cyclo inner(const FockVec& u, const FockVec& v) const;  // uncached
    Cyclo inner(InnerCache& cache, const FockVec& u, const FockVec& v) const;

    // Slices 0..>=order of the creation-side exponential series for a label;
    // memoized (thread-safe), shared snapshots.
    std::shared_ptr<const std::vector<SymVec>> creation_slices(const CycloVec& label, bool negate,
                                                               long order) const;
    // Coefficient of z^{-k} of the signed annihilation exponential applied to
    // one monomial; memoized.
    SymVec ann_slice(const CycloVec& label, const std::string& label_key, int k,
                     const PartFn& mono) const;

  private:
    XiForm xf_;
    LatticeForm form_;
    Cocycle eps_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::string, std::shared_ptr<const std::vector<SymVec>>> creation_cache_;
    mutable std::map<std::tuple<std::string, int, PartFn>, SymVec> ann_cache_;
};

// --- operator identity checks ----------------------------------------------

struct OpeReport {
    long window = 0;        // |z-power| and |w-power| bound used
    long tested_pairs = 0;  // (n, m) mode pairs compared
    long vectors = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Verifies X(a,z)X(b,w) = eps(a,b) :X(a,z)X(b,w): (z-w)^{<a,b>} coefficient
// by coefficient against a degree-bounded test basis; (z-w)^e expands in the
// region |w| < |z|.
OpeReport ope_check(const VertexContext& ctx, const LatticeVec& alpha, const LatticeVec& beta,
                    long degree_bound);

struct CliffordReport {
    long cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// For trivial xi: {X^+_m(g_i), X^+_n(g_j)} = {X^-_m, X^-_n} = 0 and
// {X^+_m(g_i), X^-_n(g_j)} = delta_ij delta_{m,-n}, modes in Z + 1/2 with
// |m|, |n| <= mode_bound, on the degree-bounded test basis.
CliffordReport clifford_check(const VertexContext& ctx, Half mode_bound, long degree_bound);

// Test basis {a_{-rho} (x) e^alpha : deg <= D, |alpha_i| <= coord_bound}.
std::vector<FockVec> fock_test_basis(const VertexContext& ctx, long degree_bound, long coord_bound);

// --- Schur states and character tables -------------------------------------

// omega(lambda) = sum_gamma l(lambda(gamma)) gamma.
LatticeVec omega_of(const PartFn& lambda);

// s_{lambda,alpha}: the product over gamma_0..gamma_r (left to right) of the
// vertex-component strings X_{-lambda(g)-delta-(<g,alpha>+1/2)1}(g) applied
// to e^alpha. Requires trivial xi.
FockVec schur_state(const VertexContext& ctx, const PartFn& lambda, const LatticeVec& alpha);

enum class TableRoute { inner_product, vertex_operator };

struct WreathCharTable {
    Group g;
    int n = 0;
    std::vector<PartFn> rows;  // partition-valued on the irreducibles
    std::vector<PartFn> cols;  // partition-valued on the classes
    std::vector<Integer> col_centralizer;
    std::vector<std::vector<Cyclo>> values;

    int col_index(const PartFn& mu) const;
};

// The full character table of Gamma_n via the matrix coefficients
// <s_{lambda,-omega(lambda)}, a'_{-mu}>. The inner_product route evaluates
// them in S_Gamma; the vertex_operator route builds the states by vertex
// components (sign-normalized against s_lambda e^{omega}) and is the
// independent cross-check.
WreathCharTable character_table(const Group& g, int n, TableRoute route);
Cyclo character_value(const Group& g, const PartFn& lambda, const PartFn& mu, TableRoute route);

// Both weighted orthogonality relations, exact; returns a diagnostic list.
std::vector<std::string> table_orthogonality_failures(const WreathCharTable& t);

}  // namespace wvo
