#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wvo/cayley.hpp"
#include "wvo/cyclo.hpp"
#include "wvo/partitions.hpp"

namespace wvo {

using CycloVec = std::vector<Cyclo>;

// A base finite group with its exact character table. chi[i][c] is the value
// of the i-th irreducible character on the c-th conjugacy class; row 0 is the
// trivial character and column 0 the identity class. Both orthogonality
// relations are verified at construction; a violation is a hard error.
//
// Irreducible characters are ordered by degree (trivial first), ties broken
// by lexicographic comparison of exact value strings at the exponent
// conductor. Immutable after construction.
struct GroupData {
    std::string descriptor;
    std::shared_ptr<const CayleyGroup> elements;
    int nc = 0;                          // number of classes = number of irreducibles
    std::vector<long> zeta;              // centralizer orders per class
    std::vector<long> class_size;
    std::vector<int> class_elt_order;
    std::vector<int> inv_class;
    std::vector<std::vector<Cyclo>> chi;
    std::vector<long> degrees;
    long exponent = 1;                   // character values live in Q(zeta_exponent)
    CycloVec pi;                         // natural 2-dim character, empty if no matrix model
};

using Group = std::shared_ptr<const GroupData>;

// Descriptor: "trivial", "cyclic:m", "bd:4m", "bt", "bo", "bi",
// "cayley:<file>". Results are memoized; groups are immutable, so sharing is
// safe.
Group build_group(const std::string& spec);
// Build directly from a multiplication table (indices; identity located
// automatically). Used by the cayley:<file> path and by oracles.
Group build_group_from_table(std::vector<std::vector<int>> table, const std::string& name);

class ClassFn {
  public:
    ClassFn(Group g) : g_(std::move(g)), v_(g_->nc) {}
    ClassFn(Group g, CycloVec v);
    static ClassFn irreducible(const Group& g, int i) { return ClassFn(g, g->chi[i]); }

    const Group& group() const { return g_; }
    const Cyclo& at(int c) const { return v_[c]; }
    Cyclo& at(int c) { return v_[c]; }
    const CycloVec& values() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }

    ClassFn dual() const;  // f(c^{-1})
    bool is_self_dual() const { return dual() == *this; }

    friend ClassFn operator+(const ClassFn& a, const ClassFn& b);
    friend ClassFn operator-(const ClassFn& a, const ClassFn& b);
    friend ClassFn operator*(const Cyclo& s, const ClassFn& a);
    // Pointwise product = character of the tensor product.
    friend ClassFn operator*(const ClassFn& a, const ClassFn& b);
    friend bool operator==(const ClassFn& a, const ClassFn& b) { return a.v_ == b.v_; }

    // Coefficients in the irreducible basis (independent of any xi).
    CycloVec irrep_coefficients() const;

  private:
    Group g_;
    CycloVec v_;
};

// <f, g> = sum_c zeta_c^{-1} f(c) g(c^{-1}).
Cyclo standard_pairing(const ClassFn& f, const ClassFn& g);

// A self-dual weight xi with its Gram matrix A, a_ij = <gamma_i, gamma_j>_xi.
// Construction rejects non-self-dual xi and asserts the symmetry of A.
class XiForm {
  public:
    XiForm(Group g, ClassFn xi);

    const Group& group() const { return g_; }
    const ClassFn& xi() const { return xi_; }
    const std::vector<CycloVec>& A() const { return a_; }
    const Cyclo& a(int i, int j) const { return a_[i][j]; }

    // <f, g>_xi = sum_c zeta_c^{-1} xi(c) f(c) g(c^{-1}).
    Cyclo pair(const ClassFn& f, const ClassFn& g) const;
    // Pairing of coefficient vectors over the irreducible basis: s^T A t.
    Cyclo pair_coeffs(const CycloVec& s, const CycloVec& t) const;

    bool is_trivial() const { return trivial_; }

  private:
    Group g_;
    ClassFn xi_;
    std::vector<CycloVec> a_;
    bool trivial_ = false;
};

XiForm xi_trivial(const Group& g);
// xi = d*gamma_0 - pi with d = 2 and pi the natural 2-dim character.
XiForm xi_mckay(const Group& g);
XiForm make_xi(const Group& g, const std::string& selector);  // "trivial" | "mckay"

struct EigenReport {
    std::vector<bool> column_ok;  // A E = E D, column by column
    bool all_ok = false;
    std::vector<Cyclo> eigenvalues;  // xi(c^i)
};
EigenReport mckay_eigencheck(const XiForm& xf);

struct RadicalReport {
    bool delta_in_kernel = false;  // A * (d_0..d_r)^T = 0
    long kernel_dim = -1;
    std::vector<Cyclo> kernel_basis;  // one vector when dim = 1
    bool ok() const { return delta_in_kernel && kernel_dim == 1; }
};
RadicalReport radical_check(const XiForm& xf);

// a_m(c) = sum_gamma gamma(c^{-1}) a_m(gamma): coefficients over irreps.
CycloVec class_label_coefficients(const Group& g, int c);
// Inverse expansion coefficients: a_m(gamma_i) = sum_c zeta_c^{-1} gamma_i(c) a_m(c).
CycloVec irrep_label_in_class_basis(const Group& g, int i);

}  // namespace wvo
