#pragma once

#include <string>
#include <vector>

#include "wvo/integer.hpp"

namespace wvo {

// A partition is a weakly decreasing list of positive parts; the empty list
// is the unique partition of 0.
using Partition = std::vector<int>;

long part_sum(const Partition& p);
inline long part_length(const Partition& p) { return static_cast<long>(p.size()); }
// Multiplicities m[i] = number of parts equal to i (index 0 unused).
std::vector<int> multiplicities(const Partition& p);

// z_lambda = prod_i i^{m_i} m_i!  (centralizer order of cycle type lambda in S_n).
Integer z_lambda(const Partition& p);

// All partitions of n, in descending lexicographic order: (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);

// Partition-valued function on a fixed ordered label set {0, ..., labels-1}.
// Unstored labels mean the empty partition (here: dense vector, possibly empty
// entries). Ordering of enumerate_partfn is the canonical row/column order
// used by every table: labels in order, assigned size descending per label,
// equal sizes in descending lexicographic order.
struct PartFn {
    std::vector<Partition> p;

    PartFn() = default;
    explicit PartFn(int labels) : p(labels) {}

    int labels() const { return static_cast<int>(p.size()); }
    long norm() const;  // sum of |p[x]|
    long total_length() const;
    bool empty() const { return norm() == 0; }

    const Partition& at(int x) const { return p[x]; }
    Partition& at(int x) { return p[x]; }

    // Composition with an involution on labels: result.p[x] = p[inv[x]].
    PartFn relabel(const std::vector<int>& inv) const;

    friend bool operator==(const PartFn& a, const PartFn& b) { return a.p == b.p; }
    friend bool operator!=(const PartFn& a, const PartFn& b) { return !(a.p == b.p); }
    friend bool operator<(const PartFn& a, const PartFn& b) { return a.p < b.p; }

    // "c0:[3,1];c1:[2]" with empty entries omitted; the label prefix is a
    // caller-chosen tag ('c' for classes, 'g' for characters).
    std::string to_string(char tag = 'c') const;
    static PartFn parse(const std::string& s, int labels, char tag = 'c');
};

// All rho with ||rho|| = n over `labels` labels, canonical order.
std::vector<PartFn> enumerate_partfn(int labels, int n);

// Z_rho = prod_c z_{rho(c)} zeta_c^{l(rho(c))}; zeta = centralizer orders.
Integer big_Z(const PartFn& rho, const std::vector<long>& zeta);

}  // namespace wvo
