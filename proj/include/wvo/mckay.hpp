#pragma once

#include "wvo/lattice.hpp"

namespace wvo {

// Affine Cartan data extracted from a finite SU(2) subgroup through the
// McKay weight xi = 2*gamma_0 - pi. Node 0 is the trivial character (the
// affine node); nodes 1..r span the finite root lattice.
struct AffineData {
    Group g;
    std::string ade_label;                            // "affine A1", ..., "affine E8"
    std::vector<std::vector<long>> cartan;            // the Gram matrix A
    LatticeVec delta;                                 // degree vector (d_0..d_r)
    std::vector<std::tuple<int, int, int>> edges;     // (i, j, multiplicity), i < j
    bool eigen_ok = false;                            // A E = E D, exact
    bool radical_ok = false;                          // A delta = 0, kernel dim 1
};

// Builds and validates the affine data; hard error if the diagram is not an
// affine ADE diagram or any invariant fails.
AffineData build_affine(const Group& g);

// All alpha in the finite sublattice (coordinates over gamma_1..gamma_r,
// returned full-rank with coordinate 0 = 0) with <alpha, alpha> = 2; exact
// enumeration by diagonalizing the positive-definite finite block.
std::vector<LatticeVec> root_enumeration(const AffineData& ad);

// Expected number of roots for the detected label (A_m: m(m+1), D/E tables).
long expected_root_count(const std::string& ade_label);

struct RelationReport {
    long cases = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// The toroidal presentation realized by vertex operators on F_Gamma:
//   [h_i(n), h_j(m)] = n a_ij delta_{n,-m}
//   [h_i(n), x_m(+-a_j)] = +-a_ij x_{n+m}(+-a_j)
//   [x_n(a_i), x_m(-a_j)] = delta_ij eps(a_i,-a_i){h_i(n+m) + n delta_{n,-m}}
//   [x_n(+-a_i), x_m(+-a_i)] = 0
//   (ad x_0(+-a_i))^{1-a_ij} x_m(+-a_j) = 0   (i != j)
// with h_i(n) = a_n(gamma_i), x_n(+-a_i) = X_n(+-gamma_i), C = 1, checked on
// the degree-bounded test basis for all |n|, |m| <= mode_bound.
RelationReport toroidal_relation_check(const Group& g, long mode_bound, long degree_bound);

struct BasicRepReport {
    bool relations_ok = false;
    bool graded_dims_ok = false;
    std::vector<long> dims_space;      // dimension of each degree slice, built basis
    std::vector<long> dims_formula;    // same from the theta-function product formula
    std::vector<std::string> mismatches;
    std::string note;  // irreducibility is not finitely checkable; recorded untested
    bool ok() const { return relations_ok && graded_dims_ok; }
};

// The delta-reduced space: symmetric algebra on a_{-n}(gamma_i), i >= 1, over
// the finite sublattice. Verifies the affine commutation relations among
// X_n(beta), beta in the finite root system, and a_n(gamma_i) on degree
// slices <= degree_bound, plus the graded dimension against the product
// formula count.
BasicRepReport basic_rep_check(const Group& g, long degree_bound);

}  // namespace wvo
