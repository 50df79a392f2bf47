#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wvo/cyclo.hpp"

namespace wvo {

struct Mat2 {
    Cyclo a, b, c, d;  // row-major [[a, b], [c, d]]

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Cyclo trace() const { return a + d; }
    static Mat2 identity() { return {Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(1)}; }
};

// A concrete finite group: multiplication table, inverses, element orders,
// conjugacy classes. Classes are ordered identity first, then by increasing
// size, ties broken by element order then by minimal element index. This is
// the element-level engine behind every brute-force oracle; it is immutable
// once built.
class CayleyGroup {
  public:
    // Closure of 2x2 matrix generators; all entries are normalized to
    // `conductor` for canonical hashing. Throws if closure exceeds max_order.
    static CayleyGroup from_generators(const std::vector<Mat2>& gens, long conductor,
                                       int max_order = 10000);
    static CayleyGroup from_table(std::vector<std::vector<int>> table);

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int i, int j) const { return mul_[i][j]; }
    int inverse(int i) const { return inv_[i]; }
    int element_order(int i) const { return elt_order_[i]; }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<int>& class_members(int c) const { return classes_[c]; }
    int class_of(int i) const { return class_of_[i]; }
    int class_rep(int c) const { return classes_[c].front(); }
    int inverse_class(int c) const { return inv_class_[c]; }
    long centralizer_order(int c) const { return n_ / static_cast<long>(classes_[c].size()); }
    int class_element_order(int c) const { return elt_order_[class_rep(c)]; }
    // Class of g^k for g in class c (well defined).
    int class_of_power(int c, long k) const;

    bool has_matrices() const { return !rep_.empty(); }
    const Mat2& matrix(int i) const { return rep_[i]; }
    // Trace of the defining 2-dim representation on each class.
    std::vector<Cyclo> trace_by_class() const;

    long exponent() const;  // lcm of element orders

    // Class-algebra structure constants: number of (x, y) with x in class i,
    // y in class j, xy = fixed representative of class k.
    std::vector<std::vector<std::vector<long>>> class_algebra_constants() const;

  private:
    CayleyGroup() = default;
    void finish();  // inverses, orders, classes, ordering

    int n_ = 0;
    int id_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> elt_order_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> inv_class_;
    std::vector<Mat2> rep_;
};

}  // namespace wvo
