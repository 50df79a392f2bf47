#include "wvo/cayley.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wvo {

namespace {

std::string mat_key(const Mat2& m) {
    return m.a.to_string() + "|" + m.b.to_string() + "|" + m.c.to_string() + "|" + m.d.to_string();
}

Mat2 embed_mat(const Mat2& m, long conductor) {
    return {m.a.embedded(conductor), m.b.embedded(conductor), m.c.embedded(conductor),
            m.d.embedded(conductor)};
}

}  // namespace

CayleyGroup CayleyGroup::from_generators(const std::vector<Mat2>& gens, long conductor,
                                         int max_order) {
    CayleyGroup g;
    std::map<std::string, int> index;
    std::vector<Mat2> elems;
    Mat2 id = embed_mat(Mat2::identity(), conductor);
    elems.push_back(id);
    index[mat_key(id)] = 0;
    std::vector<Mat2> gen_norm;
    for (const auto& m : gens) gen_norm.push_back(embed_mat(m, conductor));

    // BFS closure: multiply every known element by every generator. Products
    // are re-embedded at the field conductor so the string key is canonical.
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& gen : gen_norm) {
            Mat2 prod = embed_mat(elems[head] * gen, conductor);
            std::string key = mat_key(prod);
            if (!index.count(key)) {
                if (static_cast<int>(elems.size()) >= max_order)
                    throw std::runtime_error("CayleyGroup: closure exceeds max_order");
                index[key] = static_cast<int>(elems.size());
                elems.push_back(prod);
            }
        }
    }

    g.n_ = static_cast<int>(elems.size());
    g.rep_ = elems;
    g.mul_.assign(g.n_, std::vector<int>(g.n_));
    for (int i = 0; i < g.n_; ++i)
        for (int j = 0; j < g.n_; ++j) {
            auto it = index.find(mat_key(embed_mat(elems[i] * elems[j], conductor)));
            if (it == index.end()) throw std::runtime_error("CayleyGroup: set not closed");
            g.mul_[i][j] = it->second;
        }
    g.id_ = 0;
    g.finish();
    return g;
}

CayleyGroup CayleyGroup::from_table(std::vector<std::vector<int>> table) {
    CayleyGroup g;
    g.n_ = static_cast<int>(table.size());
    if (g.n_ == 0) throw std::invalid_argument("CayleyGroup: empty table");
    for (const auto& row : table)
        if (static_cast<int>(row.size()) != g.n_)
            throw std::invalid_argument("CayleyGroup: table not square");
    g.mul_ = std::move(table);
    // Locate the identity.
    g.id_ = -1;
    for (int e = 0; e < g.n_; ++e) {
        bool ok = true;
        for (int i = 0; i < g.n_ && ok; ++i)
            if (g.mul_[e][i] != i || g.mul_[i][e] != i) ok = false;
        if (ok) {
            g.id_ = e;
            break;
        }
    }
    if (g.id_ < 0) throw std::invalid_argument("CayleyGroup: no identity in table");
    g.finish();
    return g;
}

void CayleyGroup::finish() {
    inv_.assign(n_, -1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (mul_[i][j] == id_) inv_[i] = j;
    for (int i = 0; i < n_; ++i)
        if (inv_[i] < 0) throw std::runtime_error("CayleyGroup: missing inverse");

    elt_order_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
        int x = i, k = 1;
        while (x != id_) {
            x = mul_[x][i];
            ++k;
            if (k > n_) throw std::runtime_error("CayleyGroup: order overflow (not a group?)");
        }
        elt_order_[i] = k;
    }

    // Conjugacy orbits.
    std::vector<int> orbit_of(n_, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n_; ++i) {
        if (orbit_of[i] >= 0) continue;
        std::vector<int> orbit;
        int c = static_cast<int>(orbits.size());
        for (int gidx = 0; gidx < n_; ++gidx) {
            int y = mul_[mul_[gidx][i]][inv_[gidx]];
            if (orbit_of[y] < 0) {
                orbit_of[y] = c;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    // Canonical class order: identity, then size, element order, min index.
    std::vector<int> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto rank = [&](int c) {
        const auto& o = orbits[c];
        bool is_id = (o.size() == 1 && o[0] == id_);
        return std::make_tuple(is_id ? 0 : 1, o.size(), elt_order_[o.front()], o.front());
    };
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return rank(a) < rank(b); });

    classes_.clear();
    class_of_.assign(n_, -1);
    for (size_t k = 0; k < perm.size(); ++k) {
        classes_.push_back(orbits[perm[k]]);
        for (int e : classes_.back()) class_of_[e] = static_cast<int>(k);
    }

    inv_class_.assign(classes_.size(), -1);
    for (size_t c = 0; c < classes_.size(); ++c) inv_class_[c] = class_of_[inv_[classes_[c].front()]];
}

int CayleyGroup::class_of_power(int c, long k) const {
    int g = class_rep(c);
    long m = elt_order_[g];
    long e = ((k % m) + m) % m;
    int x = id_;
    for (long i = 0; i < e; ++i) x = mul_[x][g];
    return class_of_[x];
}

std::vector<Cyclo> CayleyGroup::trace_by_class() const {
    if (!has_matrices()) throw std::runtime_error("CayleyGroup: no matrix representation stored");
    std::vector<Cyclo> out;
    out.reserve(classes_.size());
    for (size_t c = 0; c < classes_.size(); ++c) out.push_back(rep_[class_rep(c)].trace());
    return out;
}

long CayleyGroup::exponent() const {
    long e = 1;
    for (int i = 0; i < n_; ++i) e = std::lcm(e, static_cast<long>(elt_order_[i]));
    return e;
}

std::vector<std::vector<std::vector<long>>> CayleyGroup::class_algebra_constants() const {
    int nc = num_classes();
    std::vector<std::vector<std::vector<long>>> a(
        nc, std::vector<std::vector<long>>(nc, std::vector<long>(nc, 0)));
    for (int i = 0; i < nc; ++i)
        for (int x : classes_[i])
            for (int j = 0; j < nc; ++j)
                for (int y : classes_[j]) ++a[i][j][class_of_[mul_[x][y]]];
    // Normalize: a[i][j][k] counts pairs mapping onto the whole class k; the
    // structure constant is the count landing on one fixed element.
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            for (int k = 0; k < nc; ++k) {
                long sz = static_cast<long>(classes_[k].size());
                if (a[i][j][k] % sz != 0)
                    throw std::runtime_error("CayleyGroup: class algebra constants not integral");
                a[i][j][k] /= sz;
            }
    return a;
}

}  // namespace wvo
