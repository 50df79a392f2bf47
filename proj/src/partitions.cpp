#include "wvo/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wvo {

long part_sum(const Partition& p) {
    long s = 0;
    for (int x : p) s += x;
    return s;
}

std::vector<int> multiplicities(const Partition& p) {
    int top = p.empty() ? 0 : p.front();
    std::vector<int> m(top + 1, 0);
    for (int x : p) ++m[x];
    return m;
}

Integer z_lambda(const Partition& p) {
    Integer z(1);
    auto m = multiplicities(p);
    for (size_t i = 1; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        z *= pow(Integer(static_cast<long>(i)), m[i]);
        z *= Integer::factorial(m[i]);
    }
    return z;
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::map<int, std::vector<Partition>> g_part_cache;
std::mutex g_part_mutex;

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::lock_guard<std::mutex> lock(g_part_mutex);
    auto it = g_part_cache.find(n);
    if (it != g_part_cache.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return g_part_cache.emplace(n, std::move(out)).first->second;
}

long PartFn::norm() const {
    long s = 0;
    for (const auto& q : p) s += part_sum(q);
    return s;
}

long PartFn::total_length() const {
    long s = 0;
    for (const auto& q : p) s += part_length(q);
    return s;
}

PartFn PartFn::relabel(const std::vector<int>& inv) const {
    PartFn out(labels());
    for (int x = 0; x < labels(); ++x) out.p[x] = p[inv[x]];
    return out;
}

std::string PartFn::to_string(char tag) const {
    std::ostringstream os;
    bool first = true;
    for (int x = 0; x < labels(); ++x) {
        if (p[x].empty()) continue;
        if (!first) os << ";";
        os << tag << x << ":[";
        for (size_t i = 0; i < p[x].size(); ++i) {
            if (i) os << ",";
            os << p[x][i];
        }
        os << "]";
        first = false;
    }
    return os.str();
}

PartFn PartFn::parse(const std::string& s, int labels, char tag) {
    PartFn out(labels);
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != tag) throw std::invalid_argument("PartFn::parse: expected label tag");
        ++pos;
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        int x = std::stoi(s.substr(start, pos - start));
        if (x < 0 || x >= labels) throw std::invalid_argument("PartFn::parse: label out of range");
        if (pos >= s.size() || s[pos] != ':') throw std::invalid_argument("PartFn::parse: expected ':'");
        ++pos;
        if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("PartFn::parse: expected '['");
        ++pos;
        Partition q;
        while (pos < s.size() && s[pos] != ']') {
            start = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            q.push_back(std::stoi(s.substr(start, pos - start)));
            if (pos < s.size() && s[pos] == ',') ++pos;
        }
        if (pos >= s.size()) throw std::invalid_argument("PartFn::parse: missing ']'");
        ++pos;  // ']'
        if (!std::is_sorted(q.rbegin(), q.rend()) || (!q.empty() && q.back() < 1))
            throw std::invalid_argument("PartFn::parse: parts must be weakly decreasing positive");
        out.p[x] = std::move(q);
        if (pos < s.size()) {
            if (s[pos] != ';') throw std::invalid_argument("PartFn::parse: expected ';'");
            ++pos;
        }
    }
    return out;
}

namespace {

void gen_partfn(int labels, int x, int remaining, PartFn& cur, std::vector<PartFn>& out) {
    if (x == labels) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (x == labels - 1) {
        for (const auto& q : partitions_of(remaining)) {
            cur.p[x] = q;
            gen_partfn(labels, x + 1, 0, cur, out);
        }
        cur.p[x].clear();
        return;
    }
    for (int m = remaining; m >= 0; --m) {
        for (const auto& q : partitions_of(m)) {
            cur.p[x] = q;
            gen_partfn(labels, x + 1, remaining - m, cur, out);
        }
    }
    cur.p[x].clear();
}

}  // namespace

std::vector<PartFn> enumerate_partfn(int labels, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partfn: negative n");
    if (labels <= 0) throw std::invalid_argument("enumerate_partfn: need at least one label");
    std::vector<PartFn> out;
    PartFn cur(labels);
    gen_partfn(labels, 0, n, cur, out);
    return out;
}

Integer big_Z(const PartFn& rho, const std::vector<long>& zeta) {
    if (rho.labels() != static_cast<int>(zeta.size()))
        throw std::invalid_argument("big_Z: label count mismatch");
    Integer z(1);
    for (int x = 0; x < rho.labels(); ++x) {
        z *= z_lambda(rho.p[x]);
        z *= pow(Integer(zeta[x]), part_length(rho.p[x]));
    }
    return z;
}

}  // namespace wvo
