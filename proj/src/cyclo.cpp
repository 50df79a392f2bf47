#include "wvo/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wvo {

long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, divisor monic. a is consumed.
std::vector<long> divide_monic(std::vector<long> a, const std::vector<long>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const long da = static_cast<long>(a.size()) - 1;
    if (da < db) throw std::runtime_error("divide_monic: degree underflow");
    std::vector<long> q(da - db + 1, 0);
    for (long i = da; i >= db; --i) {
        long c = a[i];
        if (c == 0) continue;
        q[i - db] = c;
        for (long j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (long i = 0; i < db; ++i)
        if (a[i] != 0) throw std::runtime_error("divide_monic: inexact");
    return q;
}

std::map<long, std::vector<long>> g_cyclo_cache;
std::mutex g_cyclo_mutex;

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
    if (n <= 0 || n > 100000)
        throw std::invalid_argument("cyclotomic_polynomial: conductor out of range");
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(n);
    if (it != g_cyclo_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    std::vector<long> missing;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0 && !g_cyclo_cache.count(d)) missing.push_back(d);
    for (long d : missing) {
        std::vector<long> num(d + 1, 0);
        num[0] = -1;
        num[d] = 1;
        std::vector<long> acc = std::move(num);
        for (long e = 1; e < d; ++e)
            if (d % e == 0) acc = divide_monic(std::move(acc), g_cyclo_cache.at(e));
        g_cyclo_cache.emplace(d, std::move(acc));
    }
    return g_cyclo_cache.at(n);
}

namespace {

// Reduce a rational polynomial (arbitrary degree) mod Phi_n; returns phi(n)
// coefficients.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, long n) {
    const std::vector<long>& phi = cyclotomic_polynomial(n);
    const long deg = static_cast<long>(phi.size()) - 1;
    if (static_cast<long>(p.size()) < deg) p.resize(deg);
    for (long i = static_cast<long>(p.size()) - 1; i >= deg; --i) {
        if (p[i].is_zero()) continue;
        Rational c = p[i];
        for (long j = 0; j <= deg; ++j) {
            if (phi[j] == 0) continue;
            p[i - deg + j] -= c * Rational(phi[j]);
        }
    }
    p.resize(deg);
    return p;
}

std::vector<Rational> phi_as_rational(long n) {
    const std::vector<long>& phi = cyclotomic_polynomial(n);
    std::vector<Rational> out(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) out[i] = Rational(phi[i]);
    return out;
}

long poly_degree(const std::vector<Rational>& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

}  // namespace

Cyclo::Cyclo(long n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
    if (n_ <= 0) throw std::invalid_argument("Cyclo: conductor must be positive");
    if (static_cast<long>(c_.size()) != euler_phi(n_))
        throw std::invalid_argument("Cyclo: coefficient count != phi(conductor)");
}

Cyclo Cyclo::zeta(long n, long k) {
    if (n <= 0) throw std::invalid_argument("Cyclo::zeta: bad conductor");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> p(n);
    p[k] = Rational(1);
    return Cyclo(n, reduce_mod_phi(std::move(p), n));
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclo::to_rational() const {
    if (!is_rational()) throw std::runtime_error("Cyclo: not rational: " + to_string());
    return c_[0];
}

Cyclo Cyclo::embedded(long m) const {
    if (m == n_) return *this;
    if (m <= 0 || m % n_ != 0)
        throw std::invalid_argument("Cyclo::embedded: old conductor must divide new");
    const long stride = m / n_;
    std::vector<Rational> p(static_cast<size_t>(euler_phi(n_) - 1) * stride + 1);
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) p[j * stride] = c_[j];
    return Cyclo(m, reduce_mod_phi(std::move(p), m));
}

Cyclo Cyclo::galois(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    if (std::gcd(k, n_) != 1) throw std::invalid_argument("Cyclo::galois: k not coprime to conductor");
    if (n_ == 1 || k == 1) return *this;
    std::vector<Rational> p(n_);
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) p[(j * k) % n_] += c_[j];
    return Cyclo(n_, reduce_mod_phi(std::move(p), n_));
}

namespace {

std::pair<Cyclo, Cyclo> to_common(const Cyclo& a, const Cyclo& b) {
    long m = std::lcm(a.conductor(), b.conductor());
    return {a.embedded(m), b.embedded(m)};
}

}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common(a, b);
    std::vector<Rational> c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
    return Cyclo(x.conductor(), std::move(c));
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common(a, b);
    std::vector<Rational> c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs()[i];
    return Cyclo(x.conductor(), std::move(c));
}

Cyclo Cyclo::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& r : c) r = -r;
    return Cyclo(n_, std::move(c));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    // Rational fast path keeps conductors from inflating needlessly.
    if (a.is_rational()) {
        if (a.coeffs()[0].is_zero()) return Cyclo();
        std::vector<Rational> c = b.coeffs();
        for (auto& r : c) r *= a.coeffs()[0];
        return Cyclo(b.conductor(), std::move(c));
    }
    if (b.is_rational()) return b * a;
    auto [x, y] = to_common(a, b);
    const auto& u = x.coeffs();
    const auto& v = y.coeffs();
    std::vector<Rational> p(u.size() + v.size() - 1);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            p[i + j] += u[i] * v[j];
        }
    }
    return Cyclo(x.conductor(), reduce_mod_phi(std::move(p), x.conductor()));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::runtime_error("Cyclo: division by zero");
    if (is_rational()) return Cyclo(c_[0].inverse()).embedded(n_);
    // Extended Euclid in Q[z] against Phi_n, which is irreducible over Q,
    // so gcd(this, Phi_n) is a nonzero constant.
    std::vector<Rational> r0 = phi_as_rational(n_), r1 = c_;
    std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
    while (true) {
        long d1 = poly_degree(r1);
        if (d1 <= 0) break;
        long d0 = poly_degree(r0);
        // r0 = q*r1 + r; track t's alongside.
        std::vector<Rational> q(d0 - d1 + 1);
        std::vector<Rational> rem = r0;
        Rational lead = r1[d1];
        for (long i = d0; i >= d1; --i) {
            if (rem[i].is_zero()) continue;
            Rational c = rem[i] / lead;
            q[i - d1] = c;
            for (long j = 0; j <= d1; ++j) rem[i - d1 + j] -= c * r1[j];
        }
        std::vector<Rational> t2(std::max(t0.size(), q.size() + t1.size()));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    long d = poly_degree(r1);
    if (d != 0) throw std::runtime_error("Cyclo: inverse failed (gcd not constant)");
    Rational g = r1[0];
    for (auto& c : t1) c /= g;
    return Cyclo(n_, reduce_mod_phi(std::move(t1), n_));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = to_common(a, b);
    return x.coeffs() == y.coeffs();
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[i].to_string();
        if (i == 1)
            os << "*z";
        else if (i > 1)
            os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " @" << n_;
    return os.str();
}

Cyclo Cyclo::parse(const std::string& s) {
    auto at = s.rfind('@');
    if (at == std::string::npos) throw std::invalid_argument("Cyclo::parse: missing @conductor");
    long n = std::stol(s.substr(at + 1));
    std::vector<Rational> c(euler_phi(n));
    std::string body = s.substr(0, at);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < body.size() && body[pos] == ' ') ++pos;
    };
    skip_ws();
    bool any = false;
    while (pos < body.size()) {
        if (any) {
            if (body[pos] != '+') throw std::invalid_argument("Cyclo::parse: expected '+'");
            ++pos;
            skip_ws();
        }
        size_t start = pos;
        while (pos < body.size() && body[pos] != '*' && body[pos] != ' ') ++pos;
        Rational coeff(body.substr(start, pos - start));
        size_t power = 0;
        if (pos < body.size() && body[pos] == '*') {
            ++pos;
            if (pos >= body.size() || body[pos] != 'z')
                throw std::invalid_argument("Cyclo::parse: expected 'z'");
            ++pos;
            power = 1;
            if (pos < body.size() && body[pos] == '^') {
                ++pos;
                size_t estart = pos;
                while (pos < body.size() && isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
                power = std::stoul(body.substr(estart, pos - estart));
            }
        }
        if (power >= c.size()) throw std::invalid_argument("Cyclo::parse: power out of range");
        c[power] += coeff;
        any = true;
        skip_ws();
    }
    return Cyclo(n, std::move(c));
}

}  // namespace wvo
