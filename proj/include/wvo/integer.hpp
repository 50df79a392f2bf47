#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace wvo {

// Arbitrary-precision integer, a value-type wrapper around GMP's mpz_t.
// Immutable in spirit: all operators return fresh values.
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    explicit Integer(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Integer: bad literal '" + s + "'");
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::runtime_error("Integer: value exceeds long");
        return mpz_get_si(z_);
    }
    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }
    Integer& operator+=(const Integer& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }
    Integer& operator-=(const Integer& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }
    Integer& operator*=(const Integer& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    // Exact division; throws if b does not divide a.
    friend Integer div_exact(const Integer& a, const Integer& b) {
        if (b.is_zero()) throw std::runtime_error("Integer: division by zero");
        if (!mpz_divisible_p(a.z_, b.z_))
            throw std::runtime_error("Integer: inexact division");
        Integer r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer pow(const Integer& a, unsigned long e) {
        Integer r;
        mpz_pow_ui(r.z_, a.z_, e);
        return r;
    }
    static Integer factorial(unsigned long n) {
        Integer r;
        mpz_fac_ui(r.z_, n);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator>(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  private:
    mpz_t z_;
};

// Exact rational, always canonical (lowest terms, positive denominator).
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw std::runtime_error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    explicit Rational(const Integer& n) {
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    }
    Rational(const Integer& n, const Integer& d) {
        if (d.is_zero()) throw std::runtime_error("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_num(q_, n.raw());
        mpq_set_den(q_, d.raw());
        mpq_canonicalize(q_);
    }
    // Parses "p" or "p/q".
    explicit Rational(const std::string& s) {
        mpq_init(q_);
        if (mpq_set_str(q_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: bad literal '" + s + "'");
        }
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

    Integer numerator() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Integer denominator() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }
    Integer to_integer() const {
        if (!is_integer()) throw std::runtime_error("Rational: not an integer");
        return numerator();
    }
    long to_long() const { return to_integer().to_long(); }

    // "p" when integral, "p/q" otherwise.
    std::string to_string() const {
        std::string s = numerator().to_string();
        if (!is_integer()) s += "/" + denominator().to_string();
        return s;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::runtime_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }
    Rational& operator/=(const Rational& b) {
        if (b.is_zero()) throw std::runtime_error("Rational: division by zero");
        mpq_div(q_, q_, b.q_);
        return *this;
    }
    Rational inverse() const {
        if (is_zero()) throw std::runtime_error("Rational: inverse of zero");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }

  private:
    mpq_t q_;
};

}  // namespace wvo
