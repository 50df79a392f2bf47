#pragma once

#include <string>
#include <vector>

#include "wvo/integer.hpp"

namespace wvo {

// An element of the cyclotomic field Q(zeta_N), stored as its canonical
// representative in the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th
// cyclotomic polynomial. Canonical form makes equality a coefficient
// comparison (after embedding both operands into the lcm conductor).
//
// Values are immutable after construction; all operations are pure.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1) {}  // zero in Q(zeta_1) = Q
    Cyclo(long v) : n_(1), c_{Rational(v)} {}
    explicit Cyclo(const Rational& r) : n_(1), c_{r} {}
    Cyclo(long n, std::vector<Rational> coeffs);  // validates length = phi(n)

    static Cyclo zeta(long n, long k = 1);  // zeta_n^k, k taken mod n

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const;  // throws if not rational
    long to_long() const { return to_rational().to_long(); }
    Integer to_integer() const { return to_rational().to_integer(); }
    bool is_integer() const { return is_rational() && to_rational().is_integer(); }

    // Same element expressed with conductor m; requires conductor() | m.
    Cyclo embedded(long m) const;

    // Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
    Cyclo galois(long k) const;
    // Complex conjugation zeta -> zeta^{N-1}.
    Cyclo conjugate() const { return galois(n_ == 1 ? 1 : n_ - 1); }

    Cyclo inverse() const;  // throws on zero

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // "c0 + c1*z + c2*z^2 ... @N" with rational coefficients "p" or "p/q";
    // zero terms omitted, zero itself rendered "0 @N". Bit-exact round trip
    // through parse().
    std::string to_string() const;
    static Cyclo parse(const std::string& s);

  private:
    long n_;
    std::vector<Rational> c_;
};

long euler_phi(long n);
// Coefficients of the N-th cyclotomic polynomial, degree phi(N), monic,
// index = power of z.
const std::vector<long>& cyclotomic_polynomial(long n);

inline Cyclo operator*(const Rational& r, const Cyclo& a) { return Cyclo(r) * a; }

}  // namespace wvo
