#pragma once

#include "qd/rational.hpp"

#include <string>
#include <vector>

namespace qd {

/// An exact element of Q(zeta_m), stored as a polynomial in zeta_m of
/// degree < deg(Phi_m), reduced modulo the m-th cyclotomic polynomial.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}
    explicit Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}

    /// zeta_m^k
    static Cyclotomic root_of_unity(int m, long k = 1);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Re-expresses the element in Q(zeta_n); n must be a multiple of the
    /// current conductor.
    Cyclotomic embedded(int n) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator*(const Rational& q) const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// zeta |-> zeta^{-1}
    Cyclotomic conjugate() const;
    /// zeta |-> zeta^t for gcd(t, conductor) = 1
    Cyclotomic galois(long t) const;

    bool is_zero() const;
    bool is_rational() const;
    bool is_rational_integer() const;
    /// Throws std::domain_error if not rational.
    Rational rational_value() const;

    /// Deterministic total order: (conductor-unified) coefficient lex.
    static int compare(const Cyclotomic& a, const Cyclotomic& b);

    /// "q" for rationals, otherwise "a0+a1*z12+a2*z12^2..." with exact
    /// rational coefficients.
    std::string str() const;

    /// Phi_m as integer coefficients, constant term first. Cached.
    static const std::vector<Integer>& cyclotomic_polynomial(int m);

private:
    int conductor_;
    std::vector<Rational> coeffs_; // size deg(Phi_conductor_)
    Cyclotomic(int m, std::vector<Rational> reduced)
        : conductor_(m), coeffs_(std::move(reduced)) {}
    /// Builds from a polynomial in zeta_m of any degree (folds zeta^m = 1,
    /// reduces mod Phi_m).
    static Cyclotomic from_poly(int m, std::vector<Rational> poly);
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& c) { return c * q; }

} // namespace qd
