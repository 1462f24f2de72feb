#include "qd/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qd {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    if (den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
    std::vector<Integer> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        Integer c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

} // namespace

const std::vector<Integer>& Cyclotomic::cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<Integer>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::function<const std::vector<Integer>&(int)> phi = [&](int n) -> const std::vector<Integer>& {
        auto found = cache.find(n);
        if (found != cache.end()) return found->second;
        std::vector<Integer> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        for (int d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const auto& pd = phi(d);
            num = poly_div_exact(std::move(num), pd);
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return phi(m);
}

Cyclotomic Cyclotomic::from_poly(int m, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(m);
    int deg = static_cast<int>(phi.size()) - 1;
    bool integral = true;
    for (const auto& c : poly)
        if (denominator(c) != 1) {
            integral = false;
            break;
        }
    if (integral) {
        // integer fast path: no gcd normalization while folding and reducing
        std::vector<Integer> folded(m, 0);
        for (size_t i = 0; i < poly.size(); ++i)
            if (poly[i] != 0) folded[i % m] += numerator(poly[i]);
        for (int i = m - 1; i >= deg; --i) {
            if (folded[i] == 0) continue;
            Integer c = std::move(folded[i]);
            folded[i] = 0;
            for (int j = 0; j < deg; ++j)
                if (phi[j] != 0) folded[i - deg + j] -= c * phi[j];
        }
        std::vector<Rational> out(deg);
        for (int i = 0; i < deg; ++i) out[i] = Rational(std::move(folded[i]));
        return Cyclotomic(m, std::move(out));
    }
    // fold zeta^m = 1
    std::vector<Rational> folded(m, Rational(0));
    for (size_t i = 0; i < poly.size(); ++i) folded[i % m] += poly[i];
    // reduce mod Phi_m
    for (int i = m - 1; i >= deg; --i) {
        Rational c = folded[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) folded[i - deg + j] -= c * Rational(phi[j]);
    }
    folded.resize(deg);
    return Cyclotomic(m, std::move(folded));
}

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
    if (m < 1) throw std::invalid_argument("root_of_unity: conductor must be >= 1");
    k = ((k % m) + m) % m;
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = 1;
    return from_poly(m, std::move(poly));
}

Cyclotomic Cyclotomic::embedded(int n) const {
    if (n == conductor_) return *this;
    if (n % conductor_ != 0)
        throw std::invalid_argument("embedded: target conductor not a multiple");
    int stride = n / conductor_;
    std::vector<Rational> poly(static_cast<size_t>(coeffs_.size() - 1) * stride + 1,
                               Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return from_poly(n, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (conductor_ == o.conductor_) {
        Cyclotomic a = *this;
        for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += o.coeffs_[i];
        return a;
    }
    int m = std::lcm(conductor_, o.conductor_);
    Cyclotomic a = embedded(m), b = o.embedded(m);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int m = std::lcm(conductor_, o.conductor_);
    Cyclotomic ea, eb;
    const Cyclotomic* a = this;
    const Cyclotomic* b = &o;
    if (conductor_ != m) {
        ea = embedded(m);
        a = &ea;
    }
    if (o.conductor_ != m) {
        eb = o.embedded(m);
        b = &eb;
    }
    // integer fast path (algebraic integers are the common case: character
    // values, roots of unity): convolve and reduce without gcd normalization
    bool integral = true;
    for (const auto& c : a->coeffs_)
        if (denominator(c) != 1) {
            integral = false;
            break;
        }
    if (integral)
        for (const auto& c : b->coeffs_)
            if (denominator(c) != 1) {
                integral = false;
                break;
            }
    if (integral) {
        std::vector<Integer> folded(m, 0);
        for (size_t i = 0; i < a->coeffs_.size(); ++i) {
            if (a->coeffs_[i] == 0) continue;
            Integer ai = numerator(a->coeffs_[i]);
            for (size_t j = 0; j < b->coeffs_.size(); ++j) {
                if (b->coeffs_[j] == 0) continue;
                folded[(i + j) % m] += ai * numerator(b->coeffs_[j]);
            }
        }
        const auto& phi = cyclotomic_polynomial(m);
        int deg = static_cast<int>(phi.size()) - 1;
        for (int i = m - 1; i >= deg; --i) {
            if (folded[i] == 0) continue;
            Integer c = std::move(folded[i]);
            folded[i] = 0;
            for (int j = 0; j < deg; ++j)
                if (phi[j] != 0) folded[i - deg + j] -= c * phi[j];
        }
        std::vector<Rational> out(deg);
        for (int i = 0; i < deg; ++i) out[i] = Rational(std::move(folded[i]));
        return Cyclotomic(m, std::move(out));
    }
    std::vector<Rational> poly(a->coeffs_.size() + b->coeffs_.size(), Rational(0));
    for (size_t i = 0; i < a->coeffs_.size(); ++i) {
        if (a->coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b->coeffs_.size(); ++j) {
            if (b->coeffs_[j] == 0) continue;
            poly[i + j] += a->coeffs_[i] * b->coeffs_[j];
        }
    }
    return from_poly(m, std::move(poly));
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
    Cyclotomic a = *this;
    for (auto& c : a.coeffs_) c *= q;
    return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return compare(*this, o) == 0; }

Cyclotomic Cyclotomic::conjugate() const { return galois(conductor_ - 1); }

Cyclotomic Cyclotomic::galois(long t) const {
    t = ((t % conductor_) + conductor_) % conductor_;
    if (std::gcd(static_cast<long>(conductor_), t) != 1)
        throw std::invalid_argument("galois: exponent not coprime to conductor");
    std::vector<Rational> poly(static_cast<size_t>(conductor_), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        poly[(i * t) % conductor_] += coeffs_[i];
    return from_poly(conductor_, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool Cyclotomic::is_rational_integer() const {
    return is_rational() && is_integer(coeffs_[0]);
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational number: " + str());
    return coeffs_[0];
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.embedded(m), y = b.embedded(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] < y.coeffs_[i]) return -1;
        if (x.coeffs_[i] > y.coeffs_[i]) return 1;
    }
    return 0;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return rational_to_string(coeffs_[0]);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (!first) {
            out << (c > 0 ? "+" : "-");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            out << rational_to_string(c);
            continue;
        }
        if (c != 1) out << rational_to_string(c) << "*";
        out << "z" << conductor_;
        if (i > 1) out << "^" << i;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace qd
