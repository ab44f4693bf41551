#pragma once

#include "cgc/field.hpp"

#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace cgc {

/// Univariate polynomial in z over F_q. Coefficients are stored ascending by
/// power with no trailing zeros, so the zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    explicit Poly(FieldSpec field);
    Poly(FieldSpec field, std::vector<Symbol> codes);
    Poly(const Fq& constant);

    /// Ascending coefficients given as integers in the prime subfield.
    static Poly from_ints(const FieldSpec& field, std::initializer_list<long long> coeffs);
    static Poly from_coeffs(const FieldSpec& field, const std::vector<Fq>& coeffs);
    static Poly z(const FieldSpec& field) { return monomial(field.one(), 1); }
    static Poly monomial(const Fq& c, int power);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Symbol>& codes() const noexcept { return c_; }
    int degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of z^i (zero beyond the degree).
    Fq coefficient(int i) const;
    Symbol code(int i) const noexcept {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
    }
    /// Leading coefficient; zero for the zero polynomial.
    Fq lead() const { return coefficient(degree()); }

    Poly monic() const;
    Poly scaled(const Fq& c) const;
    /// Multiplication by z^k, k ≥ 0.
    Poly shifted(int k) const;
    Poly pow(unsigned e) const;
    Fq eval(const Fq& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.c_ == b.c_ && a.field_ == b.field_;
    }

private:
    void trim() noexcept;

    FieldSpec field_;
    std::vector<Symbol> c_;
};

/// Euclidean division: a = q·b + r with deg r < deg b. Throws DivisionByZero for b = 0.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws InvalidSpec when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic least common multiple of two nonzero polynomials.
Poly lcm(const Poly& a, const Poly& b);

inline bool is_zero(const Poly& a) { return a.is_zero(); }
inline Poly zero_like(const Poly& a) { return Poly(a.field()); }
inline Poly one_like(const Poly& a) { return Poly(a.field().one()); }

} // namespace cgc
