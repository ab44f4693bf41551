#pragma once

#include "cgc/poly.hpp"

namespace cgc {

/// Element of F_q(z) kept in canonical form after every operation: numerator
/// and denominator coprime, denominator monic, zero stored as 0/1. Canonical
/// form makes structural equality coincide with equality in F_q(z).
class RatFn {
public:
    explicit RatFn(FieldSpec field);
    RatFn(Poly num);
    RatFn(const Fq& constant);
    /// Throws DivisionByZero for den = 0.
    RatFn(Poly num, Poly den);

    static RatFn zero(const FieldSpec& field) { return RatFn(field); }
    static RatFn one(const FieldSpec& field) { return RatFn(field.one()); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const FieldSpec& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    /// Throws DivisionByZero for the zero function.
    RatFn inverse() const;
    /// Integer power; negative exponents invert first.
    RatFn pow(int e) const;

    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);

    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

    friend bool operator==(const RatFn& a, const RatFn& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();

    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFn& a) { return a.is_zero(); }
inline RatFn zero_like(const RatFn& a) { return RatFn(a.field()); }
inline RatFn one_like(const RatFn& a) { return RatFn::one(a.field()); }
inline RatFn inverse(const RatFn& a) { return a.inverse(); }

} // namespace cgc
