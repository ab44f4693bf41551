#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cgc {

/// Integer code of a field element: the coefficients c_0..c_{m-1} of
/// 1, α, ..., α^{m-1} read as base-p digits, c_0 least significant.
using Symbol = std::uint32_t;

class Fq;

/// The finite field F_{p^m}, presented as F_p[α]/(modulus). Cheap to copy:
/// all copies share one immutable set of arithmetic tables. Two specs compare
/// equal when p, m and the modulus agree.
class FieldSpec {
public:
    /// Largest supported field order. Tables are q×q.
    static constexpr Symbol kMaxOrder = 1024;

    /// Validates and builds F_{p^m}. `modulus` lists the coefficients of the
    /// defining polynomial in ascending order (length m+1, last entry 1) and is
    /// required iff m > 1.
    static FieldSpec make(int p, int m = 1, std::optional<std::vector<int>> modulus = std::nullopt);
    static FieldSpec prime(int p) { return make(p, 1); }

    int p() const noexcept;
    int m() const noexcept;
    Symbol q() const noexcept;
    /// Ascending coefficients; empty for prime fields.
    const std::vector<int>& modulus() const noexcept;

    Symbol add(Symbol a, Symbol b) const noexcept;
    Symbol sub(Symbol a, Symbol b) const noexcept;
    Symbol mul(Symbol a, Symbol b) const noexcept;
    Symbol neg(Symbol a) const noexcept;
    /// Throws DivisionByZero for a == 0.
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, std::uint64_t e) const noexcept;

    Fq element(Symbol code) const;
    /// Element with the given α-coefficients (ascending, length ≤ m, entries in [0,p)).
    Fq from_coeffs(std::span<const int> coeffs) const;
    /// Image of an integer in the prime subfield.
    Fq from_int(long long v) const;
    Fq zero() const;
    Fq one() const;
    /// The class of α. Only defined for m > 1 (InvalidSpec otherwise).
    Fq alpha() const;

    /// All q elements, ascending by code (0, 1, ..., α, α+1, ...).
    std::vector<Fq> elements() const;
    std::vector<int> coeffs(Symbol code) const;

    bool operator==(const FieldSpec& other) const noexcept;
    bool same_tables(const FieldSpec& other) const noexcept { return t_ == other.t_; }

private:
    struct Tables;
    explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// Throws MixedFields unless a and b describe the same field.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

/// A single element of a FieldSpec.
class Fq {
public:
    Fq(FieldSpec field, Symbol code);

    const FieldSpec& field() const noexcept { return field_; }
    Symbol code() const noexcept { return code_; }
    std::vector<int> coeffs() const { return field_.coeffs(code_); }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    Fq inverse() const;
    Fq pow(std::uint64_t e) const;

    Fq operator-() const;
    Fq& operator+=(const Fq& o);
    Fq& operator-=(const Fq& o);
    Fq& operator*=(const Fq& o);
    Fq& operator/=(const Fq& o);

    friend Fq operator+(Fq a, const Fq& b) { return a += b; }
    friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
    friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
    friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

    /// Equality includes the field.
    friend bool operator==(const Fq& a, const Fq& b) noexcept {
        return a.code_ == b.code_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    Symbol code_;
};

inline bool is_zero(const Fq& a) { return a.is_zero(); }
inline Fq zero_like(const Fq& a) { return a.field().zero(); }
inline Fq one_like(const Fq& a) { return a.field().one(); }
inline Fq inverse(const Fq& a) { return a.inverse(); }

} // namespace cgc
