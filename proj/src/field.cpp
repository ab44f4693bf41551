#include "cgc/field.hpp"

#include "cgc/error.hpp"

#include <string>

namespace cgc {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over F_p used only while building tables.
using Digits = std::vector<int>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Digits poly_mod(Digits a, const Digits& b, int p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const int c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const Digits& modulus, int p) {
    const int m = static_cast<int>(modulus.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Digits f(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                f[i] = static_cast<int>(v % p);
                v /= p;
            }
            f[d] = 1;
            if (poly_mod(modulus, f, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

struct FieldSpec::Tables {
    int p = 0;
    int m = 0;
    Symbol q = 0;
    std::vector<int> modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;

    Digits digits(Symbol c) const {
        Digits d(m, 0);
        for (int i = 0; i < m; ++i) {
            d[i] = static_cast<int>(c % p);
            c /= p;
        }
        return d;
    }

    Symbol code(const Digits& d) const {
        Symbol c = 0;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) c = c * p + d[i];
        return c;
    }
};

FieldSpec FieldSpec::make(int p, int m, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (m < 1) throw Error(ErrorKind::InvalidSpec, "extension degree m = " + std::to_string(m));

    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorKind::FieldTooLarge,
                        "q exceeds " + std::to_string(kMaxOrder));
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<Symbol>(q);

    if (m > 1) {
        if (!modulus) throw Error(ErrorKind::MissingModulus, "m > 1 requires a modulus");
        if (static_cast<int>(modulus->size()) != m + 1)
            throw Error(ErrorKind::InvalidSpec, "modulus must have m+1 coefficients");
        for (int c : *modulus)
            if (c < 0 || c >= p) throw Error(ErrorKind::InvalidSpec, "modulus coefficient out of range");
        if (modulus->back() != 1) throw Error(ErrorKind::InvalidSpec, "modulus must be monic");
        if (!is_irreducible(*modulus, p)) throw Error(ErrorKind::ReducibleModulus, "modulus has a factor over F_p");
        t->modulus = *modulus;
    }

    const Symbol qq = t->q;
    t->add.resize(static_cast<std::size_t>(qq) * qq);
    t->mul.resize(static_cast<std::size_t>(qq) * qq);
    t->neg.resize(qq);
    t->inv.resize(qq, 0);

    std::vector<Digits> dig(qq);
    for (Symbol a = 0; a < qq; ++a) dig[a] = t->digits(a);

    for (Symbol a = 0; a < qq; ++a) {
        Digits n(m);
        for (int i = 0; i < m; ++i) n[i] = (p - dig[a][i]) % p;
        t->neg[a] = static_cast<std::uint16_t>(t->code(n));
        for (Symbol b = 0; b < qq; ++b) {
            Digits s(m);
            for (int i = 0; i < m; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
            t->add[a * qq + b] = static_cast<std::uint16_t>(t->code(s));

            Digits prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + dig[a][i] * dig[b][j]) % p;
            if (m > 1) prod = poly_mod(prod, t->modulus, p);
            prod.resize(m, 0);
            t->mul[a * qq + b] = static_cast<std::uint16_t>(t->code(prod));
        }
    }
    for (Symbol a = 1; a < qq; ++a)
        for (Symbol b = 1; b < qq; ++b)
            if (t->mul[a * qq + b] == 1) {
                t->inv[a] = static_cast<std::uint16_t>(b);
                break;
            }

    return FieldSpec(std::move(t));
}

int FieldSpec::p() const noexcept { return t_->p; }
int FieldSpec::m() const noexcept { return t_->m; }
Symbol FieldSpec::q() const noexcept { return t_->q; }
const std::vector<int>& FieldSpec::modulus() const noexcept { return t_->modulus; }

Symbol FieldSpec::add(Symbol a, Symbol b) const noexcept { return t_->add[a * t_->q + b]; }
Symbol FieldSpec::sub(Symbol a, Symbol b) const noexcept { return t_->add[a * t_->q + t_->neg[b]]; }
Symbol FieldSpec::mul(Symbol a, Symbol b) const noexcept { return t_->mul[a * t_->q + b]; }
Symbol FieldSpec::neg(Symbol a) const noexcept { return t_->neg[a]; }

Symbol FieldSpec::inv(Symbol a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
    return t_->inv[a];
}

Symbol FieldSpec::pow(Symbol a, std::uint64_t e) const noexcept {
    Symbol result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Fq FieldSpec::element(Symbol code) const {
    if (code >= q()) throw Error(ErrorKind::InvalidSpec, "element code " + std::to_string(code) + " out of range");
    return Fq(*this, code);
}

Fq FieldSpec::from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > m())
        throw Error(ErrorKind::InvalidSpec, "too many coefficients for F_q element");
    Digits d(m(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0 || coeffs[i] >= p())
            throw Error(ErrorKind::InvalidSpec, "coefficient " + std::to_string(coeffs[i]) + " not reduced mod p");
        d[i] = coeffs[i];
    }
    return Fq(*this, t_->code(d));
}

Fq FieldSpec::from_int(long long v) const {
    const long long r = ((v % p()) + p()) % p();
    return Fq(*this, static_cast<Symbol>(r));
}

Fq FieldSpec::zero() const { return Fq(*this, 0); }
Fq FieldSpec::one() const { return Fq(*this, 1); }

Fq FieldSpec::alpha() const {
    if (m() < 2) throw Error(ErrorKind::InvalidSpec, "prime field has no extension generator");
    return Fq(*this, static_cast<Symbol>(p()));
}

std::vector<Fq> FieldSpec::elements() const {
    std::vector<Fq> out;
    out.reserve(q());
    for (Symbol c = 0; c < q(); ++c) out.emplace_back(*this, c);
    return out;
}

std::vector<int> FieldSpec::coeffs(Symbol code) const { return t_->digits(code); }

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
    if (t_ == other.t_) return true;
    return t_->p == other.t_->p && t_->m == other.t_->m && t_->modulus == other.t_->modulus;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw Error(ErrorKind::MixedFields, "operands live in different fields");
}

Fq::Fq(FieldSpec field, Symbol code) : field_(std::move(field)), code_(code) {}

Fq Fq::inverse() const { return Fq(field_, field_.inv(code_)); }
Fq Fq::pow(std::uint64_t e) const { return Fq(field_, field_.pow(code_, e)); }
Fq Fq::operator-() const { return Fq(field_, field_.neg(code_)); }

Fq& Fq::operator+=(const Fq& o) {
    require_same_field(field_, o.field_);
    code_ = field_.add(code_, o.code_);
    return *this;
}

Fq& Fq::operator-=(const Fq& o) {
    require_same_field(field_, o.field_);
    code_ = field_.sub(code_, o.code_);
    return *this;
}

Fq& Fq::operator*=(const Fq& o) {
    require_same_field(field_, o.field_);
    code_ = field_.mul(code_, o.code_);
    return *this;
}

Fq& Fq::operator/=(const Fq& o) {
    require_same_field(field_, o.field_);
    code_ = field_.mul(code_, field_.inv(o.code_));
    return *this;
}

} // namespace cgc
