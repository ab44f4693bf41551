#include "cgc/poly.hpp"

#include "cgc/error.hpp"

#include <algorithm>

namespace cgc {

Poly::Poly(FieldSpec field) : field_(std::move(field)) {}

Poly::Poly(FieldSpec field, std::vector<Symbol> codes) : field_(std::move(field)), c_(std::move(codes)) {
    for (Symbol c : c_)
        if (c >= field_.q()) throw Error(ErrorKind::InvalidSpec, "coefficient code out of range");
    trim();
}

Poly::Poly(const Fq& constant) : field_(constant.field()) {
    if (!constant.is_zero()) c_.push_back(constant.code());
}

Poly Poly::from_ints(const FieldSpec& field, std::initializer_list<long long> coeffs) {
    std::vector<Symbol> codes;
    codes.reserve(coeffs.size());
    for (long long v : coeffs) codes.push_back(field.from_int(v).code());
    return Poly(field, std::move(codes));
}

Poly Poly::from_coeffs(const FieldSpec& field, const std::vector<Fq>& coeffs) {
    std::vector<Symbol> codes;
    codes.reserve(coeffs.size());
    for (const Fq& c : coeffs) {
        require_same_field(field, c.field());
        codes.push_back(c.code());
    }
    return Poly(field, std::move(codes));
}

Poly Poly::monomial(const Fq& c, int power) {
    Poly out(c.field());
    if (c.is_zero()) return out;
    out.c_.assign(static_cast<std::size_t>(power) + 1, 0);
    out.c_.back() = c.code();
    return out;
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Fq Poly::coefficient(int i) const { return Fq(field_, code(i)); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Poly Poly::scaled(const Fq& c) const {
    require_same_field(field_, c.field());
    Poly out(field_);
    if (c.is_zero()) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.mul(c_[i], c.code());
    return out;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly out(field_);
    out.c_.assign(static_cast<std::size_t>(k), 0);
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly result(field_.one());
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Fq Poly::eval(const Fq& x) const {
    require_same_field(field_, x.field());
    Symbol acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x.code()), *it);
    return Fq(field_, acc);
}

Poly Poly::operator-() const {
    Poly out(field_);
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.neg(c_[i]);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Symbol> prod(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] = field_.add(prod[i + j], field_.mul(c_[i], o.c_[j]));
    }
    c_ = std::move(prod);
    trim();
    return *this;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const FieldSpec& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};

    std::vector<Symbol> rem = a.codes();
    const std::vector<Symbol>& bc = b.codes();
    const std::size_t db = bc.size() - 1;
    const Symbol inv_lead = f.inv(bc.back());
    std::vector<Symbol> quot(rem.size() - db, 0);

    for (std::size_t i = rem.size(); i-- > db;) {
        const Symbol c = f.mul(rem[i], inv_lead);
        quot[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, bc[j]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::InvalidSpec, "inexact polynomial division");
    return q;
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::DivisionByZero, "lcm with zero polynomial");
    return exact_div(a * b, gcd(a, b)).monic();
}

} // namespace cgc
