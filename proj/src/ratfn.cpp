#include "cgc/ratfn.hpp"

#include "cgc/error.hpp"

namespace cgc {

RatFn::RatFn(FieldSpec field) : num_(field), den_(field.one()) {}

RatFn::RatFn(Poly num) : num_(std::move(num)), den_(num_.field().one()) {}

RatFn::RatFn(const Fq& constant) : num_(constant), den_(constant.field().one()) {}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(field().one());
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    if (!den_.is_monic()) {
        const Fq c = den_.lead().inverse();
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFn out(field());
    out.num_ = num_.pow(static_cast<unsigned>(e));
    out.den_ = den_.pow(static_cast<unsigned>(e));
    return out;
}

RatFn RatFn::operator-() const {
    RatFn out = *this;
    out.num_ = -num_;
    return out;
}

RatFn& RatFn::operator+=(const RatFn& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

} // namespace cgc
