#include "cgc/format.hpp"

namespace cgc {

namespace {

std::string superscript(int e) {
    static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    const std::string plain = std::to_string(e);
    std::string out;
    for (char c : plain) out += digits[c - '0'];
    return out;
}

std::string alpha_power(int e) { return e == 1 ? std::string("α") : "α" + superscript(e); }

bool is_sum(const std::string& s) { return s.find('+') != std::string::npos; }

std::string parenthesize(const std::string& s) { return is_sum(s) ? "(" + s + ")" : s; }

} // namespace

std::string to_string(const Fq& a) {
    const FieldSpec& f = a.field();
    if (f.m() == 1) return std::to_string(a.code());
    if (a.is_zero()) return "0";
    if (a.is_one()) return "1";

    const Fq alpha = f.alpha();
    Fq power = alpha;
    for (int e = 1; e < static_cast<int>(f.q()) - 1; ++e) {
        if (power == a) return alpha_power(e);
        power *= alpha;
    }

    // α is not primitive for this modulus: fall back to the coefficient form.
    const auto c = a.coeffs();
    std::string out;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]);
            out += alpha_power(i);
        }
    }
    return out;
}

std::string to_string(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int k = a.degree(); k >= 0; --k) {
        const Fq c = a.coefficient(k);
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += to_string(c);
            continue;
        }
        if (!c.is_one()) out += parenthesize(to_string(c));
        out += "z";
        if (k > 1) out += superscript(k);
    }
    return out;
}

std::string to_string(const RatFn& a) {
    if (a.is_polynomial()) return to_string(a.num());
    return parenthesize(to_string(a.num())) + "/" + parenthesize(to_string(a.den()));
}

} // namespace cgc
