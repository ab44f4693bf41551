#pragma once

#include "cgc/matrix.hpp"
#include "cgc/ratfn.hpp"

#include <string>

namespace cgc {

// Human-readable rendering. Extension elements are written as powers of α
// whenever they are one (α², not α+1 over F_4); polynomials descend in z.

std::string to_string(const Fq& a);
std::string to_string(const Poly& a);
std::string to_string(const RatFn& a);

template <RingScalar T>
std::string to_string(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "(";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += to_string(m(i, j));
        }
        out += ")\n";
    }
    return out;
}

} // namespace cgc
