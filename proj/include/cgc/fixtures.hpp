#pragma once

#include "cgc/spec.hpp"

#include <string>
#include <vector>

namespace cgc {

/// A built-in worked example together with its published reference values.
struct Fixture {
    std::string name;
    std::string description;
    CodeSpec spec;
};

/// The five projective-line codes and the two elliptic-curve codes, in order:
/// p1-f3, p1-f4-a, p1-f4-b, p1-f5-a, p1-f5-b, elliptic-1, elliptic-2.
const std::vector<Fixture>& fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(const std::string& name);

} // namespace cgc
