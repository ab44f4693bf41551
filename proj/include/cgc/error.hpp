#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgc {

enum class ErrorKind {
    NonPrimeCharacteristic,
    ReducibleModulus,
    MissingModulus,
    FieldTooLarge,
    DivisionByZero,
    MixedFields,
    ShapeMismatch,
    DegeneratePoints,
    InvalidSpec,
    DuplicatePoints,
    EmptyDual,
    SmoothnessFailure,
    PointNotOnCurve,
    InvalidDegree,
    InvalidGamma,
    RankDeficient,
    CatastrophicEncoder,
    SearchSpaceTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Mathematical failure raised by the library. The kind is stable and
/// machine-checkable; the message carries the offending value.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed input document. `key()` names the offending key path.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string key, const std::string& what)
        : std::runtime_error("at '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace cgc
