#include "cgc/error.hpp"

namespace cgc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::MissingModulus: return "MissingModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DegeneratePoints: return "DegeneratePoints";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::EmptyDual: return "EmptyDual";
    case ErrorKind::SmoothnessFailure: return "SmoothnessFailure";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidGamma: return "InvalidGamma";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::CatastrophicEncoder: return "CatastrophicEncoder";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    }
    return "Unknown";
}

} // namespace cgc
