#ifndef LCISR_ERROR_HPP
#define LCISR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lcisr {

enum class ErrorKind {
    EmptyInput,
    UncoveredVertex,
    VertexOutOfRange,
    NotAFace,
    NotSquarefree,
    DegreeOneGenerator,
    ZeroIdeal,
    DimensionMismatch,
    WrongDimension,
    PreconditionFailed,
    NotCI,
    InfiniteCohomology,
    InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::UncoveredVertex: return "UncoveredVertex";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::DegreeOneGenerator: return "DegreeOneGenerator";
        case ErrorKind::ZeroIdeal: return "ZeroIdeal";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotCI: return "NotCI";
        case ErrorKind::InfiniteCohomology: return "InfiniteCohomology";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lcisr

#endif
