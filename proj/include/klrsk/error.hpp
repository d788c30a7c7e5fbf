#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klrsk {

enum class ErrorKind {
    CapExceeded,
    ZeroMultisegment,
    ZeroWeight,
    NotPermissible,
    InvalidCertificate,
    InternalInconsistency,
    MalformedLadder,
    WeightMismatch,
    InvalidSegment,
    NoSuchSubquotient,
    Parse,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for every domain failure; `kind()` says which.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace klrsk
