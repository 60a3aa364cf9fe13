#pragma once

#include <stdexcept>
#include <string>

namespace hardpairs {

enum class ErrorKind {
    MalformedWord,
    SizeMismatch,
    NoParent,
    NotInternal,
    SizeGuardExceeded,
    NotCommon,
    NotDifficultInput,
    SizeTooSmall,
};

// Domain errors raised by the library. Contract violations that indicate a
// bug in the library itself are reported as std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hardpairs
