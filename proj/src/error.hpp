#pragma once

#include <stdexcept>
#include <string>

namespace mpspec {

// Error categories align with the C API status codes (see include/mpspec/mpspec.h):
// io      -> cannot open / read / write a file
// format  -> file content or format tag is not understood
// invalid -> a precondition of an operation was violated
// numeric -> a numerical routine failed to meet its contract
enum class ErrorKind { Io = 1, Format = 2, Invalid = 3, Numeric = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};
struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error(ErrorKind::Format, what) {}
};
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(ErrorKind::Invalid, what) {}
};
struct NumericError : Error {
    explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace mpspec
