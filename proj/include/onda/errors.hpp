#pragma once

#include <stdexcept>
#include <string>

namespace onda {

enum class ErrorKind {
    Validation,  // caller violated a precondition / bad input file
    Numeric,     // divergence, non-finite values
    Io,          // filesystem / format problems
    Internal,    // should-not-happen
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

[[noreturn]] inline void fail_validation(const std::string& message) {
    fail(ErrorKind::Validation, message);
}

[[noreturn]] inline void fail_numeric(const std::string& message) {
    fail(ErrorKind::Numeric, message);
}

[[noreturn]] inline void fail_io(const std::string& message) {
    fail(ErrorKind::Io, message);
}

}  // namespace onda
