#pragma once

#include <stdexcept>
#include <string>

namespace weylab {

enum class ErrorKind {
    InvalidArgument,
    OutOfCertifiedRange,
    Capacity,
    Convergence,
    InternalConsistency,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(ErrorKind::InvalidArgument, msg);
}

}  // namespace weylab
