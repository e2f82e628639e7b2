#pragma once

#include <stdexcept>
#include <string>

namespace asai {

enum class ErrorKind { Io, Schema, Coverage, Domain, Identity };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }
[[noreturn]] inline void domain_error(const std::string& what) { throw Error(ErrorKind::Domain, what); }

}  // namespace asai
