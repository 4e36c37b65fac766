#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ffl {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input lies outside the mathematical domain of an operation (non-fibered
// class, wrong congruence class, exceptional slope, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class NotPrimitiveError : public DomainError {
public:
    explicit NotPrimitiveError(std::int64_t gcd)
        : DomainError("class is not primitive (gcd = " + std::to_string(gcd) + ")"), gcd_(gcd) {}
    std::int64_t gcd() const noexcept { return gcd_; }

private:
    std::int64_t gcd_;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class GraphError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string token, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset) + " ('" + token + "')"),
          token_(std::move(token)), offset_(offset) {}
    const std::string& token() const noexcept { return token_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string token_;
    std::size_t offset_;
};

} // namespace ffl
