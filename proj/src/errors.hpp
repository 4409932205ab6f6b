#ifndef SEQNET_ERRORS_HPP
#define SEQNET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

// Requested quantity is mathematically undefined for the given data.
class DomainError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace seqnet

#endif
