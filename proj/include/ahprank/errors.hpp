#ifndef AHPRANK_ERRORS_HPP
#define AHPRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ahprank {

// Content-level problem in an input document (bad header, out-of-range
// value, unknown id). Maps to exit code 1 in the CLI.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level problem (missing file, unwritable directory). Maps to
// exit code 2 in the CLI.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition or numeric failure inside the AHP core.
class AhpError : public std::runtime_error {
  public:
    explicit AhpError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ahprank

#endif
