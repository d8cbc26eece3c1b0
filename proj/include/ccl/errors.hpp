#pragma once

#include <stdexcept>
#include <string>

namespace ccl {

/// File content that cannot be interpreted (bad magic, malformed header,
/// truncated payload, out-of-range values).
class ParseError : public std::runtime_error {
public:
    enum class Kind { unsupported_magic, bad_header, truncated, bad_value };

    ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// OS-level I/O failure (open, read, write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ccl
