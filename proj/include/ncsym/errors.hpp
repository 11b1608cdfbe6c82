#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncsym {

// Malformed index or expression text; position is a 0-based character offset.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class size_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class basis_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Brute-force expansion requested above the supported degree.
class degree_guard_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A computed identity failed; the message carries the counterexample.
class identity_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ncsym
