#pragma once

#include <stdexcept>
#include <string>

namespace ringdim {

// Malformed or unsupported input: parse failures, domain/order mismatches,
// precondition violations. CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The residue ring has no free module representation (non-monic reduced
// basis). CLI maps this to exit code 2.
class not_free_error : public std::runtime_error {
public:
    explicit not_free_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ringdim
