#ifndef SSCHUR_ERRORS_HPP
#define SSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sschur {

// Bad inputs: out-of-domain arguments, malformed parameter sets,
// truncation budgets that cannot be met.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal numerical self-checks failed (imaginary residues, refinement
// that does not converge). These indicate a broken computation, not bad input.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sschur

#endif
