#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace cuelab {

// Numeric domain violation (bad argument range, non-finite input).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Result would exceed the double exponent budget even after balancing.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Evaluation at a non-integrable singularity (e.g. |Z|^{-q} at a zero).
class singularity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Zero search could not reconcile its count with the main-term prediction.
class missed_zero_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A zero table violates the simple-zero separation requirement.
class multiple_zero_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Process-wide sink for structured warnings (heavy MC tails, alpha beyond
// the proven uniformity range, ...). Never throws; default is a no-op.
using warning_handler = std::function<void(const std::string&)>;

void set_warning_handler(warning_handler handler);
void emit_warning(const std::string& message);

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw domain_error(std::string(what) + ": non-finite argument");
}

}  // namespace cuelab
