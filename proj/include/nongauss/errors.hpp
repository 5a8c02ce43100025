#pragma once

#include <stdexcept>
#include <string>

namespace nongauss {

// Zero-probability conditioning: no conditional state exists.
struct DegenerateConditioning : std::runtime_error {
    explicit DegenerateConditioning(const std::string& msg) : std::runtime_error(msg) {}
};

// The Fock truncation cannot hold the requested state to tolerance.
struct CutoffTooSmall : std::runtime_error {
    explicit CutoffTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation is defined only for the ideal setup (T_L = 1, eta = 1, nu = 0).
struct NotIdeal : std::runtime_error {
    explicit NotIdeal(const std::string& msg) : std::runtime_error(msg) {}
};

// Channel rows or prior probabilities fail normalization.
struct InvalidDistribution : std::runtime_error {
    explicit InvalidDistribution(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nongauss
