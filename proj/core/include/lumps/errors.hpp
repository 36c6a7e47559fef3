#pragma once

#include <stdexcept>
#include <string>

namespace lumps {

/// Input violates a precondition (bad degree, singular matrix, empty grid, ...).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A numerical result failed its internal self-consistency check
/// (quadrature refinement disagreement, non-convergent extrapolation, ...).
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An improper integral was detected to diverge for the supplied profile.
class divergence_error : public std::runtime_error {
public:
    explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Base map too close to the degeneracy set (vanishing resultant) for the
/// requested operation.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lumps
