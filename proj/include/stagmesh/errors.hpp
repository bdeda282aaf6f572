#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stagmesh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two operands live on different grids.
class GridMismatchError : public Error {
public:
    using Error::Error;
};

/// A field contains NaN or Inf samples.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// A shifted diagonal (or 2x2 mode-wise) solve hit a non-positive / singular mode.
class SingularSolveError : public Error {
public:
    using Error::Error;
};

/// The arctangent auxiliary update left the principal branch (-pi/2, pi/2).
class BranchError : public Error {
public:
    using Error::Error;
};

/// The shifted energy theta*E_tot + C0 feeding a log-form update is not positive.
class EnergyShiftError : public Error {
public:
    using Error::Error;
};

/// Invalid physical parameter or scheme configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A time step produced a non-finite state.
class BlowUpError : public Error {
public:
    BlowUpError(const std::string& what, long step) : Error(what), step_(step) {}
    [[nodiscard]] long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace stagmesh
