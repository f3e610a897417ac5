#pragma once

#include <stdexcept>
#include <string>

namespace csdo {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid physical configuration or run parameters (rejected at construction).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// 1 + 2*s*omega*eta <= 0: rotation too fast for the requested spin branch.
class NonPositiveDiscriminant : public Error {
public:
    using Error::Error;
};

/// Energy radicand negative: parameters outside the bound-state regime.
class NonPhysicalRadicand : public Error {
public:
    using Error::Error;
};

/// Quantization divides by m*omega0*delta and that product is zero.
class ZeroFrequency : public Error {
public:
    using Error::Error;
};

/// Operation needs the finite light-cone radius but omega = 0.
class UnboundedDomain : public Error {
public:
    using Error::Error;
};

/// Kummer series parameter b is zero or a negative integer.
class PoleAtB : public Error {
public:
    using Error::Error;
};

/// Iteration cap reached without meeting the termination rule.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Eigenvalue refinement estimate exceeds the requested tolerance.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

/// Root scan hit its cap before bracketing the requested number of roots.
class NoSignChange : public Error {
public:
    using Error::Error;
};

/// Normalization requested for an identically zero sample.
class ZeroNorm : public Error {
public:
    using Error::Error;
};

} // namespace csdo
