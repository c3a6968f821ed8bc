#pragma once

#include <stdexcept>
#include <string>

namespace hadarot {

/// Raised when a caller breaks an operation's precondition (length mismatch,
/// non-power-of-two dimension, out-of-range argument).
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The O(d^2) reference multiply refuses dimensions above its guard.
class OracleTooLarge : public ContractError {
public:
    using ContractError::ContractError;
};

/// t outside [0, 1 - m_d] for the Wasserstein lower-bound functional.
class AdmissibilityError : public ContractError {
public:
    using ContractError::ContractError;
};

/// Invalid experiment / verifier configuration (maps to CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hadarot
