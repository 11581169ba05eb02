// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_TYPES_HPP
#define QAMP_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qamp {

using Complex = std::complex<double>;

/// Index of a computational basis state; always checked against the
/// dimension of whatever it indexes into.
using BasisIndex = std::uint64_t;

// Fixed numeric contracts. These are deliberately constants, not knobs,
// so that test expectations are portable.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kZeroCouplingTol = 1e-14;
inline constexpr std::uint64_t kMaterializeCap = 4096;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (dimension mismatch,
/// out-of-range index, invalid parameter, non-unitary input, ...).
struct ContractError : Error {
  using Error::Error;
};

/// The start and target states are not connected through the given
/// operator: |<t|U|s>| is numerically zero, so amplification cannot
/// rotate the state toward the target.
struct ZeroCouplingError : ContractError {
  using ContractError::ContractError;
};

/// An operation would exceed a configured size cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

/// Malformed external input (values file, circuit description, ...).
struct ParseError : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ContractError(msg);
}

}  // namespace qamp

#endif  // QAMP_TYPES_HPP
