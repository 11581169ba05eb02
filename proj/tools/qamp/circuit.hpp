// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef QAMP_TOOLS_CIRCUIT_HPP
#define QAMP_TOOLS_CIRCUIT_HPP

#include <string>
#include <vector>

#include "qamp/linear_op.hpp"

namespace qamp::cli {

/// Reads a JSON gate list for an n-qubit register. Supported gates:
///   {"type": "h", "qubit": q}
///   {"type": "phase", "state": x, "angle": radians}
///   {"type": "invert", "states": [x, ...]}
///   {"type": "dense", "matrix": [[[re, im], ...], ...]}
/// Dense matrices must be 2^n x 2^n and unitary.
std::vector<LinearOp> load_circuit(const std::string& path, unsigned n);

}  // namespace qamp::cli

#endif  // QAMP_TOOLS_CIRCUIT_HPP
