// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/circuit.hpp"

#include <fstream>

#include <json.hpp>

#include "qamp/transforms.hpp"
#include "qamp/types.hpp"

namespace qamp::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_gate(const std::string& path, std::size_t index,
                           const std::string& why) {
  throw ParseError(path + ": gate " + std::to_string(index) + ": " + why);
}

BasisIndex state_field(const json& g, const char* key, std::uint64_t dim,
                       const std::string& path, std::size_t index) {
  if (!g.contains(key) || !g[key].is_number_unsigned()) {
    bad_gate(path, index, std::string("missing or invalid \"") + key + "\"");
  }
  std::uint64_t x = g[key].get<std::uint64_t>();
  if (x >= dim) bad_gate(path, index, std::string("\"") + key + "\" out of range");
  return x;
}

LinearOp parse_dense(const json& g, std::uint64_t dim, const std::string& path,
                     std::size_t index) {
  const json& rows = g["matrix"];
  if (!rows.is_array() || rows.size() != dim) {
    bad_gate(path, index, "dense matrix must have 2^n rows");
  }
  DenseMatrix m(dim);
  for (std::uint64_t r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != dim) {
      bad_gate(path, index, "dense matrix must be square");
    }
    for (std::uint64_t c = 0; c < dim; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        bad_gate(path, index, "dense entries must be [re, im] pairs");
      }
      m.at(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  LinearOp op = LinearOp::dense(std::move(m));
  if (dim > LinearOp::kDenseValidateCap) {
    require(unitarity_defect(op) <= kUnitaryTol, "dense gate is not unitary");
  }
  return op;
}

}  // namespace

std::vector<LinearOp> load_circuit(const std::string& path, unsigned n) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open circuit file: " + path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw ParseError(path + ": invalid JSON");

  const json* gates = nullptr;
  if (doc.is_array()) {
    gates = &doc;
  } else if (doc.is_object() && doc.contains("gates") && doc["gates"].is_array()) {
    gates = &doc["gates"];
  } else {
    throw ParseError(path + ": expected a gate array or {\"gates\": [...]}");
  }

  const std::uint64_t dim = 1ULL << n;
  std::vector<LinearOp> ops;
  ops.reserve(gates->size());
  for (std::size_t i = 0; i < gates->size(); ++i) {
    const json& g = (*gates)[i];
    if (!g.is_object() || !g.contains("type") || !g["type"].is_string()) {
      bad_gate(path, i, "each gate needs a string \"type\"");
    }
    const std::string type = g["type"].get<std::string>();
    if (type == "h") {
      if (!g.contains("qubit") || !g["qubit"].is_number_unsigned()) {
        bad_gate(path, i, "\"h\" needs an unsigned \"qubit\"");
      }
      unsigned q = g["qubit"].get<unsigned>();
      if (q >= n) bad_gate(path, i, "\"qubit\" out of range");
      ops.push_back(LinearOp::single_qubit(dim, q, m_gate()));
    } else if (type == "phase") {
      BasisIndex x = state_field(g, "state", dim, path, i);
      if (!g.contains("angle") || !g["angle"].is_number()) {
        bad_gate(path, i, "\"phase\" needs a numeric \"angle\"");
      }
      ops.push_back(selective_phase(dim, {{x, g["angle"].get<double>()}}));
    } else if (type == "invert") {
      if (!g.contains("states") || !g["states"].is_array()) {
        bad_gate(path, i, "\"invert\" needs a \"states\" array");
      }
      std::vector<std::uint8_t> bits(dim, 0);
      for (const json& e : g["states"]) {
        if (!e.is_number_unsigned()) bad_gate(path, i, "states must be unsigned");
        std::uint64_t x = e.get<std::uint64_t>();
        if (x >= dim) bad_gate(path, i, "state out of range");
        bits[x] = 1;
      }
      ops.push_back(selective_inversion(dim, Predicate(dim, std::move(bits))));
    } else if (type == "dense") {
      if (!g.contains("matrix")) bad_gate(path, i, "\"dense\" needs a \"matrix\"");
      ops.push_back(parse_dense(g, dim, path, i));
    } else {
      bad_gate(path, i, "unknown gate type \"" + type + "\"");
    }
  }
  return ops;
}

}  // namespace qamp::cli
