// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0
//
// Ordered JSON document with pinned float formatting. Reports must be
// byte-identical for identical inputs and seeds, so field order is the
// insertion order and every double is rendered with %.17g. Parsing of
// external JSON lives elsewhere (nlohmann); this type only emits.

#ifndef QAMP_TOOLS_JSON_DOC_HPP
#define QAMP_TOOLS_JSON_DOC_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qamp::cli {

class JsonDoc {
 public:
  JsonDoc() : kind_(Kind::kObject) {}

  static JsonDoc number(double v);
  static JsonDoc integer(std::int64_t v);
  static JsonDoc uinteger(std::uint64_t v);
  static JsonDoc boolean(bool v);
  static JsonDoc string(std::string v);
  static JsonDoc array();
  static JsonDoc object();

  // object builders (insertion order preserved)
  JsonDoc& put(const std::string& key, JsonDoc v);
  JsonDoc& put(const std::string& key, double v) { return put(key, number(v)); }
  JsonDoc& put(const std::string& key, std::uint64_t v) { return put(key, uinteger(v)); }
  JsonDoc& put(const std::string& key, std::int64_t v) { return put(key, integer(v)); }
  JsonDoc& put(const std::string& key, int v) { return put(key, integer(v)); }
  JsonDoc& put(const std::string& key, unsigned v) {
    return put(key, uinteger(static_cast<std::uint64_t>(v)));
  }
  JsonDoc& put(const std::string& key, bool v) { return put(key, boolean(v)); }
  JsonDoc& put(const std::string& key, const std::string& v) { return put(key, string(v)); }
  JsonDoc& put(const std::string& key, const char* v) { return put(key, string(v)); }

  JsonDoc& push(JsonDoc v);  // array builder

  /// Compact single-line JSON.
  std::string dump() const;

  /// Flat "path,value" lines (one per scalar), LF-terminated.
  std::string dump_csv() const;

  /// %.17g rendering used for every floating-point field.
  static std::string format_double(double v);

 private:
  enum class Kind { kNumber, kInteger, kUInteger, kBool, kString, kObject, kArray };
  Kind kind_;
  double num_ = 0.0;
  std::int64_t int_ = 0;
  std::uint64_t uint_ = 0;
  bool bool_ = false;
  std::string str_;
  std::vector<std::pair<std::string, JsonDoc>> members_;
  std::vector<JsonDoc> elements_;

  void write(std::string& out) const;
  void write_csv(const std::string& prefix, std::string& out) const;
  std::string scalar_text() const;
};

}  // namespace qamp::cli

#endif  // QAMP_TOOLS_JSON_DOC_HPP
