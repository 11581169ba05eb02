// Copyright (c) 2026 the qamp authors.
// SPDX-License-Identifier: Apache-2.0

#include "qamp/json_doc.hpp"

#include <cstdio>

namespace qamp::cli {

JsonDoc JsonDoc::number(double v) {
  JsonDoc d;
  d.kind_ = Kind::kNumber;
  d.num_ = v;
  return d;
}

JsonDoc JsonDoc::integer(std::int64_t v) {
  JsonDoc d;
  d.kind_ = Kind::kInteger;
  d.int_ = v;
  return d;
}

JsonDoc JsonDoc::uinteger(std::uint64_t v) {
  JsonDoc d;
  d.kind_ = Kind::kUInteger;
  d.uint_ = v;
  return d;
}

JsonDoc JsonDoc::boolean(bool v) {
  JsonDoc d;
  d.kind_ = Kind::kBool;
  d.bool_ = v;
  return d;
}

JsonDoc JsonDoc::string(std::string v) {
  JsonDoc d;
  d.kind_ = Kind::kString;
  d.str_ = std::move(v);
  return d;
}

JsonDoc JsonDoc::array() {
  JsonDoc d;
  d.kind_ = Kind::kArray;
  return d;
}

JsonDoc JsonDoc::object() { return JsonDoc(); }

JsonDoc& JsonDoc::put(const std::string& key, JsonDoc v) {
  members_.emplace_back(key, std::move(v));
  return *this;
}

JsonDoc& JsonDoc::push(JsonDoc v) {
  elements_.push_back(std::move(v));
  return *this;
}

std::string JsonDoc::format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_escaped(const std::string& s, std::string& out) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string JsonDoc::scalar_text() const {
  char buf[32];
  switch (kind_) {
    case Kind::kNumber:
      return format_double(num_);
    case Kind::kInteger:
      std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(int_));
      return buf;
    case Kind::kUInteger:
      std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(uint_));
      return buf;
    case Kind::kBool:
      return bool_ ? "true" : "false";
    default:
      return {};
  }
}

void JsonDoc::write(std::string& out) const {
  switch (kind_) {
    case Kind::kString:
      write_escaped(str_, out);
      break;
    case Kind::kObject: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : members_) {
        if (!first) out += ',';
        first = false;
        write_escaped(k, out);
        out += ':';
        v.write(out);
      }
      out += '}';
      break;
    }
    case Kind::kArray: {
      out += '[';
      bool first = true;
      for (const JsonDoc& v : elements_) {
        if (!first) out += ',';
        first = false;
        v.write(out);
      }
      out += ']';
      break;
    }
    default:
      out += scalar_text();
  }
}

std::string JsonDoc::dump() const {
  std::string out;
  write(out);
  out += '\n';
  return out;
}

void JsonDoc::write_csv(const std::string& prefix, std::string& out) const {
  switch (kind_) {
    case Kind::kObject:
      for (const auto& [k, v] : members_) {
        v.write_csv(prefix.empty() ? k : prefix + "." + k, out);
      }
      break;
    case Kind::kArray:
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        elements_[i].write_csv(prefix + "." + std::to_string(i), out);
      }
      break;
    case Kind::kString:
      out += prefix;
      out += ',';
      out += str_;
      out += '\n';
      break;
    default:
      out += prefix;
      out += ',';
      out += scalar_text();
      out += '\n';
  }
}

std::string JsonDoc::dump_csv() const {
  std::string out = "field,value\n";
  write_csv("", out);
  return out;
}

}  // namespace qamp::cli
