#include <cmath>
#include <cstdio>

#include "rb/io/json.h"

namespace rb {
namespace io {
namespace {

bool IsScalar(const Json& v) { return !v.is_array() && !v.is_object(); }

void Write(const Json& v, int indent, int depth, std::string& out) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  switch (v.type()) {
    case Json::value_t::null:
      out += "null";
      return;
    case Json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer:
      out += std::to_string(v.get<long long>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(v.get<unsigned long long>());
      return;
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        out += "null";
        return;
      }
      char buffer[40];
      std::snprintf(buffer, sizeof(buffer), "%.17g", d);
      out += buffer;
      return;
    }
    case Json::value_t::string:
      out += v.dump();
      return;
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : v) flat = flat && IsScalar(e);
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += "\n" + pad;
        Write(e, indent, depth + 1, out);
        first = false;
      }
      if (!flat) out += "\n" + close_pad;
      out += ']';
      return;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        out += "\n" + pad + Json(it.key()).dump() + ": ";
        Write(it.value(), indent, depth + 1, out);
        first = false;
      }
      out += "\n" + close_pad + '}';
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string Dump(const Json& value, int indent) {
  std::string out;
  Write(value, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace io
}  // namespace rb
