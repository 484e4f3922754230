#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace rb {
namespace io {

using Json = nlohmann::ordered_json;

/// Deterministic rendering: keys in insertion order, floats as %.17g,
/// non-finite floats as null, arrays of scalars on one line.
std::string Dump(const Json& value, int indent = 2);

/// A well-formed document whose content does not match the expected schema.
/// `pointer` is an RFC 6901 JSON pointer to the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Maps the JSON pointer of every value in a syntactically valid document to
/// the 1-based line on which it starts.
std::map<std::string, int> LocateLines(std::string_view text);

/// Line for `pointer`, falling back to its nearest located ancestor.
int LineFor(const std::map<std::string, int>& lines, std::string pointer);

std::string PointerEscape(std::string_view key);

}  // namespace io
}  // namespace rb
