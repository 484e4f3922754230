#include "rb/io/json.h"

namespace rb {
namespace io {
namespace {

class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {}

  std::map<std::string, int> Run() {
    SkipSpace();
    if (pos_ < text_.size()) Value("");
    return std::move(lines_);
  }

 private:
  char Peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void Advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           (Peek() == ' ' || Peek() == '\t' || Peek() == '\n' || Peek() == '\r')) {
      Advance();
    }
  }

  std::string String() {
    std::string raw;
    Advance();  // opening quote
    while (pos_ < text_.size() && Peek() != '"') {
      if (Peek() == '\\') {
        raw += Peek();
        Advance();
      }
      if (pos_ < text_.size()) {
        raw += Peek();
        Advance();
      }
    }
    if (pos_ < text_.size()) Advance();  // closing quote
    // Keys are decoded properly so pointers match the parsed document.
    try {
      return nlohmann::json::parse("\"" + raw + "\"").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      return raw;
    }
  }

  void Value(const std::string& pointer) {
    lines_.emplace(pointer, line_);
    const char c = Peek();
    if (c == '{') {
      Advance();
      SkipSpace();
      while (pos_ < text_.size() && Peek() != '}') {
        const int key_line = line_;
        const std::string key = String();
        SkipSpace();
        if (Peek() == ':') Advance();
        SkipSpace();
        const std::string child = pointer + "/" + PointerEscape(key);
        Value(child);
        lines_[child] = key_line;
        SkipSpace();
        if (Peek() == ',') Advance();
        SkipSpace();
      }
      if (pos_ < text_.size()) Advance();
    } else if (c == '[') {
      Advance();
      SkipSpace();
      int index = 0;
      while (pos_ < text_.size() && Peek() != ']') {
        Value(pointer + "/" + std::to_string(index++));
        SkipSpace();
        if (Peek() == ',') Advance();
        SkipSpace();
      }
      if (pos_ < text_.size()) Advance();
    } else if (c == '"') {
      String();
    } else {
      while (pos_ < text_.size() && Peek() != ',' && Peek() != ']' && Peek() != '}' &&
             Peek() != ' ' && Peek() != '\n' && Peek() != '\t' && Peek() != '\r') {
        Advance();
      }
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

}  // namespace

std::string PointerEscape(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::map<std::string, int> LocateLines(std::string_view text) {
  return Locator(text).Run();
}

int LineFor(const std::map<std::string, int>& lines, std::string pointer) {
  while (true) {
    const auto it = lines.find(pointer);
    if (it != lines.end()) return it->second;
    if (pointer.empty()) return 1;
    pointer.erase(pointer.rfind('/'));
  }
}

}  // namespace io
}  // namespace rb
