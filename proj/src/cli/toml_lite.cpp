#include "nuq/cli/toml_lite.hpp"

#include <cctype>
#include <charconv>

#include "nuq/errors.hpp"

namespace nuq::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  nlohmann::json run() {
    nlohmann::json root = nlohmann::json::object();
    nlohmann::json* table = &root;
    while (true) {
      skip_ws_and_comments(true);
      if (eof()) break;
      if (peek() == '[') {
        ++i_;
        if (peek() == '[') fail("arrays of tables are not supported");
        table = &root;
        while (true) {
          skip_inline_ws();
          const std::string key = parse_key();
          nlohmann::json& next = (*table)[key];
          if (next.is_null()) next = nlohmann::json::object();
          if (!next.is_object()) fail("'" + key + "' is not a table");
          table = &next;
          skip_inline_ws();
          if (peek() == '.') {
            ++i_;
            continue;
          }
          expect(']');
          break;
        }
        end_of_line();
        continue;
      }
      const std::string key = parse_key();
      skip_inline_ws();
      expect('=');
      skip_inline_ws();
      if (table->contains(key)) fail("duplicate key '" + key + "'");
      (*table)[key] = parse_value();
      end_of_line();
    }
    return root;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }

  [[noreturn]] void fail(const std::string& what) const {
    int line = 1;
    for (std::size_t k = 0; k < i_ && k < s_.size(); ++k)
      if (s_[k] == '\n') ++line;
    throw ConfigError("toml line " + std::to_string(line), what);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  void skip_inline_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++i_;
  }

  void skip_ws_and_comments(bool newlines) {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++i_;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  void end_of_line() {
    skip_inline_ws();
    if (peek() == '#')
      while (!eof() && peek() != '\n') ++i_;
    if (peek() == '\r') ++i_;
    if (!eof() && peek() != '\n') fail("unexpected text after value");
  }

  std::string parse_key() {
    if (peek() == '"') return parse_string();
    std::string k;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) k += s_[i_++];
    if (k.empty()) fail("expected a key");
    return k;
  }

  std::string parse_string() {
    expect('"');
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = s_[i_++];
      if (c == '"') break;
      if (c == '\\') {
        if (eof()) fail("unterminated escape");
        const char e = s_[i_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  nlohmann::json parse_value() {
    const char c = peek();
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (s_.compare(i_, 4, "true") == 0) {
      i_ += 4;
      return true;
    }
    if (s_.compare(i_, 5, "false") == 0) {
      i_ += 5;
      return false;
    }
    return parse_number();
  }

  nlohmann::json parse_array() {
    expect('[');
    nlohmann::json arr = nlohmann::json::array();
    while (true) {
      skip_ws_and_comments(true);
      if (peek() == ']') {
        ++i_;
        return arr;
      }
      arr.push_back(parse_value());
      skip_ws_and_comments(true);
      if (peek() == ',') {
        ++i_;
        continue;
      }
      expect(']');
      return arr;
    }
  }

  nlohmann::json parse_number() {
    std::string tok;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '+' || peek() == '-' ||
                      peek() == '.' || peek() == '_'))
      if (s_[i_++] != '_') tok += s_[i_ - 1];
    if (tok.empty()) fail("expected a value");
    const bool is_float = tok.find_first_of(".eE") != std::string::npos || tok == "inf" || tok == "nan";
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (*b == '+') ++b;
    if (!is_float) {
      long long v = 0;
      auto [p, ec] = std::from_chars(b, e, v);
      if (ec != std::errc() || p != e) fail("bad number '" + tok + "'");
      return v;
    }
    double v = 0;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail("bad number '" + tok + "'");
    return v;
  }
};

}  // namespace

nlohmann::json parse_toml(const std::string& text) { return Parser(text).run(); }

}  // namespace nuq::cli
