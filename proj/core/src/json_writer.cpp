#include "binomrank/json_writer.hpp"

#include <stdexcept>

namespace binomrank {

Json& Json::add(std::string key, Json value) {
  auto* obj = std::get_if<Object>(&value_);
  if (!obj) throw std::logic_error("Json::add on non-object");
  obj->emplace_back(std::move(key), std::move(value));
  return *this;
}

Json& Json::push(Json value) {
  auto* arr = std::get_if<Array>(&value_);
  if (!arr) throw std::logic_error("Json::push on non-array");
  arr->push_back(std::move(value));
  return *this;
}

namespace {

void write_string(std::string& out, const std::string& s) {
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
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(c >> 4) & 0xf];
          out += hex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void Json::write(std::string& out) const {
  struct Visitor {
    std::string& out;
    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(std::int64_t n) const { out += std::to_string(n); }
    void operator()(std::uint64_t n) const { out += std::to_string(n); }
    void operator()(const std::string& s) const { write_string(out, s); }
    void operator()(const Array& a) const {
      out += '[';
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        a[i].write(out);
      }
      out += ']';
    }
    void operator()(const Object& o) const {
      out += '{';
      for (std::size_t i = 0; i < o.size(); ++i) {
        if (i) out += ", ";
        write_string(out, o[i].first);
        out += ": ";
        o[i].second.write(out);
      }
      out += '}';
    }
  };
  std::visit(Visitor{out}, value_);
}

std::string Json::dump() const {
  std::string out;
  write(out);
  return out;
}

}  // namespace binomrank
