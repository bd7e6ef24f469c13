#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace binomrank {

// Tiny deterministic JSON value tree. Objects keep insertion order and
// serialize as {"key": value, "key2": value2}; arrays serialize compactly
// as [v1,v2]. Output bytes depend only on the tree, never on the platform.
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : value_(nullptr) {}
  Json(std::nullptr_t) : value_(nullptr) {}
  Json(bool b) : value_(b) {}
  Json(std::int64_t n) : value_(n) {}
  Json(std::uint64_t n) : value_(n) {}
  Json(int n) : value_(static_cast<std::int64_t>(n)) {}
  Json(unsigned n) : value_(static_cast<std::uint64_t>(n)) {}
  Json(long long n) : value_(static_cast<std::int64_t>(n)) {}
  Json(unsigned long long n) : value_(static_cast<std::uint64_t>(n)) {}
  Json(const char* s) : value_(std::string(s)) {}
  Json(std::string s) : value_(std::move(s)) {}
  Json(Array a) : value_(std::move(a)) {}
  Json(Object o) : value_(std::move(o)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  Json& add(std::string key, Json value);  // object member, keeps order
  Json& push(Json value);                  // array element

  std::string dump() const;

 private:
  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, std::string, Array, Object>
      value_;

  void write(std::string& out) const;
};

}  // namespace binomrank
