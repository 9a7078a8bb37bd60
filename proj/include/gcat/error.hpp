#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gcat {

// A single law violation found during validation, e.g. {"NonAssociative", "h∘(g∘f) != (h∘g)∘f for ..."}.
struct Violation {
  std::string code;
  std::string detail;
};

inline std::string describe(const std::vector<Violation>& vs, std::size_t max_shown = 8) {
  std::string out;
  std::size_t n = 0;
  for (const auto& v : vs) {
    if (n++ == max_shown) {
      out += "  ... (" + std::to_string(vs.size() - max_shown) + " more)\n";
      break;
    }
    out += "  [" + v.code + "] " + v.detail + "\n";
  }
  return out;
}

// Error thrown on contract violations in already-validated data (bad subgroup,
// cyclic presentation, search budget, ...). `code` is machine-readable.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Value-or-violations result used by the validate_* entry points.
template <typename T>
class Result {
 public:
  static Result success(T v) { return Result(std::move(v)); }
  static Result failure(std::vector<Violation> vs) { return Result(std::move(vs)); }
  static Result failure(std::string code, std::string detail) {
    return Result(std::vector<Violation>{{std::move(code), std::move(detail)}});
  }

  bool ok() const { return std::holds_alternative<T>(v_); }

  const T& value() const& {
    require();
    return std::get<T>(v_);
  }
  T take() && {
    require();
    return std::move(std::get<T>(v_));
  }
  const std::vector<Violation>& violations() const { return std::get<std::vector<Violation>>(v_); }

 private:
  explicit Result(T v) : v_(std::move(v)) {}
  explicit Result(std::vector<Violation> vs) : v_(std::move(vs)) {}
  void require() const {
    if (!ok()) throw Error("ValidationFailed", "\n" + describe(violations()));
  }
  std::variant<T, std::vector<Violation>> v_;
};

}  // namespace gcat
