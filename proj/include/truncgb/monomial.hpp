#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace truncgb {

/// Ordered list of variable names. Index 0 is the greatest variable under
/// the default ranking of any order built on this context.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableContext&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector of fixed length (one slot per context variable).
/// The built-in ordering is the plain entrywise lexicographic compare of
/// exponent vectors; it is the canonical storage key, not a monomial order.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_unit() const;  // all exponents zero

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial& other) const = default;

  /// Text form like "x*y^2" with variables in context order; "1" for the unit.
  std::string str(const VariableContext& ctx) const;

 private:
  std::vector<unsigned> exps_;
};

}  // namespace truncgb
