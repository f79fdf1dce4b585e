#pragma once

// Skew polynomials sum a_k x^k in R[x; sigma, delta], coefficients on the left.
//
// Multiplication rests on x^n r = sum_i f_i^n(r) x^i, so that
//   (a x^i)(b x^j) = a * sum_k f_k^i(b) x^(k+j).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oreqb/maps.hpp"

namespace oreqb {

/// Polynomial degree; the zero polynomial has the distinguished degree -inf,
/// which compares below every natural number and absorbs addition.
class Degree {
 public:
  static constexpr Degree neg_inf() { return Degree(); }
  constexpr explicit Degree(std::size_t d) : value_(d) {}

  constexpr bool is_neg_inf() const noexcept { return !value_.has_value(); }
  /// Throws Error for -inf.
  std::size_t value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return b.is_neg_inf() <=> a.is_neg_inf();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(*a.value_ + *b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

class OrePoly {
 public:
  /// Trailing zero coefficients are dropped.
  OrePoly(ContextPtr ctx, std::vector<Elem> coeffs);

  static OrePoly zero(ContextPtr ctx);
  static OrePoly constant(ContextPtr ctx, Elem a);
  static OrePoly monomial(ContextPtr ctx, Elem a, std::size_t k);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(std::size_t k) const;
  Degree degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// Leading coefficient; throws for the zero polynomial.
  Elem leading() const;

  friend OrePoly operator+(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b);
  friend OrePoly operator-(const OrePoly& a);
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  /// Throws ContextMismatch for polynomials over different contexts.
  friend bool operator==(const OrePoly& a, const OrePoly& b);

 private:
  ContextPtr ctx_;
  std::vector<Elem> coeffs_;
};

OrePoly ore_add(const OrePoly& p, const OrePoly& q);
OrePoly ore_neg(const OrePoly& p);
OrePoly ore_sub(const OrePoly& p, const OrePoly& q);
OrePoly ore_mul(const OrePoly& p, const OrePoly& q);
bool ore_eq(const OrePoly& p, const OrePoly& q);

/// x^n r = sum_i f_i^n(r) x^i.
OrePoly monomial_shift(const ContextPtr& ctx, std::size_t n, Elem r);

/// Dense product kernel for hot loops. `table` must cover degree a.size()-1.
/// `out` receives a.size()+b.size()-1 coefficients (not normalized); empty
/// inputs give an empty output.
void mul_coefficients(const FiniteRing& ring, const WordTableView& table,
                      std::span<const Elem> a, std::span<const Elem> b, std::vector<Elem>& out);

/// All e with e*e = e and deg e <= max_degree, in enumeration order
/// (coefficient of x^0 varies fastest). Throws BudgetExceeded when
/// |R|^(max_degree+1) > budget.
std::vector<OrePoly> idempotent_search(const ContextPtr& ctx, std::size_t max_degree,
                                       std::uint64_t budget = 20'000'000);

/// Coefficient-list literal, e.g. "[t, 0, t]" for t + t x^2.
OrePoly parse_poly(const ContextPtr& ctx, std::string_view text);
/// "[c0,c1,...]"; the zero polynomial prints as "[]".
std::string format_poly(const OrePoly& p);
/// Human-readable sum such as "t*x + (1+t)*x^2".
std::string pretty_poly(const OrePoly& p);

/// |R|^k as a long double (search sizes overflow 64 bits easily).
long double search_size(std::size_t ring_order, std::size_t k);

}  // namespace oreqb
