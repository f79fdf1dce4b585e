#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace oreqb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A descriptor, element literal or polynomial literal could not be parsed.
/// Line and column are 1-based; zero means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return "parse error: " + message;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
           ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid construction request (non-monic modulus, bad sizes...).
class DescriptorError : public Error {
 public:
  using Error::Error;
};

/// Raw tables (or a compiled descriptor) violate a ring axiom. The
/// witnesses are element indices; unused slots are zero.
class RingAxiomViolation : public Error {
 public:
  RingAxiomViolation(const std::string& axiom, std::uint32_t a, std::uint32_t b, std::uint32_t c)
      : Error("ring axiom violated (" + axiom + ") at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        axiom_(axiom),
        a_(a),
        b_(b),
        c_(c) {}

  const std::string& axiom() const noexcept { return axiom_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }

 private:
  std::string axiom_;
  std::uint32_t a_, b_, c_;
};

class OrderLimitExceeded : public Error {
 public:
  OrderLimitExceeded(std::uint64_t requested, std::uint64_t limit)
      : Error("ring order " + std::to_string(requested) + " exceeds the configured limit " +
              std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// Elements, subsets or polynomials of different rings/contexts were mixed.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different rings or Ore contexts") {}
};

/// A map failed validation as an endomorphism or sigma-derivation.
class MapViolation : public Error {
 public:
  enum class Kind { Additivity, Multiplicativity, NotUnital, NotBijective, Leibniz, Length };

  MapViolation(Kind kind, std::uint32_t a, std::uint32_t b, const std::string& what)
      : Error(what), kind_(kind), a_(a), b_(b) {}

  Kind kind() const noexcept { return kind_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }

 private:
  Kind kind_;
  std::uint32_t a_, b_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would enumerate more candidates than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(long double required, std::uint64_t budget)
      : Error("search needs " + describe(required) + " candidates, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  long double required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  static std::string describe(long double v) {
    if (v < 1e18L) return std::to_string(static_cast<unsigned long long>(v));
    return std::to_string(static_cast<double>(v));
  }

  long double required_;
  std::uint64_t budget_;
};

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& hypothesis, const std::string& detail)
      : Error("hypothesis not met: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
        hypothesis_(hypothesis) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

class NotIdempotent : public Error {
 public:
  explicit NotIdempotent(std::uint32_t e)
      : Error("element " + std::to_string(e) + " is not idempotent"), element_(e) {}

  std::uint32_t element() const noexcept { return element_; }

 private:
  std::uint32_t element_;
};

class UnknownId : public Error {
 public:
  UnknownId(const std::string& kind, const std::string& id)
      : Error("unknown " + kind + ": " + id), id_(id) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

}  // namespace oreqb
