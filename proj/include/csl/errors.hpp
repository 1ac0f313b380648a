#pragma once

#include <stdexcept>
#include <string>

namespace csl {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch between operands, or a non-square input where one is required.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (zero vector, zero matrix, bad bound...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix or vector text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A rational matrix failed the exact test MᵀM = I.
class NotOrthogonal : public Error {
 public:
  NotOrthogonal(std::size_t col_a, std::size_t col_b, std::string inner_product)
      : Error("matrix is not orthogonal: columns " + std::to_string(col_a) + " and " +
              std::to_string(col_b) + " have inner product " + inner_product),
        col_a_(col_a),
        col_b_(col_b),
        inner_product_(std::move(inner_product)) {}

  std::size_t col_a() const noexcept { return col_a_; }
  std::size_t col_b() const noexcept { return col_b_; }
  const std::string& inner_product() const noexcept { return inner_product_; }

 private:
  std::size_t col_a_;
  std::size_t col_b_;
  std::string inner_product_;
};

/// The coprime product rule was asked for reflections whose reduced norms share a factor.
class CoprimalityViolated : public Error {
 public:
  CoprimalityViolated(std::size_t first, std::size_t second, std::string common)
      : Error("reduced norms of axes " + std::to_string(first) + " and " + std::to_string(second) +
              " share the factor " + common),
        first_(first),
        second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// Residue enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace csl
