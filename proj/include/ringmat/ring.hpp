#pragma once

/**
 * @file ring.hpp
 * @brief Commutative rings with unity, chosen at run time.
 *
 * A Ring is an immutable handle bundling the element operations of one
 * concrete ring: the integers, the rationals, the residues modulo m, or
 * polynomials in one variable over another Ring. Elements carry no pointer
 * back to their ring; every operation goes through the Ring value, so the
 * same Element payload can be read in any ring whose representation it fits.
 *
 * Every Element is kept in canonical form, which makes ring equality
 * structural:
 *   - integers:    arbitrary precision integer
 *   - rationals:   reduced fraction, positive denominator
 *   - zmod m:      integer representative in [0, m)
 *   - polynomials: coefficients low to high, no trailing zero; zero is empty
 */

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ringmat {

class Element {
 public:
  using Coefficients = std::vector<Element>;

  Element() : payload_(mpz_class(0)) {}
  explicit Element(mpz_class value) : payload_(std::move(value)) {}
  explicit Element(mpq_class value) : payload_(std::move(value)) {}
  explicit Element(Coefficients coefficients) : payload_(std::move(coefficients)) {}

  bool holds_integer() const noexcept { return payload_.index() == 0; }
  bool holds_rational() const noexcept { return payload_.index() == 1; }
  bool holds_coefficients() const noexcept { return payload_.index() == 2; }

  // Accessors throw std::bad_variant_access on the wrong alternative.
  const mpz_class& integer() const { return std::get<0>(payload_); }
  const mpq_class& rational() const { return std::get<1>(payload_); }
  const Coefficients& coefficients() const { return std::get<2>(payload_); }

  friend bool operator==(const Element& lhs, const Element& rhs) { return lhs.payload_ == rhs.payload_; }

 private:
  std::variant<mpz_class, mpq_class, Coefficients> payload_;
};

enum class RingKind { integers, rationals, zmod, polynomials };

class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  /// Residues modulo `modulus`; throws precondition_error unless modulus >= 2.
  static Ring zmod(const mpz_class& modulus);
  static Ring polynomials(const Ring& base);

  /// Builds a ring from its descriptor:
  ///   integers | rationals | zmod <m> | poly over <descriptor>
  /// Throws parse_error on malformed text and precondition_error on m < 2.
  static Ring parse(std::string_view descriptor);

  RingKind kind() const noexcept;
  /// Only meaningful for zmod rings.
  const mpz_class& modulus() const;
  /// Coefficient ring of a polynomial ring; precondition_error otherwise.
  const Ring& base() const;
  /// Number of nested `poly over` layers.
  int polynomial_depth() const noexcept;

  std::string descriptor() const;

  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  const Element& zero() const noexcept;
  const Element& one() const noexcept;
  bool eq(const Element& x, const Element& y) const { return x == y; }
  /// True iff `x` is a canonical element of this ring.
  bool contains(const Element& x) const;

  /// Image of an integer under the unique ring map from Z.
  Element from_integer(const mpz_class& value) const;

  friend bool operator==(const Ring& lhs, const Ring& rhs) { return lhs.descriptor() == rhs.descriptor(); }

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace ringmat
