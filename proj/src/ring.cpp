#include "ringmat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ringmat/error.hpp"

namespace ringmat {

struct Ring::Impl {
  RingKind kind;
  mpz_class modulus;
  std::optional<Ring> base;
  Element zero;
  Element one;
};

namespace {

mpz_class reduce_mod(const mpz_class& value, const mpz_class& modulus) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

// Drops trailing coefficients equal to the base zero.
void trim(const Ring& base, Element::Coefficients& coefficients) {
  while (!coefficients.empty() && base.eq(coefficients.back(), base.zero())) coefficients.pop_back();
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

Ring parse_words(const std::vector<std::string>& words, std::size_t& pos) {
  if (pos >= words.size()) throw parse_error("ring descriptor: unexpected end of input");
  const std::string& head = words[pos++];
  if (head == "integers") return Ring::integers();
  if (head == "rationals") return Ring::rationals();
  if (head == "zmod") {
    if (pos >= words.size()) throw parse_error("ring descriptor: 'zmod' needs a modulus");
    const std::string& digits = words[pos++];
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw parse_error("ring descriptor: bad modulus '" + digits + "'");
    return Ring::zmod(mpz_class(digits, 10));
  }
  if (head == "poly") {
    if (pos >= words.size() || words[pos] != "over") throw parse_error("ring descriptor: expected 'poly over <ring>'");
    ++pos;
    return Ring::polynomials(parse_words(words, pos));
  }
  throw parse_error("ring descriptor: unknown ring '" + head + "'");
}

}  // namespace

Ring Ring::integers() {
  static const Ring ring(std::make_shared<const Impl>(
      Impl{RingKind::integers, mpz_class(0), std::nullopt, Element(mpz_class(0)), Element(mpz_class(1))}));
  return ring;
}

Ring Ring::rationals() {
  static const Ring ring(std::make_shared<const Impl>(
      Impl{RingKind::rationals, mpz_class(0), std::nullopt, Element(mpq_class(0)), Element(mpq_class(1))}));
  return ring;
}

Ring Ring::zmod(const mpz_class& modulus) {
  if (modulus < 2) throw precondition_error("zmod modulus must be at least 2, got " + modulus.get_str());
  return Ring(std::make_shared<const Impl>(
      Impl{RingKind::zmod, modulus, std::nullopt, Element(mpz_class(0)), Element(mpz_class(1))}));
}

Ring Ring::polynomials(const Ring& base) {
  return Ring(std::make_shared<const Impl>(Impl{RingKind::polynomials, mpz_class(0), base,
                                                Element(Element::Coefficients{}),
                                                Element(Element::Coefficients{base.one()})}));
}

Ring Ring::parse(std::string_view descriptor) {
  const auto words = split_words(descriptor);
  std::size_t pos = 0;
  Ring ring = parse_words(words, pos);
  if (pos != words.size()) throw parse_error("ring descriptor: trailing text '" + words[pos] + "'");
  return ring;
}

RingKind Ring::kind() const noexcept { return impl_->kind; }

const mpz_class& Ring::modulus() const { return impl_->modulus; }

const Ring& Ring::base() const {
  if (!impl_->base) throw precondition_error("ring '" + descriptor() + "' has no coefficient ring");
  return *impl_->base;
}

int Ring::polynomial_depth() const noexcept {
  return impl_->base ? 1 + impl_->base->polynomial_depth() : 0;
}

std::string Ring::descriptor() const {
  switch (impl_->kind) {
    case RingKind::integers: return "integers";
    case RingKind::rationals: return "rationals";
    case RingKind::zmod: return "zmod " + impl_->modulus.get_str();
    case RingKind::polynomials: return "poly over " + impl_->base->descriptor();
  }
  return {};
}

const Element& Ring::zero() const noexcept { return impl_->zero; }
const Element& Ring::one() const noexcept { return impl_->one; }

Element Ring::add(const Element& x, const Element& y) const {
  switch (impl_->kind) {
    case RingKind::integers: return Element(mpz_class(x.integer() + y.integer()));
    case RingKind::rationals: return Element(mpq_class(x.rational() + y.rational()));
    case RingKind::zmod: {
      mpz_class sum = x.integer() + y.integer();
      if (sum >= impl_->modulus) sum -= impl_->modulus;
      return Element(std::move(sum));
    }
    case RingKind::polynomials: {
      const Ring& base = *impl_->base;
      const auto& p = x.coefficients();
      const auto& q = y.coefficients();
      Element::Coefficients sum(std::max(p.size(), q.size()), base.zero());
      for (std::size_t i = 0; i < sum.size(); ++i) {
        if (i < p.size() && i < q.size()) sum[i] = base.add(p[i], q[i]);
        else sum[i] = i < p.size() ? p[i] : q[i];
      }
      trim(base, sum);
      return Element(std::move(sum));
    }
  }
  return {};
}

Element Ring::mul(const Element& x, const Element& y) const {
  switch (impl_->kind) {
    case RingKind::integers: return Element(mpz_class(x.integer() * y.integer()));
    case RingKind::rationals: return Element(mpq_class(x.rational() * y.rational()));
    case RingKind::zmod: return Element(reduce_mod(x.integer() * y.integer(), impl_->modulus));
    case RingKind::polynomials: {
      const Ring& base = *impl_->base;
      const auto& p = x.coefficients();
      const auto& q = y.coefficients();
      if (p.empty() || q.empty()) return impl_->zero;
      Element::Coefficients product(p.size() + q.size() - 1, base.zero());
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) product[i + j] = base.add(product[i + j], base.mul(p[i], q[j]));
      // Zero divisors in the base can cancel the leading term.
      trim(base, product);
      return Element(std::move(product));
    }
  }
  return {};
}

Element Ring::neg(const Element& x) const {
  switch (impl_->kind) {
    case RingKind::integers: return Element(mpz_class(-x.integer()));
    case RingKind::rationals: return Element(mpq_class(-x.rational()));
    case RingKind::zmod:
      if (x.integer() == 0) return x;
      return Element(mpz_class(impl_->modulus - x.integer()));
    case RingKind::polynomials: {
      const Ring& base = *impl_->base;
      Element::Coefficients negated;
      negated.reserve(x.coefficients().size());
      for (const auto& c : x.coefficients()) negated.push_back(base.neg(c));
      return Element(std::move(negated));
    }
  }
  return {};
}

bool Ring::contains(const Element& x) const {
  switch (impl_->kind) {
    case RingKind::integers: return x.holds_integer();
    case RingKind::rationals: {
      if (!x.holds_rational()) return false;
      const mpq_class& q = x.rational();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      return q.get_den() > 0 && g == 1;
    }
    case RingKind::zmod: return x.holds_integer() && x.integer() >= 0 && x.integer() < impl_->modulus;
    case RingKind::polynomials: {
      if (!x.holds_coefficients()) return false;
      const Ring& base = *impl_->base;
      const auto& coefficients = x.coefficients();
      if (!coefficients.empty() && base.eq(coefficients.back(), base.zero())) return false;
      return std::all_of(coefficients.begin(), coefficients.end(),
                         [&](const Element& c) { return base.contains(c); });
    }
  }
  return false;
}

Element Ring::from_integer(const mpz_class& value) const {
  switch (impl_->kind) {
    case RingKind::integers: return Element(value);
    case RingKind::rationals: return Element(mpq_class(value));
    case RingKind::zmod: return Element(reduce_mod(value, impl_->modulus));
    case RingKind::polynomials: {
      Element::Coefficients constant{impl_->base->from_integer(value)};
      trim(*impl_->base, constant);
      return Element(std::move(constant));
    }
  }
  return {};
}

}  // namespace ringmat
