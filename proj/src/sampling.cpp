#include "ringmat/sampling.hpp"

namespace ringmat {

namespace {

mpz_class random_integer(Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 9);
  if (coin(rng) == 0) {
    // Roughly 100 bits, either sign.
    mpz_class big = 0;
    for (int limb = 0; limb < 3; ++limb) {
      big <<= 32;
      big += static_cast<unsigned long>(rng() & 0xffffffffu);
    }
    return coin(rng) < 5 ? mpz_class(-big) : big;
  }
  std::uniform_int_distribution<long> small(-9, 9);
  return mpz_class(small(rng));
}

}  // namespace

Element random_element(const Ring& ring, Rng& rng) {
  switch (ring.kind()) {
    case RingKind::integers: return ring.from_integer(random_integer(rng));
    case RingKind::rationals: {
      std::uniform_int_distribution<long> num(-9, 9);
      std::uniform_int_distribution<long> den(1, 9);
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      return Element(std::move(q));
    }
    case RingKind::zmod: {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), random_integer(rng).get_mpz_t(), ring.modulus().get_mpz_t());
      return Element(std::move(r));
    }
    case RingKind::polynomials: {
      const Ring& base = ring.base();
      std::uniform_int_distribution<int> length(0, ring.polynomial_depth() > 1 ? 2 : 3);
      Element::Coefficients coefficients;
      const int terms = length(rng);
      for (int i = 0; i < terms; ++i) coefficients.push_back(random_element(base, rng));
      while (!coefficients.empty() && base.eq(coefficients.back(), base.zero())) coefficients.pop_back();
      return Element(std::move(coefficients));
    }
  }
  return ring.zero();
}

Vector random_vector(const Ring& ring, std::size_t n, Rng& rng) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_element(ring, rng));
  return v;
}

Matrix random_matrix(const Ring& ring, std::size_t m, std::size_t n, Rng& rng) {
  std::vector<Vector> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) rows.push_back(random_vector(ring, n, rng));
  return Matrix(std::move(rows), n);
}

}  // namespace ringmat
