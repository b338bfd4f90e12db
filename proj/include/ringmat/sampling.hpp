#pragma once

// Seeded random elements, vectors and matrices for property checks.

#include <cstddef>
#include <cstdint>
#include <random>

#include "ringmat/matrix.hpp"
#include "ringmat/ring.hpp"
#include "ringmat/vector.hpp"

namespace ringmat {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20260318;

/// Mostly small entries, with the occasional multi-word integer so that
/// arbitrary precision paths get exercised.
Element random_element(const Ring& ring, Rng& rng);
Vector random_vector(const Ring& ring, std::size_t n, Rng& rng);
Matrix random_matrix(const Ring& ring, std::size_t m, std::size_t n, Rng& rng);

}  // namespace ringmat
