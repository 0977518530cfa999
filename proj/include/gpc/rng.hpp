#ifndef GPC_RNG_HPP
#define GPC_RNG_HPP

#include <cstdint>

#include "gpc/matrix.hpp"

namespace gpc {

// Counter-based deterministic randomness: every value is a pure function of
// its key, so sampling is reproducible independent of evaluation order.

std::uint64_t splitmix64(std::uint64_t x);

/// Derived key for (seed, stream index a, position b).
std::uint64_t rng_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

/// Uniform double in [0, 1) from a key.
double uniform_unit(std::uint64_t key);
double uniform_in(double lo, double hi, std::uint64_t key);

/// Matrix with entries uniform in [-1,1] x [-1,1]i, keyed by seed.
CMatrix random_matrix(int n, std::uint64_t seed);
CMatrix random_hermitian(int n, std::uint64_t seed);
/// Unitary from Gram-Schmidt on the columns of a random matrix.
CMatrix random_unitary(int n, std::uint64_t seed);

}  // namespace gpc

#endif
