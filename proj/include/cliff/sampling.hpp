#pragma once

#include <cstdint>
#include <random>

#include "cliff/multivector.hpp"

namespace cliff {

// Fixed seed shared by the property suites and the CLI default; --seed
// overrides it. mt19937_64 output is pinned by the standard, so every run
// on every platform draws the same elements.
inline constexpr std::uint64_t kDefaultSeed = 0x5eedc11ff04d23ULL;

using Rng = std::mt19937_64;

// Rational with numerator in [-9, 9] and denominator in {1, 2, 3, 4}.
Rational random_rational(Rng& rng);
Rational random_nonzero_rational(Rng& rng);

// Sparse multivector with the given number of nonzero blades (at most 2^n).
Multivector random_multivector(const Signature& sig, Rng& rng, int max_terms = 6);

// Grade-1 element with small rational coordinates.
Multivector random_vector(const Signature& sig, Rng& rng);

// Non-isotropic grade-1 element (resampled until the quadratic form is
// nonzero); these generate the Pin group.
Multivector random_nonisotropic_vector(const Signature& sig, Rng& rng);

// Product of `factors` non-isotropic vectors; a Clifford-group element by
// construction. Factor count drawn from 1..6 when factors == 0.
Multivector random_versor(const Signature& sig, Rng& rng, int factors = 0);

// Versor scaled so that N(x) = +/-1, i.e. a Pin-group element.
Multivector random_pin_element(const Signature& sig, Rng& rng, int factors = 0);

}  // namespace cliff
