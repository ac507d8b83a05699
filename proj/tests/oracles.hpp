#pragma once

// Reference computations used only by the tests. None of them calls into the
// code path they are used to check.

#include "flagmaps/charpoly.hpp"
#include "flagmaps/lie_core.hpp"
#include "flagmaps/typea_schur.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using flagmaps::Coord;

/// z^k + z^{k-2} + ... + z^{-k} as a rank-1 polynomial.
flagmaps::CharPoly sl2_ladder(Coord k);

/// Laurent polynomial in one variable: exponent -> coefficient.
using Laurent = std::map<Coord, long>;

struct Sl2Greedy {
    bool ok = false;
    std::map<Coord, long> multiplicities;   // highest weight -> multiplicity
    Coord witness = 0;                      // first negative exponent (highest)
    long deficit = 0;
};

/// Peels ladders off the top exponent; fails on the first negative coefficient.
Sl2Greedy sl2_greedy(Laurent p);

Laurent to_laurent(const flagmaps::CharPoly& p);

/// det(h_{mu_i - i + j}) in m variables, reduced mod y1...ym = 1.
flagmaps::YPoly jacobi_trudi(const std::vector<Coord>& mu, std::size_t m);

/// Number of semistandard tableaux by brute force over all fillings.
long ssyt_count_brute(const std::vector<Coord>& mu, std::size_t m);

/// All partitions of k with at most `max_len` parts (no trailing zeros).
std::vector<std::vector<Coord>> partitions_of(Coord k, std::size_t max_len);

/// Random sparse polynomial, coefficients in [-cmax, cmax], exponents in [-emax, emax].
flagmaps::CharPoly random_poly(std::mt19937_64& rng, std::size_t rank, std::size_t max_terms, long cmax, Coord emax);

flagmaps::Weight random_weight(std::mt19937_64& rng, std::size_t rank, Coord lo, Coord hi);

} // namespace oracle
