#pragma once

#include "flagmaps/charpoly.hpp"
#include "flagmaps/lie_core.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace flagmaps {

struct Limits {
    std::size_t max_rank = 8;
    std::size_t max_terms = 10'000'000;
    std::size_t max_orbit = kMaxOrbitSize;
    unsigned max_n = 64;
};

/// Irreducible character chi(V_lambda) via Freudenthal's recursion on the
/// dominant weights, spread over Weyl orbits. Memoized per (group, lambda).
CharPoly weight_multiplicities(const CartanData& cd, const Weight& lambda, const Limits& limits = {});
/// Same computation bypassing the cache.
CharPoly weight_multiplicities_uncached(const CartanData& cd, const Weight& lambda, const Limits& limits = {});
void clear_character_cache();

/// Weyl dimension formula.
mpz_class dimension(const CartanData& cd, const Weight& lambda);

struct Summand {
    Weight lambda;
    mpz_class multiplicity;
    friend bool operator==(const Summand&, const Summand&) = default;
};

/// sum_lambda m_lambda [V_lambda]; summands sorted by descending lambda, no
/// repeated lambda.
struct Certificate {
    std::vector<Summand> summands;
    mpz_class total_dim = 0;

    static Certificate from_summands(const CartanData& cd, std::vector<Summand> summands);
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NotInOmega {
    enum class Reason { NegativeCoefficient, NoDominantWeight, NotEffective, DimensionMismatch };
    Reason reason = Reason::NegativeCoefficient;
    std::optional<Weight> witness;
    mpz_class deficit = 0;           // the offending coefficient
    mpz_class expected_dim = 0;      // DimensionMismatch only
    mpz_class actual_dim = 0;

    std::string describe() const;
};

using Decomposition = std::variant<Certificate, NotInOmega>;

inline bool certified(const Decomposition& d) { return std::holds_alternative<Certificate>(d); }

/// The character of the certificate's representation.
CharPoly character_of(const CartanData& cd, const Certificate& cert, const Limits& limits = {});

/// Writes p in the basis {chi(V_lambda)} by greedy subtraction at the highest
/// dominant weight still present. Fails on the first negative coefficient;
/// non-effective input is reported as NotEffective without reduction.
Decomposition decompose(const CartanData& cd, const CharPoly& p, const Limits& limits = {});

/// Membership in Omega_n(G).
Decomposition is_in_omega_n(const CartanData& cd, const CharPoly& p, const mpz_class& n,
                            const Limits& limits = {});

/// Dominant weights of dimension <= n, ordered by (dimension, lex) descending.
std::vector<std::pair<Weight, mpz_class>> dominant_weights_up_to_dim(const CartanData& cd, unsigned n);

/// Every certificate of total dimension n, in descending lex order on the
/// summand list (weights compared by (dimension, lex)). The visitor returns
/// false to stop early.
void omega_n_enumerate(const CartanData& cd, unsigned n,
                       const std::function<bool(const Certificate&)>& visit,
                       const Limits& limits = {});
std::vector<Certificate> omega_n_list(const CartanData& cd, unsigned n, const Limits& limits = {});

} // namespace flagmaps
