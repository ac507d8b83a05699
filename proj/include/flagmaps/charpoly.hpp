#pragma once

#include "flagmaps/weight.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flagmaps {

/// Reduced monomial w1^a1 ... wm^am * rho^c of Z[w1..wm, rho] / (w1...wm*rho = 1).
struct NormalMonomial {
    std::vector<Coord> omega_exps;
    Coord rho_exp = 0;

    friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

/// c = max(0, -min w_k), a'_k = w_k + c.
NormalMonomial normalize(const Weight& w);
/// Throws InputError when min(a', c) != 0.
Weight denormalize(const NormalMonomial& nm);

/// Finitely supported integer function on the weight lattice, i.e. an element
/// of the group ring Z[T]. Internally keyed by lattice point; the relation
/// w1...wm*rho = 1 only shows up when reading or writing text.
class CharPoly {
public:
    using TermMap = std::unordered_map<Weight, mpz_class, WeightHash>;

    explicit CharPoly(std::size_t rank = 0) : rank_(rank) {}

    static CharPoly monomial(const Weight& w, const mpz_class& coeff = 1);
    static CharPoly constant(std::size_t rank, const mpz_class& value);
    /// Sum of the monomials x^w, counting repeats.
    static CharPoly from_weights(std::size_t rank, const std::vector<Weight>& weights);

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// All coefficients > 0. The zero polynomial is effective.
    bool is_effective() const;

    const TermMap& terms() const { return terms_; }
    mpz_class coefficient(const Weight& w) const;
    void add_term(const Weight& w, const mpz_class& c);

    /// Terms in canonical output order: descending lex on (a'_1..a'_m, c).
    std::vector<std::pair<Weight, mpz_class>> sorted_terms() const;

    CharPoly& operator+=(const CharPoly& o);
    CharPoly& operator-=(const CharPoly& o);
    CharPoly& operator*=(const mpz_class& k);
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    friend CharPoly operator*(const mpz_class& k, CharPoly p) { return p *= k; }

    friend bool operator==(const CharPoly& a, const CharPoly& b);

private:
    void check_rank(const CharPoly& o) const;

    std::size_t rank_;
    TermMap terms_;
};

/// Sum of coefficients: the value at w1 = ... = wm = rho = 1.
mpz_class evaluate_at_one(const CharPoly& p);

std::string render(const CharPoly& p);
std::string render_monomial(const Weight& w);
/// Inverse of render. Accepts non-reduced monomials and reduces them through
/// the relation; rejects unknown variables and indices above rank.
CharPoly parse_charpoly(std::string_view text, std::size_t rank);

} // namespace flagmaps
