#pragma once

#include "flagmaps/charpoly.hpp"
#include "flagmaps/weight.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace flagmaps {

/// Weakly decreasing nonnegative parts; trailing zeros allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Coord> parts);
    /// "2,1,0"
    static Partition parse(const std::string& text);

    const std::vector<Coord>& parts() const { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const;
    Coord size() const;
    /// Part i (0-based), zero past the end.
    Coord part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    /// Parts padded or trimmed (zeros only) to exactly m entries.
    std::vector<Coord> padded(std::size_t m) const;
    std::string str() const;

private:
    std::vector<Coord> parts_;
};

/// Element of Z[y1^{+-1}..ym^{+-1}] / (y1...ym = 1). Each key is the canonical
/// representative of its class: exponent vector with minimum entry 0.
class YPoly {
public:
    using Exponents = std::vector<Coord>;
    using TermMap = std::map<Exponents, mpz_class>;

    explicit YPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Exponents e, const mpz_class& c);
    mpz_class coefficient(Exponents e) const;

    YPoly& operator+=(const YPoly& o);
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);
    friend bool operator==(const YPoly&, const YPoly&) = default;

    static Exponents canonical(Exponents e);

private:
    std::size_t nvars_;
    TermMap terms_;
};

mpz_class evaluate_at_one(const YPoly& q);
/// Same grammar as CharPoly text with variables y1..ym; descending lex order.
std::string render(const YPoly& q);
YPoly parse_ypoly(std::string_view text, std::size_t nvars);

/// Visits the content vector of every semistandard tableau of shape mu with
/// entries in 1..m, in descending lex order of content (tableaux sharing a
/// content are visited consecutively).
void for_each_ssyt_content(const Partition& mu, std::size_t m,
                           const std::function<void(const std::vector<Coord>&)>& visit);

YPoly schur(const Partition& mu, std::size_t m);
/// Hook-content formula for s_mu(1,...,1).
mpz_class schur_dim(const Partition& mu, std::size_t m);

/// w_k -> y1...yk, rho -> y2 y3^2 ... ym^{m-1}; input rank m-1.
YPoly alpha(const CharPoly& p);
/// y^e -> weight (e_1-e_2, ..., e_{m-1}-e_m).
CharPoly alpha_inverse(const YPoly& q);

/// (mu_1-mu_2, ..., mu_{m-1}-mu_m).
Weight weight_of_partition(const Partition& mu, std::size_t m);
/// One weight per semistandard tableau; see for_each_ssyt_content for order.
std::vector<Weight> weights_of_schur(const Partition& mu, std::size_t m);

} // namespace flagmaps
