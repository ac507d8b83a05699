#pragma once

#include "flagmaps/weight.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace flagmaps {

using IntMatrix = std::vector<std::vector<Coord>>;

/// Default cap on enumerated Weyl orbits.
inline constexpr std::size_t kMaxOrbitSize = 1'000'000;

/// A positive root with both coordinate systems cached.
struct Root {
    Weight weight;                 // fundamental-weight coordinates
    std::vector<Coord> simple;     // coefficients on the simple roots
    Coord height() const;
};

/// Root datum of a simply connected compact semisimple group.
///
/// Convention: C(i,j) = <alpha_i, alpha_j^vee>, so row i of C is the simple
/// root alpha_i written in fundamental weights, and simple reflections act
/// as s_i(v) = v - v_i * alpha_i. The symmetrizer d satisfies
/// d_i C(i,j) = d_j C(j,i) with the d_i minimal positive integers; the
/// invariant form is then <alpha_i, alpha_j> = L * C(i,j) / d_j with
/// L = lcm(d), which makes every pairing of a weight with a root integral.
class CartanData {
public:
    /// Series in {A,B,C,D,G}; G requires rank 2.
    static CartanData builtin(char series, std::size_t rank);
    /// "A2", "D4", "G2", or block products such as "A1xA2".
    static CartanData from_tag(const std::string& tag);
    /// Validated custom matrix; must be of finite type.
    static CartanData from_matrix(const IntMatrix& matrix, std::string label = "custom");
    /// Block-diagonal sum.
    static CartanData product(const CartanData& a, const CartanData& b);

    std::size_t rank() const { return cartan_.size(); }
    const IntMatrix& cartan_matrix() const { return cartan_; }
    const std::vector<Coord>& symmetrizer() const { return symmetrizer_; }
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Weight& weyl_vector() const { return weyl_vector_; }
    const std::string& label() const { return label_; }

    /// True when the group is a single A_r, i.e. SU(r+1).
    bool is_type_a() const;

    Weight simple_root(std::size_t i) const;

    /// Exact value of the invariant form on two weights.
    mpq_class inner(const Weight& u, const Weight& v) const;
    /// <v, beta> for beta given by simple-root coefficients; always integral.
    Coord pair_with_root(const Weight& v, const std::vector<Coord>& simple_coeffs) const;

    Weight reflect(const Weight& v, std::size_t i) const;
    Weight dominant_representative(const Weight& v) const;
    /// Every element of the W-orbit of v, sorted lexicographically.
    std::vector<Weight> weyl_orbit(const Weight& v, std::size_t cap = kMaxOrbitSize) const;

    /// Scaled height <v, rho^vee> * denominator; strictly increases along
    /// every positive root, so it linearly extends the dominance order.
    mpz_class height_key(const Weight& v) const;

    friend bool operator==(const CartanData& a, const CartanData& b) { return a.cartan_ == b.cartan_; }

private:
    CartanData() = default;
    void finish();

    std::string label_;
    IntMatrix cartan_;
    std::vector<Coord> symmetrizer_;
    Coord symmetrizer_lcm_ = 1;
    std::vector<Root> positive_roots_;
    Weight weyl_vector_;
    std::vector<std::vector<mpq_class>> gram_;      // <w_i, w_j>
    std::vector<mpz_class> height_coeffs_;          // integral row sums of C^{-1}, scaled
};

} // namespace flagmaps
