#pragma once

#include "flagmaps/characters.hpp"
#include "flagmaps/charpoly.hpp"
#include "flagmaps/lie_core.hpp"
#include "flagmaps/typea_schur.hpp"

#include <cstddef>
#include <vector>

namespace flagmaps {

/// A homomorphism h: H^2(F(n)) -> H^2(G/T) given by h(t_k) = rows[k-1] in the
/// fundamental-weight basis, k = 1..n-1. The image of t_n is forced by
/// t_1 + ... + t_n = 0 and is recomputed on demand.
class CohomHom {
public:
    /// Requires n >= 2, n-1 rows of equal length >= 1.
    CohomHom(std::size_t n, std::vector<Weight> rows);

    std::size_t n() const { return n_; }
    std::size_t rank() const { return rows_.front().rank(); }
    const std::vector<Weight>& rows() const { return rows_; }
    /// b_i = -(a_{1,i} + ... + a_{n-1,i})
    Weight derived_row() const;
    /// rows followed by derived_row: the images of t_1..t_n.
    std::vector<Weight> images() const;

    friend bool operator==(const CohomHom&, const CohomHom&) = default;

private:
    std::size_t n_;
    std::vector<Weight> rows_;
};

/// The torus weights g'*(t'_1), ..., g'*(t'_n) of a representation g that
/// maps the maximal torus into the diagonal. They must sum to zero.
class TorusRestriction {
public:
    explicit TorusRestriction(std::vector<Weight> weights);

    /// Weights of sum m_lambda V_lambda, each repeated by its multiplicity,
    /// lambdas in certificate order and weights in canonical term order.
    static TorusRestriction of_certificate(const CartanData& cd, const Certificate& cert,
                                           const Limits& limits = {});

    std::size_t n() const { return weights_.size(); }
    std::size_t rank() const { return weights_.front().rank(); }
    const std::vector<Weight>& weights() const { return weights_; }

private:
    std::vector<Weight> weights_;
};

/// s(h) = sum_k x^{h(t_k)} over k = 1..n.
CharPoly s_map(const CohomHom& h);

/// Sufficient test: a certificate means s(h) is the character of an
/// n-dimensional representation, whose flag descent induces h. A failure is
/// "not certified", never a proof that no map exists.
Decomposition check_realizable(const CartanData& cd, const CohomHom& h, const Limits& limits = {});

/// Reads the matrix off the first n-1 torus weights.
CohomHom induced_hom(const TorusRestriction& tr);

struct TheoremCheck {
    bool holds = false;
    CharPoly character;   // chi(g) from the torus weights directly
    CharPoly smap;        // s(r(descent(g))) through the CohomHom
};

TheoremCheck verify_theorem(const CartanData& cd, const TorusRestriction& tr);

struct SchurFlagMap {
    std::size_t n = 0;
    CohomHom hom;
    YPoly image;   // alpha(s(hom))
    YPoly schur;   // s_mu(y1..ym)
};

/// The map f_mu^*: H^2(F(n)) -> H^2(F(m)) whose alpha-s image is s_mu.
/// Requires length(mu) < m.
SchurFlagMap schur_flag_map(const Partition& mu, std::size_t m);

} // namespace flagmaps
