#include "flagmaps/realize.hpp"

#include "flagmaps/errors.hpp"

namespace flagmaps {

CohomHom::CohomHom(std::size_t n, std::vector<Weight> rows) : n_(n), rows_(std::move(rows))
{
    if (n_ < 2)
        throw InputError("cohomology homomorphism needs n >= 2");
    if (rows_.size() != n_ - 1)
        throw InputError("expected " + std::to_string(n_ - 1) + " rows for n = " + std::to_string(n_) + ", got " +
                         std::to_string(rows_.size()));
    if (rows_.front().rank() == 0)
        throw InputError("rows must have at least one column");
    for (const auto& r : rows_)
        if (r.rank() != rows_.front().rank())
            throw InputError("rows must all have the same length");
}

Weight CohomHom::derived_row() const
{
    Weight b(rank());
    for (const auto& r : rows_)
        b -= r;
    return b;
}

std::vector<Weight> CohomHom::images() const
{
    auto out = rows_;
    out.push_back(derived_row());
    return out;
}

TorusRestriction::TorusRestriction(std::vector<Weight> weights) : weights_(std::move(weights))
{
    if (weights_.empty())
        throw InputError("torus restriction needs at least one weight");
    Weight sum(weights_.front().rank());
    for (const auto& w : weights_) {
        if (w.rank() != sum.rank())
            throw InputError("torus weights must all have the same rank");
        sum += w;
    }
    if (sum.rank() == 0)
        throw InputError("torus weights must have positive rank");
    if (!sum.is_zero())
        throw InputError("invalid representation data: torus weights sum to " + sum.str() + ", not zero");
}

TorusRestriction TorusRestriction::of_certificate(const CartanData& cd, const Certificate& cert, const Limits& limits)
{
    std::vector<Weight> weights;
    for (const auto& s : cert.summands) {
        auto terms = weight_multiplicities(cd, s.lambda, limits).sorted_terms();
        for (mpz_class copy = 0; copy < s.multiplicity; ++copy)
            for (const auto& [w, mult] : terms)
                for (mpz_class k = 0; k < mult; ++k)
                    weights.push_back(w);
    }
    return TorusRestriction(std::move(weights));
}

CharPoly s_map(const CohomHom& h)
{
    return CharPoly::from_weights(h.rank(), h.images());
}

Decomposition check_realizable(const CartanData& cd, const CohomHom& h, const Limits& limits)
{
    if (h.rank() != cd.rank())
        throw InputError("homomorphism has " + std::to_string(h.rank()) + " columns but group " + cd.label() +
                         " has rank " + std::to_string(cd.rank()));
    return is_in_omega_n(cd, s_map(h), mpz_class(static_cast<unsigned long>(h.n())), limits);
}

CohomHom induced_hom(const TorusRestriction& tr)
{
    const auto& w = tr.weights();
    if (w.size() < 2)
        throw InputError("a one-dimensional representation induces no map into a flag manifold F(n), n >= 2");
    CohomHom h(w.size(), std::vector<Weight>(w.begin(), w.end() - 1));
    if (h.derived_row() != w.back())
        throw InternalError("derived row disagrees with the last torus weight");
    return h;
}

TheoremCheck verify_theorem(const CartanData& cd, const TorusRestriction& tr)
{
    if (tr.rank() != cd.rank())
        throw InputError("torus weights have rank " + std::to_string(tr.rank()) + " but group " + cd.label() +
                         " has rank " + std::to_string(cd.rank()));
    TheoremCheck out;
    out.character = CharPoly(cd.rank());
    for (const auto& w : tr.weights())
        out.character += CharPoly::monomial(w);
    out.smap = s_map(induced_hom(tr));
    out.holds = out.character == out.smap;
    return out;
}

SchurFlagMap schur_flag_map(const Partition& mu, std::size_t m)
{
    if (m < 2)
        throw InputError("schur_flag_map: need m >= 2");
    if (mu.length() >= m)
        throw InputError("partition " + mu.str() + " must have last part zero for m = " + std::to_string(m));
    auto weights = weights_of_schur(mu, m);
    auto hom = induced_hom(TorusRestriction(weights));
    const std::size_t n = hom.n();
    if (mpz_class(static_cast<unsigned long>(n)) != schur_dim(mu, m))
        throw InternalError("tableau count disagrees with the hook-content formula");
    SchurFlagMap out{n, hom, alpha(s_map(hom)), schur(mu, m)};
    if (out.image != out.schur)
        throw InternalError("alpha(s(h)) differs from s_mu for mu = " + mu.str());
    return out;
}

} // namespace flagmaps
