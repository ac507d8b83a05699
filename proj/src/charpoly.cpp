#include "flagmaps/charpoly.hpp"

#include "flagmaps/errors.hpp"
#include "term_grammar.hpp"

#include <algorithm>

namespace flagmaps {

NormalMonomial normalize(const Weight& w)
{
    NormalMonomial nm;
    Coord lo = 0;
    for (Coord c : w.coords())
        lo = std::min(lo, c);
    nm.rho_exp = -lo;
    nm.omega_exps.reserve(w.rank());
    for (Coord c : w.coords())
        nm.omega_exps.push_back(c + nm.rho_exp);
    return nm;
}

Weight denormalize(const NormalMonomial& nm)
{
    Coord lo = nm.rho_exp;
    for (Coord a : nm.omega_exps)
        lo = std::min(lo, a);
    if (lo != 0)
        throw InputError(lo < 0 ? "monomial exponents must be nonnegative"
                                : "monomial is not reduced: min(a', c) must be 0");
    Weight w(nm.omega_exps.size());
    for (std::size_t k = 0; k < nm.omega_exps.size(); ++k)
        w[k] = nm.omega_exps[k] - nm.rho_exp;
    return w;
}

CharPoly CharPoly::monomial(const Weight& w, const mpz_class& coeff)
{
    CharPoly p(w.rank());
    p.add_term(w, coeff);
    return p;
}

CharPoly CharPoly::constant(std::size_t rank, const mpz_class& value)
{
    return monomial(Weight(rank), value);
}

CharPoly CharPoly::from_weights(std::size_t rank, const std::vector<Weight>& weights)
{
    CharPoly p(rank);
    for (const auto& w : weights)
        p.add_term(w, 1);
    return p;
}

bool CharPoly::is_effective() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return sgn(t.second) > 0; });
}

mpz_class CharPoly::coefficient(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void CharPoly::add_term(const Weight& w, const mpz_class& c)
{
    if (w.rank() != rank_)
        throw InputError("monomial rank " + std::to_string(w.rank()) + " does not match polynomial rank " +
                         std::to_string(rank_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::vector<std::pair<Weight, mpz_class>> CharPoly::sorted_terms() const
{
    std::vector<std::pair<NormalMonomial, const std::pair<const Weight, mpz_class>*>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& t : terms_)
        keyed.emplace_back(normalize(t.first), &t);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.omega_exps != b.first.omega_exps)
            return a.first.omega_exps > b.first.omega_exps;
        return a.first.rho_exp > b.first.rho_exp;
    });
    std::vector<std::pair<Weight, mpz_class>> out;
    out.reserve(keyed.size());
    for (const auto& k : keyed)
        out.emplace_back(k.second->first, k.second->second);
    return out;
}

void CharPoly::check_rank(const CharPoly& o) const
{
    if (o.rank_ != rank_)
        throw InputError("polynomial rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
}

CharPoly& CharPoly::operator+=(const CharPoly& o)
{
    check_rank(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

CharPoly& CharPoly::operator-=(const CharPoly& o)
{
    check_rank(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

CharPoly& CharPoly::operator*=(const mpz_class& k)
{
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= k;
    return *this;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b)
{
    a.check_rank(b);
    CharPoly r(a.rank_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            r.add_term(wa + wb, ca * cb);
    return r;
}

bool operator==(const CharPoly& a, const CharPoly& b)
{
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

mpz_class evaluate_at_one(const CharPoly& p)
{
    mpz_class s = 0;
    for (const auto& t : p.terms())
        s += t.second;
    return s;
}

namespace {

std::vector<detail::RenderFactor> monomial_factors(const Weight& w)
{
    auto nm = normalize(w);
    std::vector<detail::RenderFactor> f;
    for (std::size_t k = 0; k < nm.omega_exps.size(); ++k)
        if (nm.omega_exps[k] != 0)
            f.emplace_back("w" + std::to_string(k + 1), nm.omega_exps[k]);
    if (nm.rho_exp != 0)
        f.emplace_back("rho", nm.rho_exp);
    return f;
}

} // namespace

std::string render(const CharPoly& p)
{
    std::vector<detail::RenderTerm> terms;
    for (auto& [w, c] : p.sorted_terms())
        terms.push_back({c, monomial_factors(w)});
    return detail::render_terms(terms);
}

std::string render_monomial(const Weight& w)
{
    return detail::render_terms({{1, monomial_factors(w)}});
}

CharPoly parse_charpoly(std::string_view text, std::size_t rank)
{
    if (rank == 0)
        throw InputError("polynomial rank must be positive");
    CharPoly p(rank);
    for (const auto& term : detail::parse_terms(text)) {
        Weight w(rank);
        for (const auto& f : term.factors) {
            std::string prefix;
            std::size_t index = 0;
            if (f.name == "rho") {
                for (std::size_t k = 0; k < rank; ++k)
                    w[k] -= f.exponent;
            } else if (detail::split_indexed(f.name, prefix, index) && prefix == "w") {
                if (index < 1 || index > rank)
                    throw InputError("variable " + f.name + " out of range for rank " + std::to_string(rank));
                w[index - 1] += f.exponent;
            } else {
                throw InputError("unknown variable '" + f.name + "'");
            }
        }
        p.add_term(w, term.coeff);
    }
    return p;
}

} // namespace flagmaps
