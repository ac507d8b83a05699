#include "flagmaps/characters.hpp"

#include "flagmaps/errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace flagmaps {

namespace {

void require_dominant(const CartanData& cd, const Weight& lambda, const char* what)
{
    if (lambda.rank() != cd.rank())
        throw InputError(std::string(what) + ": weight " + lambda.str() + " does not match group rank " +
                         std::to_string(cd.rank()));
    if (!is_dominant(lambda))
        throw InputError(std::string(what) + ": weight " + lambda.str() + " is not dominant");
}

struct DominantEntry {
    Weight mu;
    std::vector<Coord> depth;   // lambda - mu in simple roots
    Coord height;
};

// Dominant weights below lambda, reached by subtracting positive roots while
// staying dominant (this connects the whole dominant part of the saturated set).
std::vector<DominantEntry> dominant_below(const CartanData& cd, const Weight& lambda)
{
    std::vector<DominantEntry> out{{lambda, std::vector<Coord>(cd.rank(), 0), 0}};
    std::unordered_map<Weight, std::size_t, WeightHash> index{{lambda, 0}};
    for (std::size_t at = 0; at < out.size(); ++at) {
        for (const auto& beta : cd.positive_roots()) {
            Weight nu = out[at].mu - beta.weight;
            if (!is_dominant(nu) || index.count(nu))
                continue;
            auto depth = out[at].depth;
            for (std::size_t j = 0; j < depth.size(); ++j)
                depth[j] += beta.simple[j];
            Coord h = out[at].height + beta.height();
            index.emplace(nu, out.size());
            out.push_back({std::move(nu), std::move(depth), h});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const DominantEntry& a, const DominantEntry& b) { return a.height < b.height; });
    return out;
}

CharPoly freudenthal(const CartanData& cd, const Weight& lambda, const Limits& limits)
{
    const std::size_t r = cd.rank();
    if (r > limits.max_rank)
        throw ResourceError("rank " + std::to_string(r) + " exceeds cap " + std::to_string(limits.max_rank));

    auto dominant = dominant_below(cd, lambda);
    std::unordered_map<Weight, mpz_class, WeightHash> mult;
    mult.reserve(dominant.size());

    auto multiplicity = [&](const Weight& nu) -> const mpz_class* {
        auto it = mult.find(cd.dominant_representative(nu));
        return it == mult.end() ? nullptr : &it->second;
    };

    Weight two_delta = 2 * cd.weyl_vector();
    mult.emplace(lambda, 1);
    for (std::size_t e = 1; e < dominant.size(); ++e) {
        const auto& [mu, depth, height] = dominant[e];
        mpz_class numer = 0;
        for (const auto& beta : cd.positive_roots()) {
            Weight nu = mu + beta.weight;
            while (const mpz_class* m = multiplicity(nu)) {
                numer += *m * cd.pair_with_root(nu, beta.simple);
                nu += beta.weight;
            }
        }
        numer *= 2;
        Coord denom = cd.pair_with_root(lambda + mu + two_delta, depth);
        if (denom <= 0)
            throw InternalError("Freudenthal denominator not positive at " + mu.str());
        if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(denom)))
            throw InternalError("Freudenthal multiplicity not integral at " + mu.str());
        mpz_class m = numer / denom;
        // Every dominant weight below lambda occurs, so a zero here is a bug.
        if (m <= 0)
            throw InternalError("Freudenthal multiplicity not positive at " + mu.str());
        mult.emplace(mu, std::move(m));
    }

    CharPoly chi(r);
    std::size_t terms = 0;
    for (const auto& entry : dominant) {
        const mpz_class& m = mult.at(entry.mu);
        auto orbit = cd.weyl_orbit(entry.mu, limits.max_orbit);
        terms += orbit.size();
        if (terms > limits.max_terms)
            throw ResourceError("character of " + lambda.str() + " exceeds term cap " +
                                std::to_string(limits.max_terms));
        for (const auto& w : orbit)
            chi.add_term(w, m);
    }
    return chi;
}

class CharacterCache {
public:
    std::shared_ptr<const CharPoly> find(const CartanData& cd, const Weight& lambda) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(Key{cd.cartan_matrix(), lambda});
        return it == table_.end() ? nullptr : it->second;
    }
    void insert(const CartanData& cd, const Weight& lambda, std::shared_ptr<const CharPoly> chi)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(Key{cd.cartan_matrix(), lambda}, std::move(chi));
    }
    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    using Key = std::pair<IntMatrix, Weight>;
    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const CharPoly>> table_;
};

CharacterCache& cache()
{
    static CharacterCache instance;
    return instance;
}

// Total order: larger height first, ties by descending lex.
struct HigherFirst {
    const CartanData* cd;
    bool operator()(const std::pair<mpz_class, Weight>& a, const std::pair<mpz_class, Weight>& b) const
    {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second > b.second;
    }
};

template <class Range>
Weight highest_of(const CartanData& cd, const Range& weights)
{
    std::optional<std::pair<mpz_class, Weight>> best;
    HigherFirst cmp{&cd};
    for (const Weight& w : weights) {
        std::pair<mpz_class, Weight> k{cd.height_key(w), w};
        if (!best || cmp(k, *best))
            best = std::move(k);
    }
    return best->second;
}

} // namespace

CharPoly weight_multiplicities_uncached(const CartanData& cd, const Weight& lambda, const Limits& limits)
{
    require_dominant(cd, lambda, "weight_multiplicities");
    return freudenthal(cd, lambda, limits);
}

CharPoly weight_multiplicities(const CartanData& cd, const Weight& lambda, const Limits& limits)
{
    require_dominant(cd, lambda, "weight_multiplicities");
    if (auto hit = cache().find(cd, lambda)) {
        if (hit->size() > limits.max_terms)
            throw ResourceError("character of " + lambda.str() + " exceeds term cap " +
                                std::to_string(limits.max_terms));
        return *hit;
    }
    auto chi = std::make_shared<const CharPoly>(freudenthal(cd, lambda, limits));
    cache().insert(cd, lambda, chi);
    return *chi;
}

void clear_character_cache()
{
    cache().clear();
}

mpz_class dimension(const CartanData& cd, const Weight& lambda)
{
    require_dominant(cd, lambda, "dimension");
    const Weight shifted = lambda + cd.weyl_vector();
    mpz_class num = 1, den = 1;
    for (const auto& beta : cd.positive_roots()) {
        num *= cd.pair_with_root(shifted, beta.simple);
        den *= cd.pair_with_root(cd.weyl_vector(), beta.simple);
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InternalError("Weyl dimension formula not integral for " + lambda.str());
    return num / den;
}

Certificate Certificate::from_summands(const CartanData& cd, std::vector<Summand> summands)
{
    std::map<Weight, mpz_class, std::greater<>> merged;
    for (auto& s : summands) {
        require_dominant(cd, s.lambda, "certificate");
        if (s.multiplicity <= 0)
            throw InputError("certificate multiplicities must be positive");
        merged[s.lambda] += s.multiplicity;
    }
    Certificate c;
    for (auto& [lambda, m] : merged) {
        c.total_dim += m * dimension(cd, lambda);
        c.summands.push_back({lambda, m});
    }
    return c;
}

std::string NotInOmega::describe() const
{
    std::ostringstream os;
    switch (reason) {
    case Reason::NegativeCoefficient:
        os << "negative coefficient " << deficit.get_str() << " at weight " << witness->str();
        break;
    case Reason::NoDominantWeight:
        os << "remainder has no dominant weight; coefficient " << deficit.get_str() << " at weight "
           << witness->str();
        break;
    case Reason::NotEffective:
        os << "input is not effective: coefficient " << deficit.get_str() << " at weight " << witness->str();
        break;
    case Reason::DimensionMismatch:
        os << "dimension mismatch: polynomial evaluates to " << actual_dim.get_str() << ", expected "
           << expected_dim.get_str();
        break;
    }
    return os.str();
}

CharPoly character_of(const CartanData& cd, const Certificate& cert, const Limits& limits)
{
    CharPoly p(cd.rank());
    for (const auto& s : cert.summands)
        p += s.multiplicity * weight_multiplicities(cd, s.lambda, limits);
    return p;
}

Decomposition decompose(const CartanData& cd, const CharPoly& p, const Limits& limits)
{
    if (p.rank() != cd.rank())
        throw InputError("decompose: polynomial rank " + std::to_string(p.rank()) + " does not match group rank " +
                         std::to_string(cd.rank()));
    if (!p.is_effective()) {
        std::vector<Weight> negative;
        for (const auto& [w, c] : p.terms())
            if (c < 0)
                negative.push_back(w);
        NotInOmega f;
        f.reason = NotInOmega::Reason::NotEffective;
        f.witness = highest_of(cd, negative);
        f.deficit = p.coefficient(*f.witness);
        return f;
    }

    CharPoly::TermMap rem = p.terms();
    HigherFirst cmp{&cd};
    std::set<std::pair<mpz_class, Weight>, HigherFirst> frontier(cmp);
    for (const auto& [w, c] : rem)
        if (is_dominant(w))
            frontier.emplace(cd.height_key(w), w);

    std::vector<Summand> summands;
    while (!frontier.empty()) {
        const Weight lambda = frontier.begin()->second;
        const mpz_class c = rem.at(lambda);
        summands.push_back({lambda, c});
        std::vector<Weight> negative;
        const CharPoly chi = weight_multiplicities(cd, lambda, limits);
        for (const auto& [w, m] : chi.terms()) {
            auto [it, inserted] = rem.try_emplace(w, 0);
            it->second -= c * m;
            if (it->second == 0) {
                rem.erase(it);
                if (is_dominant(w))
                    frontier.erase({cd.height_key(w), w});
            } else if (it->second < 0) {
                negative.push_back(w);
            }
        }
        if (!negative.empty()) {
            NotInOmega f;
            f.reason = NotInOmega::Reason::NegativeCoefficient;
            f.witness = highest_of(cd, negative);
            f.deficit = rem.at(*f.witness);
            return f;
        }
    }
    if (!rem.empty()) {
        std::vector<Weight> left;
        for (const auto& t : rem)
            left.push_back(t.first);
        NotInOmega f;
        f.reason = NotInOmega::Reason::NoDominantWeight;
        f.witness = highest_of(cd, left);
        f.deficit = rem.at(*f.witness);
        return f;
    }
    return Certificate::from_summands(cd, std::move(summands));
}

Decomposition is_in_omega_n(const CartanData& cd, const CharPoly& p, const mpz_class& n, const Limits& limits)
{
    auto value = evaluate_at_one(p);
    if (value != n) {
        NotInOmega f;
        f.reason = NotInOmega::Reason::DimensionMismatch;
        f.expected_dim = n;
        f.actual_dim = value;
        return f;
    }
    return decompose(cd, p, limits);
}

std::vector<std::pair<Weight, mpz_class>> dominant_weights_up_to_dim(const CartanData& cd, unsigned n)
{
    std::vector<std::pair<Weight, mpz_class>> out;
    Weight lambda(cd.rank());
    // dim is strictly increasing in every coordinate, so zeroed tails bound
    // the search from below.
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cd.rank()) {
            out.emplace_back(lambda, dimension(cd, lambda));
            return;
        }
        for (Coord v = 0;; ++v) {
            lambda[i] = v;
            if (dimension(cd, lambda) > n)
                break;
            self(self, i + 1);
        }
        lambda[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first > b.first;
    });
    return out;
}

void omega_n_enumerate(const CartanData& cd, unsigned n, const std::function<bool(const Certificate&)>& visit,
                       const Limits& limits)
{
    if (n == 0)
        throw InputError("omega: n must be positive");
    if (n > limits.max_n)
        throw ResourceError("omega: n = " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_n));
    if (cd.rank() > limits.max_rank)
        throw ResourceError("rank " + std::to_string(cd.rank()) + " exceeds cap " + std::to_string(limits.max_rank));

    const auto weights = dominant_weights_up_to_dim(cd, n);
    std::vector<unsigned long> dims;
    for (const auto& w : weights)
        dims.push_back(w.second.get_ui());

    std::vector<std::size_t> chosen;
    bool stop = false;
    auto emit = [&] {
        std::vector<Summand> summands;
        for (std::size_t k = 0; k < chosen.size();) {
            std::size_t j = k;
            while (j < chosen.size() && chosen[j] == chosen[k])
                ++j;
            summands.push_back({weights[chosen[k]].first, mpz_class(static_cast<unsigned long>(j - k))});
            k = j;
        }
        if (!visit(Certificate::from_summands(cd, std::move(summands))))
            stop = true;
    };
    auto rec = [&](auto&& self, std::size_t start, unsigned long remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t j = start; j < weights.size() && !stop; ++j) {
            if (dims[j] > remaining)
                continue;
            chosen.push_back(j);
            self(self, j, remaining - dims[j]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n);
}

std::vector<Certificate> omega_n_list(const CartanData& cd, unsigned n, const Limits& limits)
{
    std::vector<Certificate> out;
    omega_n_enumerate(cd, n, [&](const Certificate& c) { out.push_back(c); return true; }, limits);
    return out;
}

} // namespace flagmaps
