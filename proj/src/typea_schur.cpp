#include "flagmaps/typea_schur.hpp"

#include "flagmaps/errors.hpp"
#include "term_grammar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flagmaps {

Partition::Partition(std::vector<Coord> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InputError("partition parts must be nonnegative: " + str());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing: " + str());
    }
}

Partition Partition::parse(const std::string& text)
{
    auto w = parse_weight(text);
    return Partition(std::vector<Coord>(w.coords().begin(), w.coords().end()));
}

std::size_t Partition::length() const
{
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](Coord p) { return p > 0; }));
}

Coord Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), Coord{0});
}

std::vector<Coord> Partition::padded(std::size_t m) const
{
    if (length() > m)
        throw InputError("partition " + str() + " has more than " + std::to_string(m) + " nonzero parts");
    std::vector<Coord> out(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        out[i] = part(i);
    return out;
}

std::string Partition::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    return os.str();
}

YPoly::Exponents YPoly::canonical(Exponents e)
{
    if (e.empty())
        return e;
    Coord lo = *std::min_element(e.begin(), e.end());
    for (auto& x : e)
        x -= lo;
    return e;
}

void YPoly::add_term(Exponents e, const mpz_class& c)
{
    if (e.size() != nvars_)
        throw InputError("y-monomial has " + std::to_string(e.size()) + " exponents, expected " +
                         std::to_string(nvars_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(canonical(std::move(e)), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

mpz_class YPoly::coefficient(Exponents e) const
{
    auto it = terms_.find(canonical(std::move(e)));
    return it == terms_.end() ? mpz_class(0) : it->second;
}

YPoly& YPoly::operator+=(const YPoly& o)
{
    if (o.nvars_ != nvars_)
        throw InputError("y-polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

YPoly operator*(const YPoly& a, const YPoly& b)
{
    if (a.nvars_ != b.nvars_)
        throw InputError("y-polynomial variable count mismatch");
    YPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            YPoly::Exponents e(ea);
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] += eb[k];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

mpz_class evaluate_at_one(const YPoly& q)
{
    mpz_class s = 0;
    for (const auto& t : q.terms())
        s += t.second;
    return s;
}

std::string render(const YPoly& q)
{
    std::vector<detail::RenderTerm> terms;
    for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
        detail::RenderTerm t{it->second, {}};
        for (std::size_t k = 0; k < it->first.size(); ++k)
            if (it->first[k] != 0)
                t.factors.emplace_back("y" + std::to_string(k + 1), it->first[k]);
        terms.push_back(std::move(t));
    }
    return detail::render_terms(terms);
}

YPoly parse_ypoly(std::string_view text, std::size_t nvars)
{
    if (nvars == 0)
        throw InputError("y-polynomial needs at least one variable");
    YPoly q(nvars);
    for (const auto& term : detail::parse_terms(text)) {
        YPoly::Exponents e(nvars, 0);
        for (const auto& f : term.factors) {
            std::string prefix;
            std::size_t index = 0;
            if (!detail::split_indexed(f.name, prefix, index) || prefix != "y")
                throw InputError("unknown variable '" + f.name + "'");
            if (index < 1 || index > nvars)
                throw InputError("variable " + f.name + " out of range for " + std::to_string(nvars) + " variables");
            e[index - 1] += f.exponent;
        }
        q.add_term(std::move(e), term.coeff);
    }
    return q;
}

void for_each_ssyt_content(const Partition& mu, std::size_t m,
                           const std::function<void(const std::vector<Coord>&)>& visit)
{
    if (m == 0)
        throw InputError("need at least one variable");
    auto shape = mu.padded(m);
    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();

    std::vector<std::vector<Coord>> tableau;
    for (Coord len : shape)
        tableau.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<Coord> content(m, 0);
    std::vector<std::vector<Coord>> contents;

    auto rec = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == tableau.size()) {
            contents.push_back(content);
            return;
        }
        if (col == tableau[row].size()) {
            self(self, row + 1, 0);
            return;
        }
        Coord lo = 1;
        if (col > 0)
            lo = std::max(lo, tableau[row][col - 1]);
        if (row > 0)
            lo = std::max(lo, tableau[row - 1][col] + 1);
        // leave room for the strictly increasing cells below in this column
        Coord below = 0;
        for (std::size_t k = row + 1; k < tableau.size() && tableau[k].size() > col; ++k)
            ++below;
        Coord hi = static_cast<Coord>(m) - below;
        for (Coord v = lo; v <= hi; ++v) {
            tableau[row][col] = v;
            ++content[v - 1];
            self(self, row, col + 1);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    std::stable_sort(contents.begin(), contents.end(), std::greater<>());
    for (const auto& c : contents)
        visit(c);
}

YPoly schur(const Partition& mu, std::size_t m)
{
    YPoly q(m);
    for_each_ssyt_content(mu, m, [&](const std::vector<Coord>& e) { q.add_term(e, 1); });
    return q;
}

mpz_class schur_dim(const Partition& mu, std::size_t m)
{
    auto shape = mu.padded(m);
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (Coord j = 0; j < shape[i]; ++j) {
            Coord arm = shape[i] - j - 1;
            Coord leg = 0;
            for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k)
                ++leg;
            num *= static_cast<long>(static_cast<Coord>(m) + j - static_cast<Coord>(i));
            den *= static_cast<long>(arm + leg + 1);
        }
    return num / den;
}

YPoly alpha(const CharPoly& p)
{
    const std::size_t r = p.rank();
    if (r == 0)
        throw InputError("alpha: polynomial rank must be positive");
    YPoly q(r + 1);
    for (const auto& [w, c] : p.terms()) {
        YPoly::Exponents e(r + 1, 0);
        // w_k -> y1...yk, so y_j collects a_j + ... + a_r.
        Coord acc = 0;
        for (std::size_t j = r; j-- > 0;) {
            acc += w[j];
            e[j] = acc;
        }
        q.add_term(std::move(e), c);
    }
    return q;
}

CharPoly alpha_inverse(const YPoly& q)
{
    const std::size_t m = q.nvars();
    if (m < 2)
        throw InputError("alpha_inverse: need at least two variables");
    CharPoly p(m - 1);
    for (const auto& [e, c] : q.terms()) {
        Weight w(m - 1);
        for (std::size_t k = 0; k + 1 < m; ++k)
            w[k] = e[k] - e[k + 1];
        p.add_term(w, c);
    }
    return p;
}

Weight weight_of_partition(const Partition& mu, std::size_t m)
{
    if (m < 2)
        throw InputError("weight_of_partition: need m >= 2");
    auto parts = mu.padded(m);
    Weight w(m - 1);
    for (std::size_t k = 0; k + 1 < m; ++k)
        w[k] = parts[k] - parts[k + 1];
    return w;
}

std::vector<Weight> weights_of_schur(const Partition& mu, std::size_t m)
{
    if (m < 2)
        throw InputError("weights_of_schur: need m >= 2");
    std::vector<Weight> out;
    for_each_ssyt_content(mu, m, [&](const std::vector<Coord>& e) {
        Weight w(m - 1);
        for (std::size_t k = 0; k + 1 < m; ++k)
            w[k] = e[k] - e[k + 1];
        out.push_back(std::move(w));
    });
    return out;
}

} // namespace flagmaps
