#include "flagmaps/lie_core.hpp"

#include "flagmaps/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace flagmaps {

namespace {

constexpr std::size_t kMaxRootCount = 100'000;

IntMatrix type_a_matrix(std::size_t r)
{
    IntMatrix c(r, std::vector<Coord>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        c[i][i] = 2;
        if (i + 1 < r)
            c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

void validate_shape(const IntMatrix& c)
{
    const std::size_t r = c.size();
    if (r == 0)
        throw InputError("Cartan matrix must be nonempty");
    for (const auto& row : c)
        if (row.size() != r)
            throw InputError("Cartan matrix must be square");
    for (std::size_t i = 0; i < r; ++i) {
        if (c[i][i] != 2)
            throw InputError("Cartan matrix diagonal entries must equal 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                continue;
            if (c[i][j] > 0)
                throw InputError("Cartan matrix off-diagonal entries must be <= 0");
            if ((c[i][j] == 0) != (c[j][i] == 0))
                throw InputError("Cartan matrix must satisfy C_ij = 0 iff C_ji = 0");
        }
    }
}

// Minimal positive integers d with d_i C_ij = d_j C_ji, per connected component.
std::vector<Coord> find_symmetrizer(const IntMatrix& c)
{
    const std::size_t r = c.size();
    std::vector<mpq_class> d(r, 0);
    std::vector<Coord> out(r, 0);
    std::vector<bool> seen(r, false);
    for (std::size_t start = 0; start < r; ++start) {
        if (seen[start])
            continue;
        std::vector<std::size_t> component{start}, stack{start};
        seen[start] = true;
        d[start] = 1;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < r; ++j) {
                if (j == i || c[i][j] == 0)
                    continue;
                mpq_class dj = d[i] * mpq_class(c[i][j]) / mpq_class(c[j][i]);
                dj.canonicalize();
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    component.push_back(j);
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw InputError("Cartan matrix is not symmetrizable");
                }
            }
        }
        mpz_class den_lcm = 1, num_gcd = 0;
        for (auto i : component)
            den_lcm = lcm(den_lcm, mpz_class(d[i].get_den()));
        for (auto i : component) {
            mpz_class v = d[i].get_num() * (den_lcm / d[i].get_den());
            num_gcd = gcd(num_gcd, v);
        }
        for (auto i : component) {
            mpz_class v = d[i].get_num() * (den_lcm / d[i].get_den()) / num_gcd;
            if (!v.fits_slong_p())
                throw InputError("Cartan symmetrizer out of range");
            out[i] = v.get_si();
        }
    }
    return out;
}

// Sylvester: all pivots of the symmetrized matrix positive.
bool positive_definite(const IntMatrix& c, const std::vector<Coord>& d)
{
    const std::size_t r = c.size();
    std::vector<std::vector<mpq_class>> s(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            s[i][j] = mpq_class(d[i] * c[i][j]);
    for (std::size_t k = 0; k < r; ++k) {
        if (s[k][k] <= 0)
            return false;
        for (std::size_t i = k + 1; i < r; ++i) {
            mpq_class f = s[i][k] / s[k][k];
            for (std::size_t j = k; j < r; ++j)
                s[i][j] -= f * s[k][j];
        }
    }
    return true;
}

std::vector<std::vector<mpq_class>> inverse(const IntMatrix& c)
{
    const std::size_t r = c.size();
    std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            a[i][j] = mpq_class(c[i][j]);
        a[i][r + i] = 1;
    }
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t piv = k;
        while (piv < r && a[piv][k] == 0)
            ++piv;
        if (piv == r)
            throw InputError("Cartan matrix is singular");
        std::swap(a[k], a[piv]);
        mpq_class p = a[k][k];
        for (auto& x : a[k])
            x /= p;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == k || a[i][k] == 0)
                continue;
            mpq_class f = a[i][k];
            for (std::size_t j = 0; j < 2 * r; ++j)
                a[i][j] -= f * a[k][j];
        }
    }
    std::vector<std::vector<mpq_class>> inv(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            inv[i][j] = a[i][r + j];
    return inv;
}

Weight weight_of_simple_coeffs(const IntMatrix& c, const std::vector<Coord>& b)
{
    Weight w(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i)
            w[i] += b[j] * c[j][i];
    return w;
}

} // namespace

Coord Root::height() const
{
    return std::accumulate(simple.begin(), simple.end(), Coord{0});
}

CartanData CartanData::builtin(char series, std::size_t rank)
{
    series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
    const std::string tag = std::string(1, series) + std::to_string(rank);
    IntMatrix c;
    switch (series) {
    case 'A':
        if (rank < 1)
            throw InputError("type A requires rank >= 1: " + tag);
        c = type_a_matrix(rank);
        break;
    case 'B':
    case 'C':
        if (rank < 2)
            throw InputError(std::string("type ") + series + " requires rank >= 2: " + tag);
        c = type_a_matrix(rank);
        // alpha_n short for B, long for C
        c[rank - 2][rank - 1] = series == 'B' ? -2 : -1;
        c[rank - 1][rank - 2] = series == 'B' ? -1 : -2;
        break;
    case 'D':
        if (rank < 3)
            throw InputError("type D requires rank >= 3: " + tag);
        c = type_a_matrix(rank);
        c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
        c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
        break;
    case 'G':
        if (rank != 2)
            throw InputError("type G requires rank 2: " + tag);
        c = {{2, -1}, {-3, 2}};
        break;
    default:
        throw InputError("unknown Cartan series '" + std::string(1, series) + "'");
    }
    return from_matrix(c, tag);
}

CartanData CartanData::from_tag(const std::string& tag)
{
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto x = tag.find_first_of("x*", pos);
        parts.push_back(tag.substr(pos, x == std::string::npos ? std::string::npos : x - pos));
        if (x == std::string::npos)
            break;
        pos = x + 1;
    }
    std::optional<CartanData> result;
    for (const auto& p : parts) {
        if (p.size() < 2 || !std::isalpha(static_cast<unsigned char>(p[0])) ||
            !std::all_of(p.begin() + 1, p.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw InputError("malformed group tag '" + tag + "'");
        if (p.size() > 4)
            throw InputError("rank out of range in group tag '" + tag + "'");
        auto block = builtin(p[0], std::stoul(p.substr(1)));
        result = result ? product(*result, block) : block;
    }
    return *result;
}

CartanData CartanData::from_matrix(const IntMatrix& matrix, std::string label)
{
    validate_shape(matrix);
    CartanData cd;
    cd.cartan_ = matrix;
    cd.label_ = std::move(label);
    cd.symmetrizer_ = find_symmetrizer(matrix);
    if (!positive_definite(matrix, cd.symmetrizer_))
        throw InputError("Cartan matrix is not of finite type");
    cd.finish();
    return cd;
}

CartanData CartanData::product(const CartanData& a, const CartanData& b)
{
    const std::size_t r = a.rank() + b.rank();
    IntMatrix c(r, std::vector<Coord>(r, 0));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            c[i][j] = a.cartan_[i][j];
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            c[a.rank() + i][a.rank() + j] = b.cartan_[i][j];
    return from_matrix(c, a.label_ + "x" + b.label_);
}

void CartanData::finish()
{
    const std::size_t r = rank();
    symmetrizer_lcm_ = 1;
    for (auto d : symmetrizer_)
        symmetrizer_lcm_ = std::lcm(symmetrizer_lcm_, d);

    auto inv = inverse(cartan_);
    gram_.assign(r, std::vector<mpq_class>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            gram_[i][k] = inv[k][i] * mpq_class(symmetrizer_lcm_ / symmetrizer_[i]);
            gram_[i][k].canonicalize();
        }

    std::vector<mpq_class> h(r, 0);
    mpz_class den = 1;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            h[i] += inv[i][j];
        h[i].canonicalize();
        den = lcm(den, mpz_class(h[i].get_den()));
    }
    height_coeffs_.resize(r);
    for (std::size_t i = 0; i < r; ++i)
        height_coeffs_[i] = h[i].get_num() * (den / h[i].get_den());

    weyl_vector_ = Weight(std::vector<Coord>(r, 1));

    // Closure of the simple roots under root strings, level by level in height.
    std::map<std::vector<Coord>, bool> known;
    std::vector<std::vector<Coord>> level;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Coord> b(r, 0);
        b[i] = 1;
        known[b] = true;
        level.push_back(b);
    }
    positive_roots_.clear();
    while (!level.empty()) {
        std::vector<std::vector<Coord>> next;
        for (const auto& b : level) {
            Weight w = weight_of_simple_coeffs(cartan_, b);
            positive_roots_.push_back(Root{w, b});
            for (std::size_t i = 0; i < r; ++i) {
                bool is_simple_i = b[i] == 1 && std::accumulate(b.begin(), b.end(), Coord{0}) == 1;
                if (is_simple_i)
                    continue;
                Coord p = 0;
                auto down = b;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down))
                        break;
                    ++p;
                }
                Coord q = p - w[i];
                if (q > 0) {
                    auto up = b;
                    ++up[i];
                    if (!known.count(up)) {
                        known[up] = true;
                        next.push_back(up);
                    }
                }
            }
        }
        if (known.size() > kMaxRootCount)
            throw InputError("root system too large");
        std::sort(next.begin(), next.end(), std::greater<>());
        level = std::move(next);
    }
}

bool CartanData::is_type_a() const
{
    return cartan_ == type_a_matrix(rank());
}

Weight CartanData::simple_root(std::size_t i) const
{
    return Weight(cartan_.at(i));
}

mpq_class CartanData::inner(const Weight& u, const Weight& v) const
{
    if (u.rank() != rank() || v.rank() != rank())
        throw InputError("inner: weight rank does not match group rank " + std::to_string(rank()));
    mpq_class s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t k = 0; k < rank(); ++k)
            if (u[i] != 0 && v[k] != 0)
                s += mpq_class(u[i]) * mpq_class(v[k]) * gram_[i][k];
    s.canonicalize();
    return s;
}

Coord CartanData::pair_with_root(const Weight& v, const std::vector<Coord>& simple_coeffs) const
{
    Coord s = 0;
    for (std::size_t j = 0; j < rank(); ++j)
        s += simple_coeffs[j] * v[j] * (symmetrizer_lcm_ / symmetrizer_[j]);
    return s;
}

Weight CartanData::reflect(const Weight& v, std::size_t i) const
{
    Weight r(v);
    const Coord vi = v[i];
    if (vi != 0)
        for (std::size_t j = 0; j < rank(); ++j)
            r[j] -= vi * cartan_[i][j];
    return r;
}

Weight CartanData::dominant_representative(const Weight& v) const
{
    Weight w(v);
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < rank(); ++i)
            if (w[i] < 0) {
                w = reflect(w, i);
                moved = true;
            }
    }
    return w;
}

std::vector<Weight> CartanData::weyl_orbit(const Weight& v, std::size_t cap) const
{
    if (v.rank() != rank())
        throw InputError("weyl_orbit: weight rank does not match group rank");
    std::unordered_set<Weight, WeightHash> seen{v};
    std::vector<Weight> frontier{v};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (std::size_t i = 0; i < rank(); ++i) {
                if (w[i] == 0)
                    continue;
                auto s = reflect(w, i);
                if (seen.insert(s).second) {
                    if (seen.size() > cap)
                        throw ResourceError("Weyl orbit exceeds cap of " + std::to_string(cap));
                    next.push_back(std::move(s));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class CartanData::height_key(const Weight& v) const
{
    mpz_class s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        s += height_coeffs_[i] * v[i];
    return s;
}

} // namespace flagmaps
