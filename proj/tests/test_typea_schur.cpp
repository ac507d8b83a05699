#include <doctest.h>

#include "flagmaps/characters.hpp"
#include "flagmaps/errors.hpp"
#include "flagmaps/typea_schur.hpp"
#include "oracles.hpp"

#include <random>

using namespace flagmaps;

TEST_CASE("partitions")
{
    Partition mu = Partition::parse("2,1,0");
    CHECK(mu.length() == 2);
    CHECK(mu.size() == 3);
    CHECK(mu.padded(4) == std::vector<Coord>{2, 1, 0, 0});
    CHECK(mu.padded(2) == std::vector<Coord>{2, 1});
    CHECK_THROWS_AS(mu.padded(1), InputError);
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK_THROWS_AS(Partition({2, -1}), InputError);
    CHECK_THROWS_AS(Partition::parse("a"), InputError);
    CHECK(Partition().length() == 0);
}

TEST_CASE("elementary Schur polynomials")
{
    CHECK(render(schur(Partition({1, 1}), 3)) == "y1*y2 + y1*y3 + y2*y3");
    CHECK(render(schur(Partition({1}), 3)) == "y1 + y2 + y3");
    CHECK(render(schur(Partition(), 3)) == "1");
    // e_m is the unit
    CHECK(render(schur(Partition({1, 1, 1}), 3)) == "1");
    CHECK(schur(Partition({2, 1}), 3) == parse_ypoly("y1^2*y2 + y1^2*y3 + y2^2*y1 + y2^2*y3 + y3^2*y1 + y3^2*y2 + 2*y1*y2*y3", 3));
    CHECK_THROWS_AS(schur(Partition({1, 1}), 1), InputError);
}

TEST_CASE("relation y1...ym = 1")
{
    auto q = parse_ypoly("y1*y2*y3 + y1^2*y2^2*y3^2", 3);
    CHECK(render(q) == "2");
    CHECK(YPoly::canonical({2, 3, 1}) == YPoly::Exponents{1, 2, 0});
    CHECK_THROWS_AS(parse_ypoly("y4", 3), InputError);
    CHECK_THROWS_AS(parse_ypoly("w1", 3), InputError);
}

TEST_CASE("schur agrees with Jacobi-Trudi")
{
    for (std::size_t m = 2; m <= 4; ++m)
        for (Coord k = 0; k <= 6; ++k)
            for (const auto& mu : oracle::partitions_of(k, m))
                CHECK(schur(Partition(mu), m) == oracle::jacobi_trudi(mu, m));
}

TEST_CASE("three ways of counting tableaux agree")
{
    for (std::size_t m = 1; m <= 4; ++m)
        for (Coord k = 0; k <= 6; ++k)
            for (const auto& mu : oracle::partitions_of(k, m)) {
                Partition p(mu);
                auto hook = schur_dim(p, m);
                CHECK(hook == evaluate_at_one(schur(p, m)));
                CHECK(hook == oracle::ssyt_count_brute(mu, m));
            }
    CHECK(schur_dim(Partition({2, 1}), 3) == 8);
    CHECK_THROWS_AS(schur_dim(Partition({1, 1}), 1), InputError);
    CHECK(schur_dim(Partition({2}), 3) == 6);
    CHECK(schur_dim(Partition({1, 1, 1}), 3) == 1);
}

TEST_CASE("ssyt contents come in descending order")
{
    std::vector<std::vector<Coord>> seen;
    for_each_ssyt_content(Partition({2, 1}), 3, [&](const std::vector<Coord>& c) { seen.push_back(c); });
    CHECK(seen.size() == 8);
    CHECK(std::is_sorted(seen.rbegin(), seen.rend()));
    CHECK(seen.front() == std::vector<Coord>{2, 1, 0});
}

TEST_CASE("alpha on generators")
{
    // m = 3: w1 -> y1, w2 -> y1 y2, rho -> y2 y3^2
    CHECK(render(alpha(parse_charpoly("w1", 2))) == "y1");
    CHECK(render(alpha(parse_charpoly("w2", 2))) == "y1*y2");
    CHECK(alpha(parse_charpoly("rho", 2)) == parse_ypoly("y2*y3^2", 3));
    CHECK(render(alpha(parse_charpoly("w2^2*rho", 2))) == "y2");
    CHECK(render(alpha(parse_charpoly("w1*rho", 2))) == "y3");
}

TEST_CASE("alpha is a ring isomorphism")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        std::size_t rank = 1 + t % 3;
        auto a = oracle::random_poly(rng, rank, 5, 9, 4);
        auto b = oracle::random_poly(rng, rank, 5, 9, 4);
        CHECK(alpha(a * b) == alpha(a) * alpha(b));
        CHECK(alpha(a + b) == alpha(a) + alpha(b));
        CHECK(alpha_inverse(alpha(a)) == a);
        CHECK(evaluate_at_one(alpha(a)) == evaluate_at_one(a));
    }
}

TEST_CASE("alpha carries SU(m) characters to Schur polynomials")
{
    for (std::size_t m = 2; m <= 4; ++m) {
        auto cd = CartanData::builtin('A', m - 1);
        for (Coord k = 0; k <= 5; ++k)
            for (const auto& mu : oracle::partitions_of(k, m - 1)) {
                Partition p(mu);
                auto chi = weight_multiplicities(cd, weight_of_partition(p, m));
                CHECK(alpha(chi) == schur(p, m));
                CHECK(CharPoly::from_weights(m - 1, weights_of_schur(p, m)) == chi);
            }
    }
}

TEST_CASE("weight_of_partition")
{
    CHECK(weight_of_partition(Partition({2, 1}), 3) == Weight{1, 1});
    CHECK(weight_of_partition(Partition({3}), 2) == Weight{3});
    CHECK_THROWS_AS(weight_of_partition(Partition({1}), 1), InputError);
}

TEST_CASE("alpha and its inverse on single monomials")
{
    CHECK(render(alpha(parse_charpoly("w1 + rho", 1))) == "y1 + y2");
    CHECK(alpha_inverse(parse_ypoly("y2", 3)) == CharPoly::monomial(Weight{-1, 1}));
    CHECK(alpha_inverse(parse_ypoly("y1*y2*y3", 3)) == CharPoly::constant(2, 1));
    auto a2 = CartanData::builtin('A', 2);
    CHECK(alpha_inverse(schur(Partition({1}), 3)) == weight_multiplicities(a2, Weight{1, 0}));
    CHECK(weight_of_partition(Partition({1, 0, 0}), 3) == Weight{1, 0});
    CHECK(weight_of_partition(Partition({1, 1, 0}), 3) == Weight{0, 1});
}

TEST_CASE("weights_of_schur lists one weight per tableau")
{
    CHECK(weights_of_schur(Partition({1}), 2) == std::vector<Weight>{Weight{1}, Weight{-1}});
    CHECK(weights_of_schur(Partition({1, 1}), 3) == std::vector<Weight>{Weight{0, 1}, Weight{1, -1}, Weight{-1, 0}});
    CHECK(weights_of_schur(Partition({1}), 3) == std::vector<Weight>{Weight{1, 0}, Weight{-1, 1}, Weight{0, -1}});
    for (std::size_t m = 2; m <= 4; ++m)
        for (Coord k = 0; k <= 6; ++k)
            for (const auto& mu : oracle::partitions_of(k, m)) {
                auto ws = weights_of_schur(Partition(mu), m);
                CHECK(mpz_class(static_cast<long>(ws.size())) == schur_dim(Partition(mu), m));
                Weight total(m - 1);
                for (const auto& w : ws)
                    total += w;
                // symmetric content makes every difference of totals vanish
                CHECK(total.is_zero());
            }
}

TEST_CASE("Schur polynomials are symmetric")
{
    for (std::size_t m = 2; m <= 4; ++m)
        for (Coord k = 0; k <= 6; ++k)
            for (const auto& mu : oracle::partitions_of(k, m)) {
                auto s = schur(Partition(mu), m);
                for (std::size_t i = 0; i + 1 < m; ++i) {
                    YPoly swapped(m);
                    for (const auto& [key, c] : s.terms()) {
                        auto e = key;
                        std::swap(e[i], e[i + 1]);
                        swapped.add_term(e, c);
                    }
                    CHECK(swapped == s);
                }
            }
}

TEST_CASE("products of Schur polynomials decompose positively")
{
    std::mt19937_64 rng(47);
    for (std::size_t m = 2; m <= 4; ++m) {
        auto cd = CartanData::builtin('A', m - 1);
        for (int t = 0; t < 25; ++t) {
            Coord k1 = static_cast<Coord>(rng() % 5);
            Coord k2 = static_cast<Coord>(rng() % (9 - k1));
            auto p1 = oracle::partitions_of(k1, m - 1);
            auto p2 = oracle::partitions_of(k2, m - 1);
            if (p1.empty() || p2.empty())
                continue;
            Partition mu(p1[rng() % p1.size()]);
            Partition nu(p2[rng() % p2.size()]);
            auto d = decompose(cd, alpha_inverse(schur(mu, m) * schur(nu, m)));
            REQUIRE(certified(d));
            const auto& cert = std::get<Certificate>(d);
            CHECK(cert.total_dim == schur_dim(mu, m) * schur_dim(nu, m));
            for (const auto& s : cert.summands)
                CHECK(s.multiplicity > 0);
        }
    }
}

TEST_CASE("tableau count matches the Weyl dimension")
{
    for (std::size_t m = 2; m <= 4; ++m) {
        auto cd = CartanData::builtin('A', m - 1);
        for (Coord k = 0; k <= 7; ++k)
            for (const auto& mu : oracle::partitions_of(k, m)) {
                Partition p(mu);
                CHECK(schur_dim(p, m) == dimension(cd, weight_of_partition(p, m)));
            }
    }
}
