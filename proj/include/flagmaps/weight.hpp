#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace flagmaps {

using Coord = std::int64_t;

/// Integer vector in the basis of fundamental weights w1..wm.
///
/// Used for dominant weights, torus characters and the rows of a
/// cohomology homomorphism alike: all of them live in the same lattice.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank, 0) {}
    explicit Weight(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Coord> coords) : coords_(coords) {}

    static Weight fundamental(std::size_t rank, std::size_t i);

    std::size_t rank() const { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    Coord& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Coord> coords() const { return coords_; }

    bool is_zero() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight operator-() const;
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Coord k, Weight w);

    friend bool operator==(const Weight&, const Weight&) = default;
    /// Lexicographic on coordinates.
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

    /// "(1,-1,0)"
    std::string str() const;

private:
    std::vector<Coord> coords_;
};

/// All coordinates nonnegative.
bool is_dominant(const Weight& w);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

/// Parses "1,0,2" (brackets and parentheses tolerated).
Weight parse_weight(const std::string& text);

} // namespace flagmaps
