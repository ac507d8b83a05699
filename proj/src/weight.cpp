#include "flagmaps/weight.hpp"

#include "flagmaps/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace flagmaps {

Weight Weight::fundamental(std::size_t rank, std::size_t i)
{
    Weight w(rank);
    w.coords_.at(i) = 1;
    return w;
}

bool Weight::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o)
{
    if (o.rank() != rank())
        throw InputError("weight rank mismatch: " + std::to_string(rank()) + " vs " + std::to_string(o.rank()));
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    if (o.rank() != rank())
        throw InputError("weight rank mismatch: " + std::to_string(rank()) + " vs " + std::to_string(o.rank()));
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

Weight Weight::operator-() const
{
    Weight r(*this);
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

Weight operator*(Coord k, Weight w)
{
    for (auto& c : w.coords_)
        c *= k;
    return w;
}

std::string Weight::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
}

bool is_dominant(const Weight& w)
{
    auto c = w.coords();
    return std::all_of(c.begin(), c.end(), [](Coord x) { return x >= 0; });
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept
{
    // FNV-1a over the coordinates
    std::size_t h = 1469598103934665603ull;
    for (Coord c : w.coords()) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

Weight parse_weight(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ')
            s.push_back(ch);
    if (s.empty())
        throw InputError("empty weight");
    std::vector<Coord> coords;
    std::size_t pos = 0;
    while (true) {
        auto comma = s.find(',', pos);
        auto field = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        Coord v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw InputError("malformed weight coordinate '" + field + "' in '" + text + "'");
        coords.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Weight(std::move(coords));
}

} // namespace flagmaps
