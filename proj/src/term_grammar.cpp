#include "term_grammar.hpp"

#include "flagmaps/errors.hpp"

#include <cctype>
#include <charconv>

namespace flagmaps::detail {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    // Accepts ASCII '-' and U+2212.
    bool eat_minus()
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool peek_digit()
    {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    bool peek_alpha()
    {
        skip_ws();
        return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
    }
    std::string digits()
    {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    std::string ident()
    {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("syntax error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                         std::string(s_) + "'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

ParsedFactor parse_factor(Scanner& sc)
{
    ParsedFactor f;
    f.name = sc.ident();
    if (sc.eat('^')) {
        if (!sc.peek_digit())
            sc.fail("expected exponent");
        auto d = sc.digits();
        if (d.size() > 10)
            throw InputError("exponent overflow: " + d);
        Coord e = std::stoll(d);
        if (e > kMaxExponent)
            throw InputError("exponent overflow: " + d);
        f.exponent = e;
    }
    return f;
}

ParsedTerm parse_term(Scanner& sc, bool negative)
{
    ParsedTerm t;
    bool need_monomial = false;
    if (sc.peek_digit()) {
        t.coeff = mpz_class(sc.digits());
        if (!sc.eat('*'))
            return negative ? ParsedTerm{-t.coeff, {}} : t;
        need_monomial = true;
    }
    if (!sc.peek_alpha()) {
        sc.fail(need_monomial ? "expected variable after '*'" : "expected term");
    }
    t.factors.push_back(parse_factor(sc));
    while (sc.eat('*')) {
        if (!sc.peek_alpha())
            sc.fail("expected variable after '*'");
        t.factors.push_back(parse_factor(sc));
    }
    if (negative)
        t.coeff = -t.coeff;
    return t;
}

} // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text)
{
    Scanner sc(text);
    if (sc.done())
        throw InputError("empty polynomial text");
    std::vector<ParsedTerm> terms;
    bool negative = sc.eat_minus();
    terms.push_back(parse_term(sc, negative));
    while (!sc.done()) {
        if (sc.eat('+'))
            negative = false;
        else if (sc.eat_minus())
            negative = true;
        else
            sc.fail("expected '+' or '-'");
        terms.push_back(parse_term(sc, negative));
    }
    return terms;
}

bool split_indexed(const std::string& name, std::string& prefix, std::size_t& index)
{
    auto p = name.find_first_of("0123456789");
    if (p == std::string::npos || p == 0)
        return false;
    prefix = name.substr(0, p);
    auto digits = name.substr(p);
    if (digits.size() > 6 || digits[0] == '0')
        return false;
    index = std::stoul(digits);
    return true;
}

std::string render_terms(const std::vector<RenderTerm>& terms)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        mpz_class mag = abs(t.coeff);
        if (first)
            out += sgn(t.coeff) < 0 ? "-" : "";
        else
            out += sgn(t.coeff) < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (const auto& [name, e] : t.factors) {
            if (!mono.empty())
                mono += '*';
            mono += name;
            if (e != 1)
                mono += '^' + std::to_string(e);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + '*' + mono;
    }
    return out;
}

} // namespace flagmaps::detail
