// Command-line front end. Talks to the library exclusively through the C API.

#include "flagmaps/flagmaps.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotCertified = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct Failure {
    int code;
    std::string message;
};

int exit_code(fm_status s)
{
    switch (s) {
    case FM_OK:
        return kExitOk;
    case FM_NOT_CERTIFIED:
        return kExitNotCertified;
    case FM_INPUT_ERROR:
        return kExitInput;
    case FM_RESOURCE_ERROR:
        return kExitResource;
    default:
        return kExitInternal;
    }
}

const char* reason_code(fm_status s)
{
    switch (s) {
    case FM_INPUT_ERROR:
        return "input_error";
    case FM_RESOURCE_ERROR:
        return "resource_cap";
    default:
        return "internal_error";
    }
}

void check(fm_status s)
{
    if (s != FM_OK)
        throw Failure{exit_code(s), std::string(reason_code(s)) + ": " + fm_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { fm_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

template <class T, void (*Free)(T*)>
struct HandleDeleter {
    void operator()(T* p) const { Free(p); }
};
using Group = std::unique_ptr<fm_group, HandleDeleter<fm_group, fm_group_free>>;
using Poly = std::unique_ptr<fm_poly, HandleDeleter<fm_poly, fm_poly_free>>;
using YPoly = std::unique_ptr<fm_ypoly, HandleDeleter<fm_ypoly, fm_ypoly_free>>;
using Decision = std::unique_ptr<fm_decision, HandleDeleter<fm_decision, fm_decision_free>>;

std::string take(char* s)
{
    OwnedString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Failure{kExitInput, "input_error: cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A JSON argument is either a path to a file or the JSON text itself.
std::string json_argument(const std::string& arg)
{
    std::ifstream probe(arg);
    if (probe.good() && arg.find_first_of("[{") == std::string::npos)
        return read_file(arg);
    return arg;
}

std::vector<int64_t> parse_coords(const std::string& text)
{
    std::vector<int64_t> out;
    std::string cleaned;
    for (char c : text)
        if (c != '(' && c != ')' && c != '[' && c != ']' && c != ' ')
            cleaned.push_back(c);
    std::stringstream ss(cleaned);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(field, &used));
            if (used != field.size())
                throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw Failure{kExitInput, "input_error: malformed weight '" + text + "'"};
        }
    }
    if (out.empty())
        throw Failure{kExitInput, "input_error: empty weight"};
    return out;
}

struct Options {
    std::string group_matrix;
    uint64_t max_terms = 0;
    uint32_t max_n = 0;
    std::string format = "text";

    fm_limits limits() const
    {
        fm_limits l;
        fm_limits_default(&l);
        if (max_terms)
            l.max_terms = max_terms;
        if (max_n)
            l.max_n = max_n;
        return l;
    }
    fm_format fmt() const { return format == "json" ? FM_FORMAT_JSON : FM_FORMAT_TEXT; }
};

Group load_group(const Options& opt, const std::string& tag)
{
    fm_group* g = nullptr;
    if (tag == "custom") {
        if (opt.group_matrix.empty())
            throw Failure{kExitInput, "input_error: group 'custom' requires --group-matrix <file or JSON>"};
        check(fm_group_from_json(json_argument(opt.group_matrix).c_str(), &g));
    } else {
        check(fm_group_from_tag(tag.c_str(), &g));
    }
    return Group(g);
}

std::string render(const fm_poly* p)
{
    char* s = nullptr;
    check(fm_poly_render(p, &s));
    return take(s);
}

std::string render(const fm_ypoly* q)
{
    char* s = nullptr;
    check(fm_ypoly_render(q, &s));
    return take(s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Realizability of degree-2 cohomology maps between flag manifolds"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--group-matrix", opt.group_matrix, "JSON Cartan matrix used when the group is 'custom'");
    app.add_option("--max-terms", opt.max_terms, "Cap on the support size of a character");
    app.add_option("--max-n", opt.max_n, "Cap on n for omega enumeration");
    app.add_option("--format", opt.format, "Certificate output format")->check(CLI::IsMember({"text", "json"}));

    std::string group, lambda, hom, weights, mu, poly;
    std::size_t m = 0;
    uint32_t n = 0;

    auto* cmd_char = app.add_subcommand("char", "Character of the irreducible module V_lambda");
    cmd_char->add_option("group", group)->required();
    cmd_char->add_option("lambda", lambda, "Dominant weight, e.g. 1,0")->required();

    auto* cmd_dim = app.add_subcommand("dim", "Weyl dimension of V_lambda");
    cmd_dim->add_option("group", group)->required();
    cmd_dim->add_option("lambda", lambda)->required();

    auto* cmd_smap = app.add_subcommand("smap", "s-invariant of a homomorphism given as JSON");
    cmd_smap->add_option("hom", hom, "JSON text or file")->required();

    auto* cmd_realize = app.add_subcommand("realize", "Certify a homomorphism through a representation");
    cmd_realize->add_option("group", group)->required();
    cmd_realize->add_option("hom", hom, "JSON text or file")->required();

    auto* cmd_verify = app.add_subcommand("verify-theorem", "Compare chi(g) with s(r(descent(g)))");
    cmd_verify->add_option("group", group)->required();
    cmd_verify->add_option("weights", weights, "JSON text or file")->required();

    auto* cmd_schur = app.add_subcommand("schur", "Schur polynomial s_mu(y1..ym)");
    cmd_schur->add_option("mu", mu)->required();
    cmd_schur->add_option("m", m)->required();

    auto* cmd_alpha = app.add_subcommand("alpha", "Map a type-A character polynomial to y-variables");
    cmd_alpha->add_option("group", group)->required();
    cmd_alpha->add_option("poly", poly)->required();

    auto* cmd_schur_map = app.add_subcommand("cor3", "Build the map F(m) -> F(n) attached to a Schur function");
    cmd_schur_map->add_option("mu", mu)->required();
    cmd_schur_map->add_option("m", m)->required();

    auto* cmd_omega = app.add_subcommand("omega", "Enumerate the characters of n-dimensional representations");
    cmd_omega->add_option("group", group)->required();
    cmd_omega->add_option("n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    const fm_limits limits = opt.limits();
    try {
        if (*cmd_char || *cmd_dim) {
            auto g = load_group(opt, group);
            auto coords = parse_coords(lambda);
            if (*cmd_char) {
                fm_poly* p = nullptr;
                check(fm_character(g.get(), coords.data(), coords.size(), &limits, &p));
                std::cout << render(Poly(p).get()) << '\n';
            } else {
                char* s = nullptr;
                check(fm_dimension(g.get(), coords.data(), coords.size(), &s));
                std::cout << take(s) << '\n';
            }
        } else if (*cmd_smap) {
            fm_poly* p = nullptr;
            check(fm_smap(json_argument(hom).c_str(), &p));
            std::cout << render(Poly(p).get()) << '\n';
        } else if (*cmd_realize) {
            auto g = load_group(opt, group);
            fm_decision* d = nullptr;
            check(fm_realize(g.get(), json_argument(hom).c_str(), &limits, &d));
            Decision owned(d);
            char* s = nullptr;
            check(fm_decision_render(d, opt.fmt(), &s));
            std::cout << take(s);
            return exit_code(fm_decision_status(d));
        } else if (*cmd_verify) {
            auto g = load_group(opt, group);
            int holds = 0;
            char* lhs = nullptr;
            char* rhs = nullptr;
            check(fm_verify_theorem(g.get(), json_argument(weights).c_str(), &holds, &lhs, &rhs));
            std::cout << "holds: " << (holds ? "true" : "false") << '\n'
                      << "character: " << take(lhs) << '\n'
                      << "s-map: " << take(rhs) << '\n';
            return holds ? kExitOk : kExitInternal;
        } else if (*cmd_schur) {
            fm_ypoly* q = nullptr;
            check(fm_schur(mu.c_str(), m, &q));
            std::cout << render(YPoly(q).get()) << '\n';
        } else if (*cmd_alpha) {
            auto g = load_group(opt, group);
            std::size_t rank = 0;
            check(fm_group_rank(g.get(), &rank));
            fm_poly* p = nullptr;
            check(fm_poly_parse(poly.c_str(), rank, &p));
            Poly owned(p);
            fm_ypoly* q = nullptr;
            check(fm_alpha(g.get(), p, &q));
            std::cout << render(YPoly(q).get()) << '\n';
        } else if (*cmd_schur_map) {
            char* s = nullptr;
            check(fm_schur_flag_map(mu.c_str(), m, opt.fmt(), &s));
            std::cout << take(s);
        } else if (*cmd_omega) {
            auto g = load_group(opt, group);
            auto print = [](const char* line, void*) -> int {
                std::cout << line << '\n';
                return 1;
            };
            check(fm_omega_enumerate(g.get(), n, &limits, opt.fmt(), print, nullptr));
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return kExitOk;
}
