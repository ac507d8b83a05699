#include "flagmaps/flagmaps.h"

#include "flagmaps/characters.hpp"
#include "flagmaps/charpoly.hpp"
#include "flagmaps/errors.hpp"
#include "flagmaps/io.hpp"
#include "flagmaps/lie_core.hpp"
#include "flagmaps/realize.hpp"
#include "flagmaps/typea_schur.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct fm_group {
    flagmaps::CartanData cd;
};
struct fm_poly {
    flagmaps::CharPoly p;
};
struct fm_ypoly {
    flagmaps::YPoly q;
};
struct fm_decision {
    flagmaps::Decomposition d;
};

namespace {

thread_local std::string last_error;

template <class F>
fm_status guarded(F&& f) noexcept
{
    try {
        last_error.clear();
        return f();
    } catch (const flagmaps::InputError& e) {
        last_error = e.what();
        return FM_INPUT_ERROR;
    } catch (const flagmaps::ResourceError& e) {
        last_error = e.what();
        return FM_RESOURCE_ERROR;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return FM_RESOURCE_ERROR;
    } catch (const std::exception& e) {
        last_error = e.what();
        return FM_INTERNAL_ERROR;
    } catch (...) {
        last_error = "unknown error";
        return FM_INTERNAL_ERROR;
    }
}

template <class... Ptrs>
void require(Ptrs... ptrs)
{
    if (((ptrs == nullptr) || ...))
        throw flagmaps::InputError("null argument");
}

char* dup(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

flagmaps::Limits limits_of(const fm_limits* l)
{
    flagmaps::Limits out;
    if (l) {
        out.max_terms = static_cast<std::size_t>(l->max_terms);
        out.max_n = l->max_n;
        out.max_rank = l->max_rank;
    }
    return out;
}

flagmaps::Weight weight_of(const int64_t* lambda, size_t len)
{
    if (len > 0)
        require(lambda);
    return flagmaps::Weight(std::vector<flagmaps::Coord>(lambda, lambda + len));
}

flagmaps::io::Format format_of(fm_format f)
{
    return f == FM_FORMAT_JSON ? flagmaps::io::Format::Json : flagmaps::io::Format::Text;
}

} // namespace

extern "C" {

const char* fm_version(void)
{
    return "1.0.0";
}

const char* fm_last_error(void)
{
    return last_error.c_str();
}

void fm_string_free(char* s)
{
    std::free(s);
}

void fm_limits_default(fm_limits* out)
{
    if (!out)
        return;
    flagmaps::Limits d;
    out->max_terms = d.max_terms;
    out->max_n = d.max_n;
    out->max_rank = static_cast<uint32_t>(d.max_rank);
}

fm_status fm_group_from_tag(const char* tag, fm_group** out)
{
    return guarded([&] {
        require(tag, out);
        *out = new fm_group{flagmaps::CartanData::from_tag(tag)};
        return FM_OK;
    });
}

fm_status fm_group_from_json(const char* json, fm_group** out)
{
    return guarded([&] {
        require(json, out);
        *out = new fm_group{flagmaps::io::parse_cartan_json(json)};
        return FM_OK;
    });
}

void fm_group_free(fm_group* g)
{
    delete g;
}

fm_status fm_group_rank(const fm_group* g, size_t* out)
{
    return guarded([&] {
        require(g, out);
        *out = g->cd.rank();
        return FM_OK;
    });
}

fm_status fm_group_label(const fm_group* g, char** out)
{
    return guarded([&] {
        require(g, out);
        *out = dup(g->cd.label());
        return FM_OK;
    });
}

fm_status fm_group_positive_root_count(const fm_group* g, size_t* out)
{
    return guarded([&] {
        require(g, out);
        *out = g->cd.positive_roots().size();
        return FM_OK;
    });
}

fm_status fm_poly_parse(const char* text, size_t rank, fm_poly** out)
{
    return guarded([&] {
        require(text, out);
        *out = new fm_poly{flagmaps::parse_charpoly(text, rank)};
        return FM_OK;
    });
}

fm_status fm_poly_render(const fm_poly* p, char** out)
{
    return guarded([&] {
        require(p, out);
        *out = dup(flagmaps::render(p->p));
        return FM_OK;
    });
}

fm_status fm_poly_rank(const fm_poly* p, size_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = p->p.rank();
        return FM_OK;
    });
}

fm_status fm_poly_term_count(const fm_poly* p, size_t* out)
{
    return guarded([&] {
        require(p, out);
        *out = p->p.size();
        return FM_OK;
    });
}

fm_status fm_poly_add(const fm_poly* a, const fm_poly* b, fm_poly** out)
{
    return guarded([&] {
        require(a, b, out);
        *out = new fm_poly{a->p + b->p};
        return FM_OK;
    });
}

fm_status fm_poly_mul(const fm_poly* a, const fm_poly* b, fm_poly** out)
{
    return guarded([&] {
        require(a, b, out);
        *out = new fm_poly{a->p * b->p};
        return FM_OK;
    });
}

fm_status fm_poly_equal(const fm_poly* a, const fm_poly* b, int* out)
{
    return guarded([&] {
        require(a, b, out);
        *out = a->p == b->p ? 1 : 0;
        return FM_OK;
    });
}

fm_status fm_poly_evaluate_at_one(const fm_poly* p, char** out)
{
    return guarded([&] {
        require(p, out);
        *out = dup(flagmaps::evaluate_at_one(p->p).get_str());
        return FM_OK;
    });
}

void fm_poly_free(fm_poly* p)
{
    delete p;
}

fm_status fm_character(const fm_group* g, const int64_t* lambda, size_t len, const fm_limits* limits,
                       fm_poly** out)
{
    return guarded([&] {
        require(g, out);
        *out = new fm_poly{flagmaps::weight_multiplicities(g->cd, weight_of(lambda, len), limits_of(limits))};
        return FM_OK;
    });
}

fm_status fm_dimension(const fm_group* g, const int64_t* lambda, size_t len, char** out)
{
    return guarded([&] {
        require(g, out);
        *out = dup(flagmaps::dimension(g->cd, weight_of(lambda, len)).get_str());
        return FM_OK;
    });
}

fm_status fm_decompose(const fm_group* g, const fm_poly* p, const fm_limits* limits, fm_decision** out)
{
    return guarded([&] {
        require(g, p, out);
        *out = new fm_decision{flagmaps::decompose(g->cd, p->p, limits_of(limits))};
        return FM_OK;
    });
}

fm_status fm_is_in_omega_n(const fm_group* g, const fm_poly* p, uint64_t n, const fm_limits* limits,
                           fm_decision** out)
{
    return guarded([&] {
        require(g, p, out);
        mpz_class nn(std::to_string(n));
        *out = new fm_decision{flagmaps::is_in_omega_n(g->cd, p->p, nn, limits_of(limits))};
        return FM_OK;
    });
}

fm_status fm_realize(const fm_group* g, const char* hom_json, const fm_limits* limits, fm_decision** out)
{
    return guarded([&] {
        require(g, hom_json, out);
        auto req = flagmaps::io::parse_hom_json(hom_json);
        if (req.group && !(flagmaps::CartanData::from_tag(*req.group) == g->cd))
            throw flagmaps::InputError("homomorphism names group " + *req.group + " but " + g->cd.label() +
                                       " was requested");
        *out = new fm_decision{flagmaps::check_realizable(g->cd, req.hom, limits_of(limits))};
        return FM_OK;
    });
}

fm_status fm_decision_status(const fm_decision* d)
{
    if (!d) {
        last_error = "null argument";
        return FM_INPUT_ERROR;
    }
    return flagmaps::certified(d->d) ? FM_OK : FM_NOT_CERTIFIED;
}

fm_status fm_decision_render(const fm_decision* d, fm_format format, char** out)
{
    return guarded([&] {
        require(d, out);
        *out = dup(flagmaps::io::render_decomposition(d->d, format_of(format)));
        return FM_OK;
    });
}

void fm_decision_free(fm_decision* d)
{
    delete d;
}

fm_status fm_smap(const char* hom_json, fm_poly** out)
{
    return guarded([&] {
        require(hom_json, out);
        *out = new fm_poly{flagmaps::s_map(flagmaps::io::parse_hom_json(hom_json).hom)};
        return FM_OK;
    });
}

fm_status fm_verify_theorem(const fm_group* g, const char* weights_json, int* holds, char** character,
                            char** smap)
{
    return guarded([&] {
        require(g, weights_json, holds, character, smap);
        auto check = flagmaps::verify_theorem(g->cd, flagmaps::io::parse_weights_json(weights_json));
        *holds = check.holds ? 1 : 0;
        *character = dup(flagmaps::render(check.character));
        *smap = dup(flagmaps::render(check.smap));
        return FM_OK;
    });
}

fm_status fm_schur(const char* partition, size_t m, fm_ypoly** out)
{
    return guarded([&] {
        require(partition, out);
        *out = new fm_ypoly{flagmaps::schur(flagmaps::Partition::parse(partition), m)};
        return FM_OK;
    });
}

fm_status fm_schur_dim(const char* partition, size_t m, char** out)
{
    return guarded([&] {
        require(partition, out);
        *out = dup(flagmaps::schur_dim(flagmaps::Partition::parse(partition), m).get_str());
        return FM_OK;
    });
}

fm_status fm_ypoly_parse(const char* text, size_t nvars, fm_ypoly** out)
{
    return guarded([&] {
        require(text, out);
        *out = new fm_ypoly{flagmaps::parse_ypoly(text, nvars)};
        return FM_OK;
    });
}

fm_status fm_ypoly_render(const fm_ypoly* q, char** out)
{
    return guarded([&] {
        require(q, out);
        *out = dup(flagmaps::render(q->q));
        return FM_OK;
    });
}

void fm_ypoly_free(fm_ypoly* q)
{
    delete q;
}

fm_status fm_alpha(const fm_group* g, const fm_poly* p, fm_ypoly** out)
{
    return guarded([&] {
        require(g, p, out);
        if (!g->cd.is_type_a())
            throw flagmaps::InputError("alpha is defined for type A groups only, got " + g->cd.label());
        if (p->p.rank() != g->cd.rank())
            throw flagmaps::InputError("polynomial rank does not match group rank");
        *out = new fm_ypoly{flagmaps::alpha(p->p)};
        return FM_OK;
    });
}

fm_status fm_alpha_inverse(const fm_ypoly* q, fm_poly** out)
{
    return guarded([&] {
        require(q, out);
        *out = new fm_poly{flagmaps::alpha_inverse(q->q)};
        return FM_OK;
    });
}

fm_status fm_schur_flag_map(const char* partition, size_t m, fm_format format, char** out)
{
    return guarded([&] {
        require(partition, out);
        auto c = flagmaps::schur_flag_map(flagmaps::Partition::parse(partition), m);
        const bool ok = c.image == c.schur;
        std::string report;
        if (format == FM_FORMAT_JSON) {
            nlohmann::ordered_json j{{"n", c.n},
                             {"rows", nlohmann::ordered_json::parse(flagmaps::io::matrix_json(c.hom.rows()))},
                             {"alpha_s", flagmaps::render(c.image)},
                             {"schur", flagmaps::render(c.schur)},
                             {"check", ok}};
            report = j.dump() + "\n";
        } else {
            report = "n: " + std::to_string(c.n) + "\n" + "rows: " + flagmaps::io::matrix_json(c.hom.rows()) +
                     "\n" + "alpha(s(h)): " + flagmaps::render(c.image) + "\n" +
                     "schur: " + flagmaps::render(c.schur) + "\n" + "check: " + (ok ? "pass" : "FAIL") + "\n";
        }
        *out = dup(report);
        return FM_OK;
    });
}

fm_status fm_omega_enumerate(const fm_group* g, uint32_t n, const fm_limits* limits, fm_format format,
                             fm_certificate_visitor visit, void* user)
{
    return guarded([&] {
        require(g, visit);
        flagmaps::omega_n_enumerate(
            g->cd, n,
            [&](const flagmaps::Certificate& c) {
                auto s = format == FM_FORMAT_JSON ? flagmaps::io::certificate_json(c)
                                                  : flagmaps::io::certificate_line(c);
                return visit(s.c_str(), user) != 0;
            },
            limits_of(limits));
        return FM_OK;
    });
}

} // extern "C"
