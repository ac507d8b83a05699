#include "flagmaps/io.hpp"

#include "flagmaps/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace flagmaps::io {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, const char* what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

Weight weight_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        throw InputError(std::string(what) + ": expected an integer array");
    std::vector<Coord> coords;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw InputError(std::string(what) + ": entries must be integers");
        coords.push_back(x.get<Coord>());
    }
    return Weight(std::move(coords));
}

std::vector<Weight> rows_from_json(const json& j, const char* what)
{
    if (!j.is_array())
        throw InputError(std::string(what) + ": expected an array of integer arrays");
    std::vector<Weight> rows;
    for (const auto& r : j)
        rows.push_back(weight_from_json(r, what));
    return rows;
}

ojson weight_json(const Weight& w)
{
    ojson a = ojson::array();
    for (Coord c : w.coords())
        a.push_back(c);
    return a;
}

ojson integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return ojson(z.get_si());
    return ojson(z.get_str());
}

const char* reason_code(NotInOmega::Reason r)
{
    switch (r) {
    case NotInOmega::Reason::NegativeCoefficient:
        return "negative_coefficient";
    case NotInOmega::Reason::NoDominantWeight:
        return "no_dominant_weight";
    case NotInOmega::Reason::NotEffective:
        return "not_effective";
    case NotInOmega::Reason::DimensionMismatch:
        return "dimension_mismatch";
    }
    return "unknown";
}

} // namespace

HomRequest parse_hom_json(const std::string& text)
{
    auto j = parse_json(text, "homomorphism");
    if (j.is_array())
        j = json{{"rows", j}};
    if (!j.is_object() || !j.contains("rows"))
        throw InputError("homomorphism: expected a row array or an object with a \"rows\" field");
    auto rows = rows_from_json(j.at("rows"), "homomorphism rows");
    std::size_t n = rows.size() + 1;
    if (j.contains("n")) {
        if (!j.at("n").is_number_integer() || j.at("n").get<long long>() < 0)
            throw InputError("homomorphism: \"n\" must be a nonnegative integer");
        n = j.at("n").get<std::size_t>();
    }
    std::optional<std::string> group;
    if (j.contains("group")) {
        if (!j.at("group").is_string())
            throw InputError("homomorphism: \"group\" must be a string");
        group = j.at("group").get<std::string>();
    }
    if (rows.empty())
        throw InputError("homomorphism: need at least one row");
    return HomRequest{group, CohomHom(n, std::move(rows))};
}

std::string hom_to_json(const CohomHom& h, const std::optional<std::string>& group)
{
    ojson j = ojson::object();
    if (group)
        j["group"] = *group;
    j["n"] = h.n();
    j["rows"] = ojson::parse(matrix_json(h.rows()));
    return j.dump();
}

TorusRestriction parse_weights_json(const std::string& text)
{
    auto j = parse_json(text, "weights");
    if (j.is_object()) {
        if (!j.contains("weights"))
            throw InputError("weights: expected an array or an object with a \"weights\" field");
        j = j.at("weights");
    }
    return TorusRestriction(rows_from_json(j, "weights"));
}

CartanData parse_cartan_json(const std::string& text)
{
    auto j = parse_json(text, "Cartan matrix");
    std::string label = "custom";
    if (j.is_object()) {
        if (j.contains("label") && j.at("label").is_string())
            label = j.at("label").get<std::string>();
        if (!j.contains("cartan_matrix"))
            throw InputError("Cartan matrix: expected an array or an object with a \"cartan_matrix\" field");
        j = j.at("cartan_matrix");
    }
    IntMatrix m;
    for (const auto& row : rows_from_json(j, "Cartan matrix"))
        m.emplace_back(row.coords().begin(), row.coords().end());
    return CartanData::from_matrix(m, label);
}

std::string certificate_json(const Certificate& cert)
{
    ojson s = ojson::array();
    for (const auto& x : cert.summands)
        s.push_back(ojson{{"lambda", weight_json(x.lambda)}, {"mult", integer_json(x.multiplicity)}});
    return ojson{{"summands", s}, {"dim", integer_json(cert.total_dim)}}.dump();
}

std::string certificate_text(const Certificate& cert)
{
    std::ostringstream os;
    os << "certified: dim " << cert.total_dim.get_str() << '\n';
    for (const auto& s : cert.summands)
        os << "  lambda " << s.lambda.str() << " mult " << s.multiplicity.get_str() << '\n';
    return os.str();
}

std::string certificate_line(const Certificate& cert)
{
    std::string out;
    for (const auto& s : cert.summands) {
        if (!out.empty())
            out += " + ";
        if (s.multiplicity != 1)
            out += s.multiplicity.get_str() + "*";
        out += s.lambda.str();
    }
    return out.empty() ? "0" : out;
}

std::string not_in_omega_json(const NotInOmega& f)
{
    ojson j{{"certified", false}, {"reason", reason_code(f.reason)}};
    if (f.witness) {
        j["witness"] = weight_json(*f.witness);
        j["deficit"] = integer_json(f.deficit);
    }
    if (f.reason == NotInOmega::Reason::DimensionMismatch) {
        j["expected_dim"] = integer_json(f.expected_dim);
        j["actual_dim"] = integer_json(f.actual_dim);
    }
    return j.dump();
}

std::string not_in_omega_text(const NotInOmega& f)
{
    return "not certified by this criterion: " + f.describe() + "\n";
}

std::string render_decomposition(const Decomposition& d, Format format)
{
    if (const auto* cert = std::get_if<Certificate>(&d))
        return format == Format::Json ? certificate_json(*cert) + "\n" : certificate_text(*cert);
    const auto& f = std::get<NotInOmega>(d);
    return format == Format::Json ? not_in_omega_json(f) + "\n" : not_in_omega_text(f);
}

std::string matrix_json(const std::vector<Weight>& rows)
{
    ojson a = ojson::array();
    for (const auto& r : rows)
        a.push_back(weight_json(r));
    return a.dump();
}

} // namespace flagmaps::io
