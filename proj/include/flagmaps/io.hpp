#pragma once

#include "flagmaps/characters.hpp"
#include "flagmaps/lie_core.hpp"
#include "flagmaps/realize.hpp"

#include <optional>
#include <string>

namespace flagmaps::io {

enum class Format { Text, Json };

/// {"group": "A2", "n": 3, "rows": [[1,0],[-1,1]]}; "group" and "n" optional.
struct HomRequest {
    std::optional<std::string> group;
    CohomHom hom;
};
HomRequest parse_hom_json(const std::string& text);
std::string hom_to_json(const CohomHom& h, const std::optional<std::string>& group = {});

/// [[1],[-1]] or {"weights": [[1],[-1]]}.
TorusRestriction parse_weights_json(const std::string& text);

/// [[2,-1],[-1,2]] or {"cartan_matrix": [[2,-1],[-1,2]]}.
CartanData parse_cartan_json(const std::string& text);

/// {"summands": [{"lambda": [1,0], "mult": 1}], "dim": 3}
std::string certificate_json(const Certificate& cert);
std::string certificate_text(const Certificate& cert);
/// One-line form used by enumeration: "(1,0) + 3*(0,0)".
std::string certificate_line(const Certificate& cert);

std::string not_in_omega_json(const NotInOmega& f);
std::string not_in_omega_text(const NotInOmega& f);

std::string render_decomposition(const Decomposition& d, Format format);

std::string matrix_json(const std::vector<Weight>& rows);

} // namespace flagmaps::io
