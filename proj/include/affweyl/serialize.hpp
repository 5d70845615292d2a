#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "affweyl/resolution.hpp"
#include "affweyl/schubert.hpp"

namespace affweyl {

// Object keys come out in alphabetical order (nlohmann::json uses std::map).
nlohmann::json word_to_json(const Word& word);
nlohmann::json facet_to_json(Facet f);

// {"covers": [[lower, upper], ...], "dims": [...], "elements": ["w:...", ...]}
nlohmann::json strata_to_json(const AffineWeyl& group, const StrataPoset& poset);
// Hasse diagram; node ids are reduced words joined by '_' ("e" for the
// identity), labels "word / dim".
std::string strata_to_dot(const AffineWeyl& group, const StrataPoset& poset);

nlohmann::json resolution_to_json(const AffineWeyl& group, const std::vector<ResolutionStep>& steps);
nlohmann::json unitary_to_json(const UnitaryExample& ex);

std::string dot_node_id(const Word& word);

}  // namespace affweyl
