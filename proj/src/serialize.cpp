#include "affweyl/serialize.hpp"

#include <sstream>

namespace affweyl {

nlohmann::json word_to_json(const Word& word) { return nlohmann::json(word); }

nlohmann::json facet_to_json(Facet f) { return nlohmann::json(f.nodes()); }

std::string dot_node_id(const Word& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(word[i]);
  }
  return s;
}

nlohmann::json strata_to_json(const AffineWeyl& group, const StrataPoset& poset) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : poset.elements) elements.push_back(format_element(group, e));
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back({lo, hi});
  return {{"covers", covers}, {"dims", poset.dims}, {"elements", elements}};
}

std::string strata_to_dot(const AffineWeyl& group, const StrataPoset& poset) {
  std::vector<Word> words;
  for (const auto& e : poset.elements) words.push_back(group.reduced_word(e));
  std::ostringstream os;
  os << "digraph strata {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string label = words[i].empty() ? std::string("e") : format_word(words[i]).substr(2);
    os << "  \"" << dot_node_id(words[i]) << "\" [label=\"" << label << " / " << poset.dims[i] << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers)
    os << "  \"" << dot_node_id(words[lo]) << "\" -> \"" << dot_node_id(words[hi]) << "\";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json resolution_to_json(const AffineWeyl& group, const std::vector<ResolutionStep>& steps) {
  nlohmann::json arr = nlohmann::json::array();
  int total = 0;
  for (const auto& s : steps) {
    const int l = group.length(s.factor);
    total += l;
    arr.push_back({{"P", facet_to_json(s.P)},
                   {"Q", facet_to_json(s.Q)},
                   {"factor_length", l},
                   {"factor_word", word_to_json(group.reduced_word(s.factor))}});
  }
  return {{"steps", arr},
          {"summary", {{"bott_samelson_dim", bott_samelson_dim(group, steps)}, {"total_length", total}}}};
}

nlohmann::json unitary_to_json(const UnitaryExample& ex) {
  const Word w = ex.group.reduced_word(ex.w_p2);
  return {{"Q_p", facet_to_json(ex.Q_p)},
          {"dim", ex.dim},
          {"m", ex.m},
          {"mu_p", ex.mu_p},
          {"p", ex.p},
          {"strata_count", ex.strata_count},
          {"w_p2_length", static_cast<int>(w.size())},
          {"w_p2_word", word_to_json(w)}};
}

}  // namespace affweyl
