#pragma once

// Built-in systems: the canonical Engel system on the local chart z1..z4 and
// the two homogeneous examples on C^5 (z0..z4).

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "engel/pfaff.hpp"
#include "engel/text.hpp"

namespace engel {

struct CorpusEntry {
  std::string_view name;
  std::size_t ambient;
  VarNaming naming;
  std::vector<std::string_view> generators;
  std::string_view description;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"canonical", 4, {1}, {"dz4 - z3*dz1", "dz3 - z2*dz1"}, "canonical Engel system on (C^4, 0)"},
      {"example1",
       5,
       {0},
       {"z0^2*dz4 - z0*z3*dz1 + (z1*z3 - z0*z4)*dz0", "z0^2*dz3 - z0*z2*dz1 + (z1*z2 - z0*z3)*dz0"},
       "homogeneous Engel system on C^5 descending to P^4"},
      {"example2",
       5,
       {0},
       {"z0^3*dz1 + z3^2*z0*dz4 - (z0^2*z1 - z3^2*z4)*dz0", "z0^3*dz2 + z3*z4*z0*dz4 - (z0^2*z2 + z3*z4^2)*dz0"},
       "second homogeneous pair on C^5; the first form is not killed by i_R"},
      {"example2-euler",
       5,
       {0},
       {"z0^3*dz1 + z3^2*z0*dz4 - (z0^2*z1 + z3^2*z4)*dz0", "z0^3*dz2 + z3*z4*z0*dz4 - (z0^2*z2 + z3*z4^2)*dz0"},
       "example2 with the dz0 coefficient of the first form sign-corrected so that i_R kills it"},
  };
  return entries;
}

inline const CorpusEntry& corpus_entry(std::string_view name) {
  const auto& all = corpus();
  auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
  if (it == all.end()) throw std::invalid_argument("unknown corpus entry '" + std::string(name) + "'");
  return *it;
}

inline std::vector<DiffForm> corpus_forms(const CorpusEntry& e) {
  std::vector<DiffForm> forms;
  for (auto g : e.generators) forms.push_back(parse_form(g, e.ambient, e.naming));
  return forms;
}

inline PfaffSystem corpus_system(std::string_view name) { return PfaffSystem(corpus_forms(corpus_entry(name))); }

}  // namespace engel
