#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hecs/complex.hpp"

namespace hecs {

/**
 * Complex interchange document (JSON):
 *
 *   {
 *     "n_vertices": 4,
 *     "edges": [[0,1],[0,2],...],          // pairs, any order
 *     "triangles": [[0,1,2],...],          // triples, any order
 *     "w0": [...], "w1": [...], "w2": [...],  // optional positive decimals
 *     "provenance": { ... }                // optional, passed through verbatim
 *   }
 *
 * Vertices are 0-based. Simplices may be unsorted on input; the loader
 * canonicalizes, so load -> save -> load is the identity on canonical form.
 * Weight lists, when present, are given in the same order as the simplex
 * lists of the document.
 */
struct LoadedComplex {
    SimplicialComplex2 complex;
    std::optional<nlohmann::ordered_json> provenance;
};

LoadedComplex load_complex(std::istream& in);
LoadedComplex load_complex_file(const std::string& path);

void save_complex(const SimplicialComplex2& K, std::ostream& out,
                  const nlohmann::ordered_json* provenance = nullptr);
void save_complex_file(const SimplicialComplex2& K, const std::string& path,
                       const nlohmann::ordered_json* provenance = nullptr);

}  // namespace hecs
