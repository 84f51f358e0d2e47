#pragma once

#include "graphtda/complex.hpp"
#include "graphtda/filtration.hpp"
#include "graphtda/persistence.hpp"

#include "json.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphtda::io {

/// Insertion-ordered JSON so documents keep the field order they are written in.
using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Finite values as JSON numbers, sentinels as "inf" / "-inf".
Json to_json(Value v);
Value value_from_json(Json const& j);

/// { "vertices": [...], "facets": [[...], ...] } with vertex labels.
Json to_json(SimplicialComplex const& k);
/// Rebuilds the full complex by downward closure of the facets.
SimplicialComplex complex_from_json(Json const& j);

/// { "simplices": [{ "vertices": [...], "value": x }, ...] } in canonical order.
Json to_json(FilteredComplex const& fc);
FilteredComplex filtered_from_json(Json const& j);

/// { "dimension": r, "points": [{birth, death, multiplicity}], "essential": [{birth, multiplicity}] }
Json to_json(PersistenceDiagram const& d);
PersistenceDiagram diagram_from_json(Json const& j);

/// Rows "r,birth,death,multiplicity" under a header line; essential points
/// carry death "inf".
std::string diagrams_to_csv(std::span<PersistenceDiagram const> diagrams);
std::vector<PersistenceDiagram> diagrams_from_csv(std::string_view text);

/// Reads any diagram document this library writes: a single diagram
/// object, an array of them, an object with a "diagrams" array, or CSV.
/// Extended documents yield their ascending diagrams.
std::vector<PersistenceDiagram> load_diagrams(std::string_view text);

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string_view contents);

} // namespace graphtda::io
