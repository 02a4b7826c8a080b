#pragma once

#include <string>

#include <json.hpp>

#include "ringforge/decomposition.hpp"

namespace ringforge {

using Json = nlohmann::ordered_json;

// {"name", "order", "identity", "cayley", "names"} — the schema group_from_json
// accepts back. Aliases are not part of the schema.
Json group_to_json(const GroupPtr& g);

// IoError on a malformed document; table validation failures propagate as the
// usual group construction errors.
GroupPtr group_from_json(const Json& j);
GroupPtr load_group_file(const std::string& path);

// {"ring": {"group", "p"}, "coeffs"}
Json element_to_json(const RingElement& x);

// {"nodes": [{"label", "dim", "basis"}], "edges": [[i, j]]} with edge (i, j)
// meaning nodes[i] is covered by nodes[j].
Json lattice_to_json(const HasseDiagram& h);

// Bottom-up digraph of the cover relation. Node text is the label when one is
// set, the concatenated basis rows otherwise, always suffixed with "dim=k".
// Byte-identical across runs for the same diagram.
std::string lattice_to_dot(const HasseDiagram& h);

// {"summands": [{"label", "dim", "basis"}], "idempotents": [[coeffs]]}
Json decomposition_to_json(const Decomposition& d);

}  // namespace ringforge
