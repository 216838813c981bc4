#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphex/graph.hpp"

namespace graphex {

// The six structural axes a conversion step can change, in the fixed
// tie-break order used by the planner.
enum class Property { Attributed, Hyper, Multi, Directed, Heterogeneous, Dynamic };

std::string property_name(Property p);

// A named invertible transformation instantiated at a concrete source kind.
// forward maps valid source graphs into the target kind; inverse is defined
// on the forward image and throws NotInImage elsewhere. Lossy demonstration
// variants carry no inverse.
struct Embedding {
    std::string name;    // family name, e.g. "multi_to_simple"
    std::string lemma;   // catalog tag, e.g. "L7"
    Property property = Property::Attributed;
    bool adds = false;
    GraphKind source_kind;
    GraphKind target_kind;
    std::function<GraphValue(const GraphValue&)> forward;
    std::function<GraphValue(const GraphValue&)> inverse;
    bool registered = true;

    bool invertible() const { return static_cast<bool>(inverse); }
};

// Every registered instance over the kind space, in deterministic order
// (property, name, source kind index). Built once, then read-only.
const std::vector<Embedding>& catalog();

// Family names in registration order, including the lossy demo family.
std::vector<std::string> family_names();

// Instantiates a family at a source kind, if admissible. Also covers
// admissible-but-unregistered instances (e.g. the tagged hyperedge
// expansion on unattributed sources).
std::optional<Embedding> make_instance(std::string_view family, const GraphKind& source);

// The documented source kind each family is verified against.
GraphKind canonical_source_kind(std::string_view family);

// Instance lookup within the registered catalog.
const Embedding* find_registered(std::string_view family, const GraphKind& source);

}  // namespace graphex
