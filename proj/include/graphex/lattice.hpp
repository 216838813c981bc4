#pragma once

#include <string>
#include <vector>

#include "graphex/embedding.hpp"
#include "graphex/graph.hpp"
#include "graphex/kind.hpp"

namespace graphex {

// One conversion step of a witness chain: a registered embedding family
// instantiated at a concrete source kind. The step's primary property names
// the axis it is catalogued under; a step may touch auxiliary axes too
// (e.g. folding attributes into types also clears the attribute axis).
struct PropertyStep {
    std::string family;
    Property property = Property::Attributed;
    bool adds = false;
    GraphKind source_kind;
    GraphKind target_kind;

    bool operator==(const PropertyStep&) const = default;
};

// A constructive expressivity witness: a composable sequence of embedding
// steps from source_kind to a kind that widens (subkind) into target_kind.
// The final widening is implicit re-kinding and not a step of its own.
struct WitnessChain {
    GraphKind source_kind;
    GraphKind target_kind;
    std::vector<PropertyStep> steps;

    bool operator==(const WitnessChain&) const = default;
};

enum class Order { Equivalent, LessOrEqual, GreaterOrEqual, Incomparable };

std::string order_name(Order o);

// Catalog-induced expressivity order: a <= b when some chain of registered
// embeddings carries every a-graph into a subkind of b. Incomparable means
// neither direction has a witness in the catalog.
Order compare_kinds(const GraphKind& a, const GraphKind& b);

// Shortest witness chain from source to target (BFS over the registered
// catalog; ties break by the catalog's property/name order). Throws NoPath
// when the catalog offers no witness.
WitnessChain plan_chain(const GraphKind& source, const GraphKind& target);

// Runs the chain forwards. Throws KindMismatch if g is not of the chain's
// source kind; widens between steps where the chain relies on subkinding.
GraphValue apply_chain(const WitnessChain& chain, const GraphValue& g);

// Runs the chain backwards on an image graph. Throws NotInImage when g is
// not reachable by apply_chain.
GraphValue apply_chain_inverse(const WitnessChain& chain, const GraphValue& g);

// Concatenation: first then second. Requires the first target to widen into
// the second source; throws KindMismatch otherwise.
WitnessChain compose_chains(const WitnessChain& first, const WitnessChain& second);

// Line-oriented textual rendering, stable across runs.
std::string chain_to_string(const WitnessChain& chain);

// Parses chain_to_string output. Throws ParseError on malformed text and
// Error when a step does not name an admissible embedding instance.
WitnessChain chain_from_string(std::string_view text);

}  // namespace graphex
