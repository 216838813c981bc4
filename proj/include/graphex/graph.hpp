#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphex/attr.hpp"
#include "graphex/kind.hpp"

namespace graphex {

// Reference to a node by identity; the type component is present exactly
// when the graph is node-heterogeneous.
struct NodeRef {
    std::uint64_t id = 0;
    std::optional<std::string> type;

    auto operator<=>(const NodeRef&) const = default;
};

struct SimpleEnds {
    NodeRef u;
    NodeRef v;

    auto operator<=>(const SimpleEnds&) const = default;
};

// Generalized hyperedge endpoints: a node set with a numbering. Members are
// kept sorted by reference; an all-zero numbering means undirected.
struct HyperEnds {
    std::vector<std::pair<NodeRef, std::uint64_t>> members;

    auto operator<=>(const HyperEnds&) const = default;
    bool all_zero() const {
        for (const auto& [ref, level] : members)
            if (level != 0) return false;
        return true;
    }
};

using Endpoints = std::variant<SimpleEnds, HyperEnds>;

struct NodeRecord {
    std::uint64_t id = 0;
    std::optional<std::string> type;
    std::uint32_t mult = 1;  // occurrence index within an ordered multiset
    std::optional<AttrValue> attr;

    NodeRef ref() const { return NodeRef{id, type}; }
    auto operator<=>(const NodeRecord&) const = default;
};

struct EdgeRecord {
    Endpoints ends;
    std::optional<std::string> type;
    std::uint32_t mult = 1;
    std::optional<AttrValue> attr;

    auto operator<=>(const EdgeRecord&) const = default;
    bool is_hyper() const { return std::holds_alternative<HyperEnds>(ends); }
    const SimpleEnds& simple() const { return std::get<SimpleEnds>(ends); }
    const HyperEnds& hyper() const { return std::get<HyperEnds>(ends); }
};

struct Snapshot {
    std::int64_t t = 0;
    std::vector<NodeRecord> nodes;
    std::vector<EdgeRecord> edges;

    auto operator<=>(const Snapshot&) const = default;
};

// The universal graph container. Non-dynamic graphs hold exactly one
// snapshot with timestamp 0. Values are treated as immutable after
// construction; every operation is a pure function.
struct GraphValue {
    GraphKind kind;
    std::vector<Snapshot> snapshots;

    auto operator<=>(const GraphValue&) const = default;

    static GraphValue empty(GraphKind k) {
        GraphValue g;
        g.kind = k;
        g.snapshots.push_back(Snapshot{});
        return g;
    }
};

struct Diagnostic {
    std::string rule;
    std::string detail;
};

// Empty iff the value satisfies every invariant its kind declares.
std::vector<Diagnostic> validate(const GraphValue& g);

// Deterministic normal form: records and snapshots sorted; idempotent.
// Throws InvalidGraph when validate() is nonempty.
GraphValue canonicalize(const GraphValue& g);

// Sorting pass without the validity gate (internal building block).
GraphValue sort_records(const GraphValue& g);

// Exact identity-based equality of canonical forms, attributes included.
bool equals(const GraphValue& g1, const GraphValue& g2);

// The most specific kind the stored structure satisfies.
GraphKind kind_of(const GraphValue& g);

// Same structure under a different kind descriptor.
GraphValue rekind(const GraphValue& g, const GraphKind& k);

}  // namespace graphex
