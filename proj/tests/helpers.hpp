#pragma once

#include <string>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/kind.hpp"

namespace th {

using namespace graphex;

inline NodeRecord node(std::uint64_t id) { return NodeRecord{id, std::nullopt, 1, std::nullopt}; }

inline NodeRecord node(std::uint64_t id, AttrValue attr) {
    return NodeRecord{id, std::nullopt, 1, std::move(attr)};
}

inline NodeRecord tnode(std::uint64_t id, std::string type) {
    return NodeRecord{id, std::move(type), 1, std::nullopt};
}

inline EdgeRecord edge(std::uint64_t u, std::uint64_t v) {
    return EdgeRecord{SimpleEnds{NodeRef{u, std::nullopt}, NodeRef{v, std::nullopt}},
                      std::nullopt, 1, std::nullopt};
}

inline EdgeRecord edge(std::uint64_t u, std::uint64_t v, AttrValue attr) {
    EdgeRecord e = edge(u, v);
    e.attr = std::move(attr);
    return e;
}

inline EdgeRecord tedge(std::uint64_t u, std::uint64_t v, std::string type) {
    EdgeRecord e = edge(u, v);
    e.type = std::move(type);
    return e;
}

inline EdgeRecord hyper(std::vector<std::pair<std::uint64_t, std::uint64_t>> members) {
    HyperEnds h;
    for (const auto& [id, level] : members)
        h.members.emplace_back(NodeRef{id, std::nullopt}, level);
    return EdgeRecord{std::move(h), std::nullopt, 1, std::nullopt};
}

inline GraphValue graph(const std::string& kind, std::vector<NodeRecord> nodes,
                        std::vector<EdgeRecord> edges) {
    GraphValue g;
    g.kind = parse_kind(kind);
    Snapshot s;
    s.nodes = std::move(nodes);
    s.edges = std::move(edges);
    g.snapshots.push_back(std::move(s));
    return g;
}

inline GraphValue dyn_graph(const std::string& kind, std::vector<Snapshot> snaps) {
    GraphValue g;
    g.kind = parse_kind(kind);
    g.snapshots = std::move(snaps);
    return g;
}

}  // namespace th
