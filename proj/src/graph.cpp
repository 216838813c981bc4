#include "graphex/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphex/errors.hpp"

namespace graphex {

namespace {

std::string describe(const NodeRef& r) {
    std::string s = std::to_string(r.id);
    if (r.type) s += ":" + quote_symbol(*r.type);
    return s;
}

std::string describe(const NodeRecord& n) {
    std::string s = "node " + describe(n.ref());
    if (n.mult != 1) s += " x " + std::to_string(n.mult);
    return s;
}

std::string describe(const EdgeRecord& e) {
    std::string s;
    if (e.is_hyper()) {
        s = "hyper {";
        bool first = true;
        for (const auto& [ref, level] : e.hyper().members) {
            if (!first) s += " ";
            first = false;
            s += describe(ref) + "@" + std::to_string(level);
        }
        s += "}";
    } else {
        s = "edge " + describe(e.simple().u) + " " + describe(e.simple().v);
    }
    if (e.type) s += " type " + quote_symbol(*e.type);
    if (e.mult != 1) s += " x " + std::to_string(e.mult);
    return s;
}

bool attr_ok(const std::optional<AttrValue>& attr, Attributed level) {
    switch (level) {
        case Attributed::None:
            return !attr.has_value();
        case Attributed::IntegerOnly:
            return attr.has_value() && attr->is_int();
        case Attributed::Full:
            return attr.has_value();
    }
    return false;
}

void validate_snapshot(const GraphKind& kind, const Snapshot& snap,
                       std::vector<Diagnostic>& diags) {
    auto bad = [&](std::string rule, std::string detail) {
        diags.push_back(Diagnostic{std::move(rule), std::move(detail)});
    };

    // Node records.
    std::set<std::tuple<std::uint64_t, std::optional<std::string>, std::uint32_t>> node_keys;
    std::map<NodeRef, std::set<std::uint32_t>> node_mults;
    std::set<NodeRef> node_refs;
    for (const NodeRecord& n : snap.nodes) {
        if (n.type.has_value() != kind.hetero_node)
            bad("node-type-presence", describe(n) + (kind.hetero_node
                    ? " lacks a node type in a node-heterogeneous graph"
                    : " carries a node type in a node-homogeneous graph"));
        if (n.mult == 0) bad("multiplicity-positive", describe(n) + " has index 0");
        if (!kind.multi_node && n.mult != 1)
            bad("multiplicity-simple", describe(n) + " in a non-multi-node graph");
        if (!attr_ok(n.attr, kind.attributed))
            bad("node-attr-presence", describe(n) + " violates the attribute level " +
                                          "declared by the kind");
        if (!node_keys.insert({n.id, n.type, n.mult}).second)
            bad("node-duplicate", describe(n) + " appears twice");
        node_mults[n.ref()].insert(n.mult);
        node_refs.insert(n.ref());
    }
    for (const auto& [ref, mults] : node_mults) {
        if (!mults.empty() && (*mults.begin() != 1 || *mults.rbegin() != mults.size()))
            bad("multiplicity-gap", "occurrence indices of node " + describe(ref) +
                                        " are not 1..k");
    }

    // Edge records.
    std::set<std::tuple<Endpoints, std::optional<std::string>, std::uint32_t>> edge_keys;
    std::map<std::pair<Endpoints, std::optional<std::string>>, std::set<std::uint32_t>>
        edge_mults;
    for (const EdgeRecord& e : snap.edges) {
        if (e.is_hyper() != kind.hyper)
            bad("edge-representation", describe(e) + (kind.hyper
                    ? " is a simple edge in a hypergraph"
                    : " is a hyperedge in a non-hypergraph"));
        if (e.type.has_value() != kind.hetero_edge)
            bad("edge-type-presence", describe(e) + (kind.hetero_edge
                    ? " lacks an edge type in an edge-heterogeneous graph"
                    : " carries an edge type in an edge-homogeneous graph"));
        if (e.mult == 0) bad("multiplicity-positive", describe(e) + " has index 0");
        if (!kind.multi_edge && e.mult != 1)
            bad("multiplicity-simple", describe(e) + " in a non-multi-edge graph");
        if (!attr_ok(e.attr, kind.attributed))
            bad("edge-attr-presence", describe(e) + " violates the attribute level " +
                                          "declared by the kind");
        if (!edge_keys.insert({e.ends, e.type, e.mult}).second)
            bad("edge-duplicate", describe(e) + " appears twice");
        edge_mults[{e.ends, e.type}].insert(e.mult);

        if (e.is_hyper()) {
            const HyperEnds& h = e.hyper();
            if (h.members.empty()) bad("hyperedge-empty", describe(e) + " has no members");
            std::set<NodeRef> seen;
            std::set<std::uint64_t> levels;
            for (const auto& [ref, level] : h.members) {
                if (!seen.insert(ref).second)
                    bad("hyperedge-member-duplicate",
                        describe(e) + " lists " + describe(ref) + " twice");
                if (!node_refs.count(ref))
                    bad("dangling-reference", describe(e) + " references missing node " +
                                                  describe(ref));
                levels.insert(level);
            }
            for (std::uint64_t level : levels) {
                if (level > 1 && !levels.count(level - 1))
                    bad("numbering-gap", describe(e) + " uses level " +
                                             std::to_string(level) + " without level " +
                                             std::to_string(level - 1));
            }
            if (!kind.directed && !h.all_zero())
                bad("symmetry", describe(e) +
                                    " has a nonzero numbering in an undirected hypergraph");
        } else {
            const SimpleEnds& se = e.simple();
            if (!node_refs.count(se.u))
                bad("dangling-reference",
                    describe(e) + " references missing node " + describe(se.u));
            if (!node_refs.count(se.v))
                bad("dangling-reference",
                    describe(e) + " references missing node " + describe(se.v));
        }
    }
    for (const auto& [key, mults] : edge_mults) {
        if (!mults.empty() && (*mults.begin() != 1 || *mults.rbegin() != mults.size())) {
            EdgeRecord probe{key.first, key.second, *mults.begin(), std::nullopt};
            bad("multiplicity-gap",
                "occurrence indices of " + describe(probe) + " are not 1..k");
        }
    }

    // Symmetric closure for undirected non-hypergraphs: (u,v) present iff
    // (v,u) present, same type and index, equal attribute.
    if (!kind.directed && !kind.hyper) {
        std::map<std::tuple<NodeRef, NodeRef, std::optional<std::string>, std::uint32_t>,
                 std::optional<AttrValue>>
            by_key;
        for (const EdgeRecord& e : snap.edges)
            by_key[{e.simple().u, e.simple().v, e.type, e.mult}] = e.attr;
        for (const EdgeRecord& e : snap.edges) {
            const SimpleEnds& se = e.simple();
            if (se.u == se.v) continue;
            auto it = by_key.find({se.v, se.u, e.type, e.mult});
            if (it == by_key.end())
                bad("symmetry", describe(e) + " lacks its reversed record");
            else if (it->second != e.attr)
                bad("symmetry", describe(e) + " and its reversed record carry " +
                                    "different attributes");
        }
    }
}

}  // namespace

std::vector<Diagnostic> validate(const GraphValue& g) {
    std::vector<Diagnostic> diags;
    auto bad = [&](std::string rule, std::string detail) {
        diags.push_back(Diagnostic{std::move(rule), std::move(detail)});
    };

    if (g.snapshots.empty()) {
        bad("snapshots-empty", "a graph holds at least one snapshot");
        return diags;
    }
    if (!g.kind.dynamic) {
        if (g.snapshots.size() != 1)
            bad("static-single-snapshot", "a static graph holds exactly one snapshot");
        if (g.snapshots.front().t != 0)
            bad("static-timestamp", "a static graph is stamped 0");
    } else {
        std::set<std::int64_t> stamps;
        for (const Snapshot& s : g.snapshots) {
            if (s.t < 0)
                bad("timestamp-negative", "timestamp " + std::to_string(s.t));
            if (!stamps.insert(s.t).second)
                bad("timestamp-duplicate", "timestamp " + std::to_string(s.t) +
                                               " appears twice");
        }
        // An empty snapshot is only representable as the single snapshot of
        // the empty dynamic graph at timestamp 0; otherwise it leaves no
        // trace under the dynamic-to-static attribute encoding.
        bool single_empty = g.snapshots.size() == 1 && g.snapshots.front().t == 0 &&
                            g.snapshots.front().nodes.empty();
        if (!single_empty) {
            for (const Snapshot& s : g.snapshots)
                if (s.nodes.empty())
                    bad("snapshot-empty", "snapshot " + std::to_string(s.t) +
                                              " holds no nodes");
        }
    }
    for (const Snapshot& s : g.snapshots) validate_snapshot(g.kind, s, diags);
    return diags;
}

GraphValue sort_records(const GraphValue& g) {
    GraphValue out = g;
    for (Snapshot& s : out.snapshots) {
        for (EdgeRecord& e : s.edges)
            if (e.is_hyper())
                std::sort(std::get<HyperEnds>(e.ends).members.begin(),
                          std::get<HyperEnds>(e.ends).members.end());
        std::sort(s.nodes.begin(), s.nodes.end());
        std::sort(s.edges.begin(), s.edges.end());
    }
    std::sort(out.snapshots.begin(), out.snapshots.end());
    return out;
}

GraphValue canonicalize(const GraphValue& g) {
    GraphValue out = sort_records(g);
    std::vector<Diagnostic> diags = validate(out);
    if (!diags.empty())
        throw InvalidGraph("invalid graph: " + diags.front().rule + ": " +
                           diags.front().detail);
    return out;
}

bool equals(const GraphValue& g1, const GraphValue& g2) {
    return canonicalize(g1) == canonicalize(g2);
}

GraphKind kind_of(const GraphValue& g) {
    GraphKind k;
    k.dynamic = g.snapshots.size() > 1 ||
                (!g.snapshots.empty() && g.snapshots.front().t != 0);
    bool any_attr = false;
    bool all_int = true;
    for (const Snapshot& s : g.snapshots) {
        for (const NodeRecord& n : s.nodes) {
            if (n.type) k.hetero_node = true;
            if (n.mult > 1) k.multi_node = true;
            if (n.attr) {
                any_attr = true;
                if (!n.attr->is_int()) all_int = false;
            }
        }
        std::map<std::tuple<NodeRef, NodeRef, std::optional<std::string>, std::uint32_t>,
                 std::optional<AttrValue>>
            by_key;
        for (const EdgeRecord& e : s.edges)
            if (!e.is_hyper())
                by_key[{e.simple().u, e.simple().v, e.type, e.mult}] = e.attr;
        for (const EdgeRecord& e : s.edges) {
            if (e.type) k.hetero_edge = true;
            if (e.mult > 1) k.multi_edge = true;
            if (e.attr) {
                any_attr = true;
                if (!e.attr->is_int()) all_int = false;
            }
            if (e.is_hyper()) {
                k.hyper = true;
                if (!e.hyper().all_zero()) k.directed = true;
            } else {
                const SimpleEnds& se = e.simple();
                if (se.u != se.v) {
                    auto it = by_key.find({se.v, se.u, e.type, e.mult});
                    if (it == by_key.end() || it->second != e.attr) k.directed = true;
                }
            }
        }
    }
    if (any_attr) k.attributed = all_int ? Attributed::IntegerOnly : Attributed::Full;
    return k;
}

GraphValue rekind(const GraphValue& g, const GraphKind& k) {
    GraphValue out = g;
    out.kind = k;
    return out;
}

}  // namespace graphex
