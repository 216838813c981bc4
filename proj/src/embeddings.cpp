#include "graphex/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graphex/errors.hpp"

namespace graphex {

std::string property_name(Property p) {
    switch (p) {
        case Property::Attributed: return "attributed";
        case Property::Hyper: return "hyper";
        case Property::Multi: return "multi";
        case Property::Directed: return "directed";
        case Property::Heterogeneous: return "heterogeneous";
        case Property::Dynamic: return "dynamic";
    }
    return "?";
}

namespace {

[[noreturn]] void niy(const std::string& what) {
    throw NotInImage("not in image: " + what);
}

GraphValue map_snapshots(const GraphValue& g, const GraphKind& target,
                         const std::function<void(const Snapshot&, Snapshot&)>& fn) {
    GraphValue out;
    out.kind = target;
    for (const Snapshot& s : g.snapshots) {
        Snapshot o;
        o.t = s.t;
        fn(s, o);
        out.snapshots.push_back(std::move(o));
    }
    return out;
}

const std::string kSignForward = "+1";
const std::string kSignBackward = "-1";
const std::string kFillType = "0";

// --- tagged hyperedge expansion (cliques and biclique chains) -------------

// The expansion keeps the clique/biclique edge structure and additionally
// records, per node, which hyperedge ordinals contain it at which level.
// Without the tags the edge structure alone is not injective (a triangle of
// 2-hyperedges expands exactly like one 3-hyperedge); the tags carry the
// hyperedge attributes and types as well.
GraphValue tagged_expansion_fwd(const GraphValue& g, const GraphKind& src,
                                const GraphKind& tgt) {
    const bool attributed = src.attributed == Attributed::Full;
    const bool typed_edges = src.hetero_edge;
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        std::map<NodeRef, std::vector<AttrValue>> tags;
        for (const NodeRecord& n : s.nodes) tags[n.ref()];
        std::map<std::pair<NodeRef, NodeRef>, std::vector<AttrValue>> out_edges;
        std::uint64_t j = 0;
        for (const EdgeRecord& e : s.edges) {
            const HyperEnds& h = e.hyper();
            for (const auto& [ref, level] : h.members) {
                AttrValue tag;
                if (attributed && typed_edges)
                    tag = AttrValue::pair(
                        AttrValue::integer(j),
                        AttrValue::pair(AttrValue::integer(level),
                                        AttrValue::pair(*e.attr, AttrValue::sym(*e.type))));
                else if (attributed)
                    tag = AttrValue::pair(AttrValue::integer(j),
                                          AttrValue::pair(AttrValue::integer(level), *e.attr));
                else if (typed_edges)
                    tag = AttrValue::pair(AttrValue::integer(j),
                                          AttrValue::pair(AttrValue::integer(level),
                                                          AttrValue::sym(*e.type)));
                else
                    tag = AttrValue::pair(AttrValue::integer(j), AttrValue::integer(level));
                tags[ref].push_back(tag);
            }
            const bool clique = h.all_zero();
            for (const auto& [a, la] : h.members) {
                for (const auto& [b, lb] : h.members) {
                    if (a == b) continue;
                    const bool emit = clique ? true : lb == la + 1;
                    if (!emit) continue;
                    out_edges[{a, b}].push_back(AttrValue::pair(
                        AttrValue::integer(j), AttrValue::sym(clique ? "clique" : "chain")));
                }
            }
            ++j;
        }
        for (const NodeRecord& n : s.nodes) {
            NodeRecord m = n;
            AttrValue tagseq = AttrValue::seq(tags[n.ref()]);
            m.attr = attributed ? AttrValue::pair(*n.attr, std::move(tagseq))
                                : std::move(tagseq);
            o.nodes.push_back(std::move(m));
        }
        for (auto& [key, list] : out_edges)
            o.edges.push_back(EdgeRecord{SimpleEnds{key.first, key.second}, std::nullopt, 1,
                                         AttrValue::seq(std::move(list))});
    });
}

GraphValue tagged_expansion_rec(const GraphValue& g, const GraphKind& src,
                                const GraphKind&) {
    const bool attributed = src.attributed == Attributed::Full;
    const bool typed_edges = src.hetero_edge;
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        struct Acc {
            std::vector<std::pair<NodeRef, std::uint64_t>> members;
            std::optional<AttrValue> payload;
        };
        std::map<std::uint64_t, Acc> acc;
        for (const NodeRecord& n : s.nodes) {
            if (!n.attr) niy("node without tag attribute");
            const AttrValue* tagseq = nullptr;
            NodeRecord m = n;
            if (attributed) {
                if (!n.attr->is_pair()) niy("node attribute is not a (original, tags) pair");
                m.attr = n.attr->first();
                tagseq = &n.attr->second();
            } else {
                m.attr = std::nullopt;
                tagseq = &*n.attr;
            }
            if (!tagseq->is_seq()) niy("node tag list is not a sequence");
            o.nodes.push_back(m);
            for (const AttrValue& tag : tagseq->items()) {
                if (!tag.is_pair() || !tag.first().is_int()) niy("malformed membership tag");
                const std::uint64_t j = tag.first().int_value();
                std::uint64_t level = 0;
                std::optional<AttrValue> payload;
                if (attributed || typed_edges) {
                    if (!tag.second().is_pair() || !tag.second().first().is_int())
                        niy("malformed membership tag");
                    level = tag.second().first().int_value();
                    payload = tag.second().second();
                } else {
                    if (!tag.second().is_int()) niy("malformed membership tag");
                    level = tag.second().int_value();
                }
                Acc& a = acc[j];
                a.members.emplace_back(n.ref(), level);
                if (payload) {
                    if (a.payload && !(*a.payload == *payload))
                        niy("inconsistent hyperedge payload");
                    a.payload = payload;
                }
            }
        }
        std::uint64_t expect = 0;
        for (auto& [j, a] : acc) {
            if (j != expect++) niy("hyperedge ordinals are not contiguous");
            EdgeRecord e;
            e.ends = HyperEnds{std::move(a.members)};
            if (attributed && typed_edges) {
                if (!a.payload || !a.payload->is_pair() || !a.payload->second().is_sym())
                    niy("malformed hyperedge payload");
                e.attr = a.payload->first();
                e.type = a.payload->second().symbol();
            } else if (attributed) {
                e.attr = *a.payload;
            } else if (typed_edges) {
                if (!a.payload || !a.payload->is_sym()) niy("malformed hyperedge payload");
                e.type = a.payload->symbol();
            }
            o.edges.push_back(std::move(e));
        }
        // The simple edges of the input are implied by the tags; the
        // image check re-expands and compares them.
    });
}

// Lossy variant: the paper's clique/biclique edge set with no tags.
GraphValue untagged_expansion_fwd(const GraphValue& g, const GraphKind&,
                                  const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        std::set<std::pair<NodeRef, NodeRef>> out_edges;
        for (const EdgeRecord& e : s.edges) {
            const HyperEnds& h = e.hyper();
            const bool clique = h.all_zero();
            for (const auto& [a, la] : h.members)
                for (const auto& [b, lb] : h.members) {
                    if (a == b) continue;
                    if (clique || lb == la + 1) out_edges.insert({a, b});
                }
        }
        for (const auto& [u, v] : out_edges)
            o.edges.push_back(EdgeRecord{SimpleEnds{u, v}, std::nullopt, 1, std::nullopt});
    });
}

// --- structural incidence-chain encoding ----------------------------------

// Unattributed variant: each hyperedge becomes a fresh anchor node plus a
// chain of level nodes; members attach to the node of their level. Original
// nodes are exactly the sink nodes of the image, which makes the encoding
// injective without attributes.
GraphValue incidence_fwd(const GraphValue& g, const GraphKind&, const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        std::uint64_t base = 0;
        for (const NodeRecord& n : s.nodes) base = std::max(base, n.id);
        const std::uint64_t m = s.edges.size();
        std::uint64_t next_aux = base + m + 1;
        o.nodes = s.nodes;
        std::uint64_t j = 1;
        auto add_node = [&](std::uint64_t id) {
            o.nodes.push_back(NodeRecord{id, std::nullopt, 1, std::nullopt});
        };
        auto add_edge = [&](std::uint64_t a, std::uint64_t b) {
            o.edges.push_back(EdgeRecord{
                SimpleEnds{NodeRef{a, std::nullopt}, NodeRef{b, std::nullopt}}, std::nullopt,
                1, std::nullopt});
        };
        for (const EdgeRecord& e : s.edges) {
            const HyperEnds& h = e.hyper();
            const std::uint64_t anchor = base + j;
            add_node(anchor);
            std::uint64_t max_level = 0;
            for (const auto& [ref, level] : h.members) max_level = std::max(max_level, level);
            std::vector<std::uint64_t> chain{anchor};
            for (std::uint64_t k = 1; k <= max_level; ++k) {
                add_node(next_aux);
                add_edge(chain.back(), next_aux);
                chain.push_back(next_aux++);
            }
            for (const auto& [ref, level] : h.members) add_edge(chain[level], ref.id);
            ++j;
        }
    });
}

GraphValue incidence_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        std::map<std::uint64_t, std::vector<std::uint64_t>> succ;
        std::set<std::uint64_t> all, with_out;
        for (const NodeRecord& n : s.nodes) all.insert(n.id);
        for (const EdgeRecord& e : s.edges) {
            succ[e.simple().u.id].push_back(e.simple().v.id);
            with_out.insert(e.simple().u.id);
        }
        std::set<std::uint64_t> originals;
        for (std::uint64_t id : all)
            if (!with_out.count(id)) originals.insert(id);
        for (std::uint64_t id : originals)
            o.nodes.push_back(NodeRecord{id, std::nullopt, 1, std::nullopt});
        std::set<std::uint64_t> aux;
        for (std::uint64_t id : all)
            if (!originals.count(id)) aux.insert(id);
        std::set<std::uint64_t> has_aux_pred;
        for (std::uint64_t a : aux)
            for (std::uint64_t b : succ[a])
                if (aux.count(b)) has_aux_pred.insert(b);
        std::size_t visited = 0;
        for (std::uint64_t head : aux) {
            if (has_aux_pred.count(head)) continue;
            HyperEnds h;
            std::uint64_t cur = head;
            std::uint64_t level = 0;
            std::set<std::uint64_t> seen;
            while (true) {
                if (!seen.insert(cur).second) niy("cyclic chain");
                ++visited;
                std::uint64_t next = 0;
                bool has_next = false;
                for (std::uint64_t b : succ[cur]) {
                    if (originals.count(b)) {
                        h.members.emplace_back(NodeRef{b, std::nullopt}, level);
                    } else {
                        if (has_next) niy("branching chain");
                        next = b;
                        has_next = true;
                    }
                }
                if (!has_next) break;
                cur = next;
                ++level;
            }
            if (h.members.empty()) niy("chain without members");
            o.edges.push_back(EdgeRecord{std::move(h), std::nullopt, 1, std::nullopt});
        }
        if (visited != aux.size()) niy("unreachable auxiliary node");
    });
}

// --- trivial hyperedge wrapper (every simple edge is a hyperedge) ---------

GraphValue to_hyper_fwd(const GraphValue& g, const GraphKind& src, const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            EdgeRecord h = e;
            if (src.directed) {
                // nodes of x map to 1, nodes of y to 2; self-loops become
                // arity-1 hyperedges whose numbering value 1 marks them
                if (se.u == se.v)
                    h.ends = HyperEnds{{{se.u, 1}}};
                else
                    h.ends = HyperEnds{{{se.u, 1}, {se.v, 2}}};
            } else {
                if (se.v < se.u) continue;  // mirror record of the symmetric pair
                if (se.u == se.v)
                    h.ends = HyperEnds{{{se.u, 0}}};
                else
                    h.ends = HyperEnds{{{se.u, 0}, {se.v, 0}}};
            }
            o.edges.push_back(std::move(h));
        }
    });
}

GraphValue to_hyper_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        for (const EdgeRecord& e : s.edges) {
            const auto& members = e.hyper().members;
            EdgeRecord out = e;
            if (src.directed) {
                if (members.size() == 1 && members[0].second == 1) {
                    out.ends = SimpleEnds{members[0].first, members[0].first};
                } else if (members.size() == 2) {
                    const auto* lo = &members[0];
                    const auto* hi = &members[1];
                    if (lo->second == 2 && hi->second == 1) std::swap(lo, hi);
                    if (lo->second != 1 || hi->second != 2) niy("unexpected numbering");
                    out.ends = SimpleEnds{lo->first, hi->first};
                } else {
                    niy("unexpected hyperedge arity");
                }
                o.edges.push_back(std::move(out));
            } else {
                if (members.size() == 1 && members[0].second == 0) {
                    out.ends = SimpleEnds{members[0].first, members[0].first};
                    o.edges.push_back(std::move(out));
                } else if (members.size() == 2 && members[0].second == 0 &&
                           members[1].second == 0) {
                    out.ends = SimpleEnds{members[0].first, members[1].first};
                    EdgeRecord mirror = out;
                    mirror.ends = SimpleEnds{members[1].first, members[0].first};
                    o.edges.push_back(std::move(out));
                    o.edges.push_back(std::move(mirror));
                } else {
                    niy("unexpected hyperedge shape");
                }
            }
        }
    });
}

// --- orientation-typed edge split (directed into undirected typed) --------

// Edge types "0" and "1" mark whether the original directed edge ran
// ascending or descending relative to node ids, so each symmetric typed
// pair decodes to exactly one directed edge.
GraphValue oriented_hetero_fwd(const GraphValue& g, const GraphKind&,
                               const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            if (se.u == se.v) {
                EdgeRecord out = e;
                out.type = "0";
                o.edges.push_back(std::move(out));
                continue;
            }
            const bool ascending = se.u < se.v;
            EdgeRecord a = e, b = e;
            a.type = b.type = ascending ? "0" : "1";
            b.ends = SimpleEnds{se.v, se.u};
            o.edges.push_back(std::move(a));
            o.edges.push_back(std::move(b));
        }
    });
}

GraphValue oriented_hetero_rec(const GraphValue& g, const GraphKind& src,
                               const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            if (se.v < se.u) continue;  // symmetric mirror
            EdgeRecord out = e;
            out.type = std::nullopt;
            if (!e.type) niy("missing orientation type");
            if (*e.type == "0") {
                if (se.u == se.v) {
                    out.ends = SimpleEnds{se.u, se.u};
                } else {
                    out.ends = SimpleEnds{se.u, se.v};
                }
            } else if (*e.type == "1") {
                if (se.u == se.v) niy("descending self-loop");
                out.ends = SimpleEnds{se.v, se.u};
            } else {
                niy("unknown orientation type");
            }
            o.edges.push_back(std::move(out));
        }
    });
}

// --- blank attribution -----------------------------------------------------

GraphValue blank_attr_fwd(const GraphValue& g, const GraphKind&, const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        o.edges = s.edges;
        for (NodeRecord& n : o.nodes) n.attr = AttrValue::blank();
        for (EdgeRecord& e : o.edges) e.attr = AttrValue::blank();
    });
}

GraphValue blank_attr_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        o.edges = s.edges;
        for (NodeRecord& n : o.nodes) {
            if (!n.attr || !n.attr->is_blank()) niy("node attribute is not the blank symbol");
            n.attr = std::nullopt;
        }
        for (EdgeRecord& e : o.edges) {
            if (!e.attr || !e.attr->is_blank()) niy("edge attribute is not the blank symbol");
            e.attr = std::nullopt;
        }
    });
}

// --- attribute values as node/edge types -----------------------------------

GraphValue attrs_to_types_fwd(const GraphValue& g, const GraphKind&,
                              const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        std::map<NodeRef, std::string> ntype;
        for (const NodeRecord& n : s.nodes) ntype[n.ref()] = n.attr->to_string();
        for (const NodeRecord& n : s.nodes)
            o.nodes.push_back(NodeRecord{n.id, ntype[n.ref()], 1, std::nullopt});
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            EdgeRecord out;
            out.ends = SimpleEnds{NodeRef{se.u.id, ntype[se.u]}, NodeRef{se.v.id, ntype[se.v]}};
            out.type = e.attr->to_string();
            o.edges.push_back(std::move(out));
        }
    });
}

GraphValue attrs_to_types_rec(const GraphValue& g, const GraphKind& src,
                              const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        auto decode = [](const std::string& text) {
            auto v = AttrValue::try_parse(text);
            if (!v) niy("type symbol is not an encoded attribute");
            return *v;
        };
        for (const NodeRecord& n : s.nodes) {
            if (!n.type) niy("untyped node");
            o.nodes.push_back(NodeRecord{n.id, std::nullopt, 1, decode(*n.type)});
        }
        for (const EdgeRecord& e : s.edges) {
            if (!e.type) niy("untyped edge");
            const SimpleEnds& se = e.simple();
            EdgeRecord out;
            out.ends = SimpleEnds{NodeRef{se.u.id, std::nullopt}, NodeRef{se.v.id, std::nullopt}};
            out.attr = decode(*e.type);
            o.edges.push_back(std::move(out));
        }
    });
}

// --- integer attributes as multiplicities ----------------------------------

GraphValue counts_to_mult_fwd(const GraphValue& g, const GraphKind&,
                              const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        for (const NodeRecord& n : s.nodes) {
            const std::uint64_t k = n.attr->int_value();
            if (k == 0)
                throw InvalidSource("int_attributed_to_multigraph: attribute 0 on node " +
                                    std::to_string(n.id));
            for (std::uint64_t i = 1; i <= k; ++i)
                o.nodes.push_back(
                    NodeRecord{n.id, std::nullopt, static_cast<std::uint32_t>(i), std::nullopt});
        }
        for (const EdgeRecord& e : s.edges) {
            const std::uint64_t k = e.attr->int_value();
            if (k == 0) throw InvalidSource("int_attributed_to_multigraph: attribute 0 on edge");
            for (std::uint64_t i = 1; i <= k; ++i)
                o.edges.push_back(
                    EdgeRecord{e.ends, std::nullopt, static_cast<std::uint32_t>(i), std::nullopt});
        }
    });
}

GraphValue mult_to_counts_fwd(const GraphValue& g, const GraphKind&,
                              const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        std::map<std::uint64_t, std::uint64_t> ncount;
        for (const NodeRecord& n : s.nodes) ++ncount[n.id];
        for (const auto& [id, k] : ncount)
            o.nodes.push_back(NodeRecord{id, std::nullopt, 1, AttrValue::integer(k)});
        std::map<Endpoints, std::uint64_t> ecount;
        for (const EdgeRecord& e : s.edges) ++ecount[e.ends];
        for (const auto& [ends, k] : ecount)
            o.edges.push_back(EdgeRecord{ends, std::nullopt, 1, AttrValue::integer(k)});
    });
}

// --- directed edges folded into undirected attribute pairs (case table) ----

GraphValue fold_directed_fwd(const GraphValue& g, const GraphKind&,
                             const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        std::map<std::pair<NodeRef, NodeRef>, AttrValue> attr_of;
        for (const EdgeRecord& e : s.edges)
            attr_of.emplace(std::make_pair(e.simple().u, e.simple().v), *e.attr);
        std::set<std::pair<NodeRef, NodeRef>> done;
        for (const EdgeRecord& e : s.edges) {
            NodeRef u = e.simple().u, v = e.simple().v;
            if (v < u) std::swap(u, v);
            if (!done.insert({u, v}).second) continue;
            auto fwd = attr_of.find({u, v});
            auto bwd = u == v ? attr_of.end() : attr_of.find({v, u});
            AttrValue marked;
            if (fwd != attr_of.end() && bwd != attr_of.end())
                marked = AttrValue::pair(
                    AttrValue::pair(fwd->second, AttrValue::sym(kSignForward)),
                    AttrValue::pair(bwd->second, AttrValue::sym(kSignBackward)));
            else if (fwd != attr_of.end())
                marked = AttrValue::pair(fwd->second, AttrValue::sym(kSignForward));
            else
                marked = AttrValue::pair(bwd->second, AttrValue::sym(kSignBackward));
            o.edges.push_back(EdgeRecord{SimpleEnds{u, v}, std::nullopt, 1, marked});
            if (!(u == v))
                o.edges.push_back(EdgeRecord{SimpleEnds{v, u}, std::nullopt, 1, marked});
        }
    });
}

GraphValue fold_directed_rec(const GraphValue& g, const GraphKind& src,
                             const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        auto sign = [](const AttrValue& v) -> int {
            if (!v.is_sym()) return 0;
            if (v.symbol() == kSignForward) return 1;
            if (v.symbol() == kSignBackward) return -1;
            return 0;
        };
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            if (se.v < se.u) continue;  // symmetric mirror
            if (!e.attr || !e.attr->is_pair()) niy("edge attribute is not a marked pair");
            const AttrValue& a = *e.attr;
            auto emit = [&](NodeRef x, NodeRef y, const AttrValue& w) {
                o.edges.push_back(EdgeRecord{SimpleEnds{x, y}, std::nullopt, 1, w});
            };
            if (int sg = sign(a.second()); sg != 0) {
                if (sg > 0)
                    emit(se.u, se.v, a.first());
                else if (se.u == se.v)
                    niy("descending self-loop");
                else
                    emit(se.v, se.u, a.first());
            } else if (a.first().is_pair() && a.second().is_pair() &&
                       sign(a.first().second()) == 1 && sign(a.second().second()) == -1) {
                if (se.u == se.v) niy("two-sided self-loop");
                emit(se.u, se.v, a.first().first());
                emit(se.v, se.u, a.second().first());
            } else {
                niy("edge attribute is not a marked pair");
            }
        }
    });
}

// --- occurrence lists (ordered multisets into attribute sequences) ---------

GraphValue mult_to_seq_fwd(const GraphValue& g, const GraphKind&, const GraphKind& tgt) {
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        // records are in canonical order, so occurrence attributes arrive
        // sorted by multiplicity index
        std::map<std::pair<std::uint64_t, std::optional<std::string>>, std::vector<AttrValue>>
            nacc;
        for (const NodeRecord& n : s.nodes) nacc[{n.id, n.type}].push_back(*n.attr);
        for (auto& [key, list] : nacc)
            o.nodes.push_back(
                NodeRecord{key.first, key.second, 1, AttrValue::seq(std::move(list))});
        std::map<std::pair<Endpoints, std::optional<std::string>>, std::vector<AttrValue>> eacc;
        for (const EdgeRecord& e : s.edges) eacc[{e.ends, e.type}].push_back(*e.attr);
        for (auto& [key, list] : eacc)
            o.edges.push_back(
                EdgeRecord{key.first, key.second, 1, AttrValue::seq(std::move(list))});
    });
}

GraphValue seq_to_mult_fwd(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        for (const NodeRecord& n : s.nodes) {
            if (!n.attr || !n.attr->is_seq() || n.attr->items().empty())
                niy("node attribute is not a nonempty occurrence sequence");
            std::uint32_t i = 1;
            for (const AttrValue& a : n.attr->items())
                o.nodes.push_back(NodeRecord{n.id, n.type, i++, a});
        }
        for (const EdgeRecord& e : s.edges) {
            if (!e.attr || !e.attr->is_seq() || e.attr->items().empty())
                niy("edge attribute is not a nonempty occurrence sequence");
            std::uint32_t i = 1;
            for (const AttrValue& a : e.attr->items())
                o.edges.push_back(EdgeRecord{e.ends, e.type, i++, a});
        }
    });
}

// --- types concatenated onto attributes -------------------------------------

std::string escape_component(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '|') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_components(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '\\') {
            if (++i >= s.size()) niy("dangling escape in type key");
            cur.push_back(s[i]);
        } else if (c == '|') {
            parts.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(std::move(cur));
    return parts;
}

AttrValue encode_entries(std::vector<AttrValue> entries) {
    if (entries.size() == 1) return entries.front();
    return AttrValue::seq(std::move(entries));
}

std::vector<AttrValue> decode_entries(const AttrValue& a) {
    if (a.is_pair()) return {a};
    if (a.is_seq()) {
        if (a.items().size() < 2) niy("type-keyed sequence with fewer than two entries");
        return a.items();
    }
    niy("attribute is neither a type-keyed pair nor a sequence");
}

GraphValue types_to_attrs_fwd(const GraphValue& g, const GraphKind& src,
                              const GraphKind& tgt) {
    const bool hn = src.hetero_node, he = src.hetero_edge, dir = src.directed;
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        if (hn) {
            std::map<std::uint64_t, std::vector<AttrValue>> groups;
            for (const NodeRecord& n : s.nodes)  // canonical order sorts by type
                groups[n.id].push_back(AttrValue::pair(*n.attr, AttrValue::sym(*n.type)));
            for (auto& [id, entries] : groups)
                o.nodes.push_back(
                    NodeRecord{id, std::nullopt, 1, encode_entries(std::move(entries))});
        } else {
            o.nodes = s.nodes;
        }
        auto strip = [](const NodeRef& r) { return NodeRef{r.id, std::nullopt}; };
        std::map<std::pair<NodeRef, NodeRef>, std::vector<std::pair<std::string, AttrValue>>>
            groups;
        for (const EdgeRecord& e : s.edges) {
            NodeRef u = e.simple().u, v = e.simple().v;
            NodeRef su = strip(u), sv = strip(v);
            if (!dir) {
                if (sv < su) continue;             // mirror of the symmetric pair
                if (su == sv && v < u) continue;   // typed mirror on a self pair
            }
            std::string tau;
            if (hn) tau = escape_component(*u.type) + "|" + escape_component(*v.type);
            if (he) {
                if (!tau.empty()) tau += "|";
                tau += escape_component(*e.type);
            }
            groups[{su, sv}].push_back({tau, AttrValue::pair(*e.attr, AttrValue::sym(tau))});
        }
        for (auto& [key, list] : groups) {
            std::sort(list.begin(), list.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<AttrValue> entries;
            for (auto& [tau, entry] : list) entries.push_back(std::move(entry));
            AttrValue enc = encode_entries(std::move(entries));
            o.edges.push_back(EdgeRecord{SimpleEnds{key.first, key.second}, std::nullopt, 1, enc});
            if (!dir && !(key.first == key.second))
                o.edges.push_back(
                    EdgeRecord{SimpleEnds{key.second, key.first}, std::nullopt, 1, enc});
        }
    });
}

GraphValue attrs_to_types_back_rec(const GraphValue& g, const GraphKind& src,
                                   const GraphKind&) {
    const bool hn = src.hetero_node, he = src.hetero_edge, dir = src.directed;
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        if (hn) {
            for (const NodeRecord& n : s.nodes) {
                if (!n.attr) niy("node without entries");
                for (const AttrValue& entry : decode_entries(*n.attr)) {
                    if (!entry.is_pair() || !entry.second().is_sym())
                        niy("malformed node entry");
                    o.nodes.push_back(
                        NodeRecord{n.id, entry.second().symbol(), 1, entry.first()});
                }
            }
        } else {
            o.nodes = s.nodes;
        }
        const std::size_t arity = (hn ? 2u : 0u) + (he ? 1u : 0u);
        for (const EdgeRecord& e : s.edges) {
            const SimpleEnds& se = e.simple();
            if (!dir && se.v < se.u) continue;  // mirrors are re-emitted below
            if (!e.attr) niy("edge without entries");
            for (const AttrValue& entry : decode_entries(*e.attr)) {
                if (!entry.is_pair() || !entry.second().is_sym()) niy("malformed edge entry");
                std::vector<std::string> comps = split_components(entry.second().symbol());
                if (comps.size() != arity) niy("type key arity mismatch");
                std::size_t i = 0;
                EdgeRecord out;
                NodeRef u = se.u, v = se.v;
                if (hn) {
                    u.type = comps[i++];
                    v.type = comps[i++];
                }
                if (he) out.type = comps[i++];
                out.ends = SimpleEnds{u, v};
                out.attr = entry.first();
                o.edges.push_back(out);
                if (!dir && !(u == v)) {
                    EdgeRecord mirror = out;
                    mirror.ends = SimpleEnds{v, u};
                    o.edges.push_back(std::move(mirror));
                }
            }
        }
    });
}

// --- filling the missing type side with a single shared type ----------------

GraphValue fill_types_fwd(const GraphValue& g, const GraphKind& src,
                          const GraphKind& tgt) {
    const bool fill_nodes = !src.hetero_node, fill_edges = !src.hetero_edge;
    return map_snapshots(g, tgt, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        o.edges = s.edges;
        if (fill_nodes) {
            for (NodeRecord& n : o.nodes) n.type = kFillType;
            for (EdgeRecord& e : o.edges) {
                if (e.is_hyper()) {
                    for (auto& [ref, level] : std::get<HyperEnds>(e.ends).members)
                        ref.type = kFillType;
                } else {
                    auto& se = std::get<SimpleEnds>(e.ends);
                    se.u.type = kFillType;
                    se.v.type = kFillType;
                }
            }
        }
        if (fill_edges)
            for (EdgeRecord& e : o.edges) e.type = kFillType;
    });
}

GraphValue fill_types_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    const bool fill_nodes = !src.hetero_node, fill_edges = !src.hetero_edge;
    return map_snapshots(g, src, [&](const Snapshot& s, Snapshot& o) {
        o.nodes = s.nodes;
        o.edges = s.edges;
        auto check_strip = [](std::optional<std::string>& t) {
            if (!t || *t != kFillType) niy("type is not the shared filler type");
            t = std::nullopt;
        };
        if (fill_nodes) {
            for (NodeRecord& n : o.nodes) check_strip(n.type);
            for (EdgeRecord& e : o.edges) {
                if (e.is_hyper()) {
                    for (auto& [ref, level] : std::get<HyperEnds>(e.ends).members)
                        check_strip(ref.type);
                } else {
                    auto& se = std::get<SimpleEnds>(e.ends);
                    check_strip(se.u.type);
                    check_strip(se.v.type);
                }
            }
        }
        if (fill_edges)
            for (EdgeRecord& e : o.edges) check_strip(e.type);
    });
}

// --- snapshots flattened into timestamped attribute sequences ---------------

GraphValue flatten_time_fwd(const GraphValue& g, const GraphKind&,
                            const GraphKind& tgt) {
    GraphValue out;
    out.kind = tgt;
    Snapshot o;
    using NodeKey = std::tuple<std::uint64_t, std::optional<std::string>, std::uint32_t>;
    using EdgeKey = std::tuple<Endpoints, std::optional<std::string>, std::uint32_t>;
    std::map<NodeKey, std::vector<AttrValue>> nacc;
    std::map<EdgeKey, std::vector<AttrValue>> eacc;
    for (const Snapshot& s : g.snapshots) {  // canonical order: ascending t
        AttrValue t = AttrValue::integer(static_cast<std::uint64_t>(s.t));
        for (const NodeRecord& n : s.nodes)
            nacc[{n.id, n.type, n.mult}].push_back(AttrValue::pair(*n.attr, t));
        for (const EdgeRecord& e : s.edges)
            eacc[{e.ends, e.type, e.mult}].push_back(AttrValue::pair(*e.attr, t));
    }
    for (auto& [key, list] : nacc)
        o.nodes.push_back(NodeRecord{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                     AttrValue::seq(std::move(list))});
    for (auto& [key, list] : eacc)
        o.edges.push_back(EdgeRecord{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                     AttrValue::seq(std::move(list))});
    out.snapshots.push_back(std::move(o));
    return out;
}

GraphValue flatten_time_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    GraphValue out;
    out.kind = src;
    const Snapshot& s = g.snapshots.front();
    auto entries = [](const std::optional<AttrValue>& a) {
        if (!a || !a->is_seq() || a->items().empty())
            niy("attribute is not a nonempty timestamped sequence");
        std::vector<std::pair<std::int64_t, AttrValue>> list;
        std::int64_t prev = -1;
        for (const AttrValue& item : a->items()) {
            if (!item.is_pair() || !item.second().is_int()) niy("malformed timestamped pair");
            auto t = static_cast<std::int64_t>(item.second().int_value());
            if (t <= prev) niy("timestamps are not strictly increasing");
            prev = t;
            list.emplace_back(t, item.first());
        }
        return list;
    };
    std::map<std::int64_t, Snapshot> snaps;
    for (const NodeRecord& n : s.nodes)
        for (auto& [t, a] : entries(n.attr)) {
            Snapshot& snap = snaps[t];
            snap.t = t;
            snap.nodes.push_back(NodeRecord{n.id, n.type, n.mult, a});
        }
    for (const EdgeRecord& e : s.edges)
        for (auto& [t, a] : entries(e.attr)) {
            Snapshot& snap = snaps[t];
            snap.t = t;
            snap.edges.push_back(EdgeRecord{e.ends, e.type, e.mult, a});
        }
    if (snaps.empty()) {
        out.snapshots.push_back(Snapshot{});  // the empty graph keeps timestamp 0
    } else {
        for (auto& [t, snap] : snaps) out.snapshots.push_back(std::move(snap));
    }
    return out;
}

// --- pure re-kinding ---------------------------------------------------------

GraphValue rekind_fwd(const GraphValue& g, const GraphKind&, const GraphKind& tgt) {
    return rekind(g, tgt);
}

GraphValue rekind_rec(const GraphValue& g, const GraphKind& src, const GraphKind&) {
    return rekind(g, src);
}

// --- family table -------------------------------------------------------------

using MapFn =
    std::function<GraphValue(const GraphValue&, const GraphKind&, const GraphKind&)>;

struct FamilyDef {
    std::string name;
    std::string lemma;
    Property property;
    bool adds;
    std::function<std::optional<GraphKind>(const GraphKind&)> target_for;
    std::function<bool(const GraphKind&)> registered_at;
    MapFn fwd;
    MapFn rec;  // absent for lossy demonstrations
    GraphKind canonical_source;
};

bool no_multi(const GraphKind& k) { return !k.multi_node && !k.multi_edge; }
bool no_hetero(const GraphKind& k) { return !k.hetero_node && !k.hetero_edge; }

const std::vector<FamilyDef>& families() {
    static const std::vector<FamilyDef> defs = [] {
        std::vector<FamilyDef> v;
        auto always = [](const GraphKind&) { return true; };

        {
            FamilyDef d;
            d.name = "unattributed_to_attributed";
            d.lemma = "L3";
            d.property = Property::Attributed;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.attributed != Attributed::None) return std::nullopt;
                GraphKind t = k;
                t.attributed = Attributed::Full;
                return t;
            };
            d.registered_at = always;
            d.fwd = blank_attr_fwd;
            d.rec = blank_attr_rec;
            d.canonical_source = GraphKind{};
            v.push_back(std::move(d));
        }
        {
            // integer attributes are already full attributes, so this is a
            // pure re-kinding; the inverse narrows and rejects non-integers
            FamilyDef d;
            d.name = "int_attributed_to_attributed";
            d.lemma = "L3";
            d.property = Property::Attributed;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.attributed != Attributed::IntegerOnly) return std::nullopt;
                GraphKind t = k;
                t.attributed = Attributed::Full;
                return t;
            };
            d.registered_at = always;
            d.fwd = rekind_fwd;
            d.rec = rekind_rec;
            d.canonical_source = parse_kind("intattributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "hyper_to_directed";
            d.lemma = "L1";
            d.property = Property::Hyper;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.hyper || k.multi_node || k.multi_edge) return std::nullopt;
                if (k.attributed == Attributed::IntegerOnly) return std::nullopt;
                GraphKind t = k;
                t.hyper = false;
                t.hetero_edge = false;
                t.attributed = Attributed::Full;
                return t;
            };
            // the unattributed instances exist (criterion: tag-free collision
            // demo pairs with the tagged run) but take part in no chains,
            // since they change the attribute axis alongside the hyper axis
            d.registered_at = [](const GraphKind& k) {
                return k.attributed == Attributed::Full;
            };
            d.fwd = tagged_expansion_fwd;
            d.rec = tagged_expansion_rec;
            d.canonical_source =
                parse_kind("hyper,directed,attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "hyper_to_directed_incidence";
            d.lemma = "L1";
            d.property = Property::Hyper;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.hyper || !k.directed || !no_multi(k) || !no_hetero(k) ||
                    k.attributed != Attributed::None)
                    return std::nullopt;
                GraphKind t = k;
                t.hyper = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = incidence_fwd;
            d.rec = incidence_rec;
            d.canonical_source = parse_kind("hyper,directed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "hyper_to_directed_untagged";
            d.lemma = "L1";
            d.property = Property::Hyper;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.hyper || !no_multi(k) || !no_hetero(k) ||
                    k.attributed != Attributed::None)
                    return std::nullopt;
                GraphKind t = k;
                t.hyper = false;
                return t;
            };
            d.registered_at = [](const GraphKind&) { return false; };  // lossy demo
            d.fwd = untagged_expansion_fwd;
            d.rec = nullptr;
            d.canonical_source = parse_kind("hyper,directed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "directed_to_hyper";
            d.lemma = "L1";
            d.property = Property::Hyper;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.hyper) return std::nullopt;
                GraphKind t = k;
                t.hyper = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = to_hyper_fwd;
            d.rec = to_hyper_rec;
            d.canonical_source = parse_kind("directed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "directed_to_heterogeneous";
            d.lemma = "L2";
            d.property = Property::Heterogeneous;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.directed || k.hyper || !no_multi(k) || !no_hetero(k))
                    return std::nullopt;
                GraphKind t = k;
                t.directed = false;
                t.hetero_edge = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = oriented_hetero_fwd;
            d.rec = oriented_hetero_rec;
            d.canonical_source = parse_kind("directed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "attributed_to_heterogeneous";
            d.lemma = "L4";
            d.property = Property::Heterogeneous;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.attributed != Attributed::Full || k.hyper || !no_multi(k) ||
                    !no_hetero(k))
                    return std::nullopt;
                GraphKind t = k;
                t.attributed = Attributed::None;
                t.hetero_node = t.hetero_edge = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = attrs_to_types_fwd;
            d.rec = attrs_to_types_rec;
            d.canonical_source = parse_kind("attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "int_attributed_to_multigraph";
            d.lemma = "L5";
            d.property = Property::Multi;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.attributed != Attributed::IntegerOnly || k.hyper || !no_multi(k) ||
                    !no_hetero(k))
                    return std::nullopt;
                GraphKind t = k;
                t.attributed = Attributed::None;
                t.multi_node = t.multi_edge = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = counts_to_mult_fwd;
            d.rec = [](const GraphValue& g, const GraphKind& src, const GraphKind& tgt) {
                return mult_to_counts_fwd(g, tgt, src);
            };
            d.canonical_source = parse_kind("intattributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "multigraph_to_int_attributed";
            d.lemma = "L5";
            d.property = Property::Multi;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.attributed != Attributed::None || k.hyper || !k.multi() ||
                    !no_hetero(k))
                    return std::nullopt;
                GraphKind t = k;
                t.attributed = Attributed::IntegerOnly;
                t.multi_node = t.multi_edge = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = mult_to_counts_fwd;
            d.rec = [](const GraphValue& g, const GraphKind& src, const GraphKind& tgt) {
                return counts_to_mult_fwd(g, tgt, src);
            };
            d.canonical_source = parse_kind("multi");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "directed_to_undirected";
            d.lemma = "L6";
            d.property = Property::Directed;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.directed || k.hyper || !no_multi(k) || !no_hetero(k) ||
                    k.attributed != Attributed::Full)
                    return std::nullopt;
                GraphKind t = k;
                t.directed = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = fold_directed_fwd;
            d.rec = fold_directed_rec;
            d.canonical_source = parse_kind("directed,attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "undirected_to_directed";
            d.lemma = "L6";
            d.property = Property::Directed;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.directed) return std::nullopt;
                GraphKind t = k;
                t.directed = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = rekind_fwd;
            d.rec = rekind_rec;
            d.canonical_source = parse_kind("attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "multi_to_simple";
            d.lemma = "L7";
            d.property = Property::Multi;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if ((!k.multi_node && !k.multi_edge) || k.attributed != Attributed::Full)
                    return std::nullopt;
                GraphKind t = k;
                t.multi_node = t.multi_edge = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = mult_to_seq_fwd;
            d.rec = seq_to_mult_fwd;
            d.canonical_source = parse_kind("multi,attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "simple_to_multi";
            d.lemma = "L7";
            d.property = Property::Multi;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.multi_node || k.multi_edge) return std::nullopt;
                GraphKind t = k;
                t.multi_node = t.multi_edge = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = rekind_fwd;
            d.rec = rekind_rec;
            d.canonical_source = parse_kind("attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "heterogeneous_to_homogeneous";
            d.lemma = "L8";
            d.property = Property::Heterogeneous;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (no_hetero(k) || k.hyper || k.multi_node || k.multi_edge ||
                    k.attributed != Attributed::Full)
                    return std::nullopt;
                GraphKind t = k;
                t.hetero_node = t.hetero_edge = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = types_to_attrs_fwd;
            d.rec = attrs_to_types_back_rec;
            d.canonical_source = parse_kind("heterogeneous,attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "homogeneous_to_heterogeneous";
            d.lemma = "L8";
            d.property = Property::Heterogeneous;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.hetero_node && k.hetero_edge) return std::nullopt;
                GraphKind t = k;
                t.hetero_node = t.hetero_edge = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = fill_types_fwd;
            d.rec = fill_types_rec;
            d.canonical_source = parse_kind("attributed");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "dynamic_to_static";
            d.lemma = "L9";
            d.property = Property::Dynamic;
            d.adds = false;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (!k.dynamic || k.attributed != Attributed::Full) return std::nullopt;
                GraphKind t = k;
                t.dynamic = false;
                return t;
            };
            d.registered_at = always;
            d.fwd = flatten_time_fwd;
            d.rec = flatten_time_rec;
            d.canonical_source = parse_kind("attributed,dynamic");
            v.push_back(std::move(d));
        }
        {
            FamilyDef d;
            d.name = "static_to_dynamic";
            d.lemma = "L9";
            d.property = Property::Dynamic;
            d.adds = true;
            d.target_for = [](const GraphKind& k) -> std::optional<GraphKind> {
                if (k.dynamic) return std::nullopt;
                GraphKind t = k;
                t.dynamic = true;
                return t;
            };
            d.registered_at = always;
            d.fwd = rekind_fwd;
            d.rec = rekind_rec;
            d.canonical_source = parse_kind("attributed");
            v.push_back(std::move(d));
        }
        return v;
    }();
    return defs;
}

Embedding build_instance(const FamilyDef& def, const GraphKind& src,
                         const GraphKind& tgt) {
    Embedding e;
    e.name = def.name;
    e.lemma = def.lemma;
    e.property = def.property;
    e.adds = def.adds;
    e.source_kind = src;
    e.target_kind = tgt;
    e.registered = def.registered_at(src);
    MapFn fwd = def.fwd;
    e.forward = [fwd, src, tgt, name = def.name](const GraphValue& g) {
        if (g.kind != src)
            throw InvalidSource(name + ": expected source kind '" + format_kind(src) +
                                "', got '" + format_kind(g.kind) + "'");
        GraphValue c;
        try {
            c = canonicalize(g);
        } catch (const InvalidGraph& err) {
            throw InvalidSource(name + ": " + err.what());
        }
        return canonicalize(fwd(c, src, tgt));
    };
    if (def.rec) {
        MapFn rec = def.rec;
        auto forward = e.forward;
        e.inverse = [rec, forward, src, tgt, name = def.name](const GraphValue& g) {
            if (g.kind != tgt)
                throw NotInImage(name + ": expected image kind '" + format_kind(tgt) +
                                 "', got '" + format_kind(g.kind) + "'");
            GraphValue c;
            try {
                c = canonicalize(g);
            } catch (const InvalidGraph& err) {
                throw NotInImage(name + ": " + err.what());
            }
            GraphValue candidate;
            try {
                candidate = canonicalize(rec(c, src, tgt));
            } catch (const InvalidGraph& err) {
                throw NotInImage(name + ": reconstruction is invalid: " + err.what());
            }
            if (!(forward(candidate) == c))
                throw NotInImage(name + ": graph is not a forward image");
            return candidate;
        };
    }
    return e;
}

}  // namespace

const std::vector<Embedding>& catalog() {
    static const std::vector<Embedding> instances = [] {
        std::vector<Embedding> out;
        // ordered by (property, name, source kind index): the planner's
        // deterministic tie-break follows this registration order
        std::vector<const FamilyDef*> defs;
        for (const FamilyDef& d : families()) defs.push_back(&d);
        std::stable_sort(defs.begin(), defs.end(), [](const FamilyDef* a, const FamilyDef* b) {
            if (a->property != b->property) return a->property < b->property;
            return a->name < b->name;
        });
        for (const FamilyDef* d : defs) {
            for (int i = 0; i < kKindCount; ++i) {
                GraphKind src = kind_from_index(i);
                if (!d->registered_at(src)) continue;
                auto tgt = d->target_for(src);
                if (!tgt) continue;
                out.push_back(build_instance(*d, src, *tgt));
            }
        }
        return out;
    }();
    return instances;
}

std::vector<std::string> family_names() {
    std::vector<std::string> names;
    for (const FamilyDef& d : families()) names.push_back(d.name);
    return names;
}

std::optional<Embedding> make_instance(std::string_view family, const GraphKind& source) {
    for (const FamilyDef& d : families()) {
        if (d.name != family) continue;
        auto tgt = d.target_for(source);
        if (!tgt) return std::nullopt;
        return build_instance(d, source, *tgt);
    }
    return std::nullopt;
}

GraphKind canonical_source_kind(std::string_view family) {
    for (const FamilyDef& d : families())
        if (d.name == family) return d.canonical_source;
    throw Error("unknown embedding family: " + std::string(family));
}

const Embedding* find_registered(std::string_view family, const GraphKind& source) {
    for (const Embedding& e : catalog())
        if (e.name == family && e.source_kind == source) return &e;
    return nullptr;
}

}  // namespace graphex
