#include <doctest.h>

#include <set>

#include "graphex/errors.hpp"
#include "helpers.hpp"

using namespace graphex;
using namespace th;

namespace {

bool has_rule(const std::vector<Diagnostic>& diags, const std::string& rule) {
    for (const Diagnostic& d : diags)
        if (d.rule == rule) return true;
    return false;
}

}  // namespace

TEST_CASE("validate accepts the minimal well-formed digraph") {
    GraphValue g = graph("directed", {node(1), node(2)}, {edge(1, 2)});
    CHECK(validate(g).empty());
}

TEST_CASE("undirected kinds force the symmetric closure") {
    GraphValue g = graph("simple", {node(1), node(2)}, {edge(1, 2)});
    CHECK(has_rule(validate(g), "symmetry"));
    g.snapshots[0].edges.push_back(edge(2, 1));
    CHECK(validate(g).empty());
}

TEST_CASE("hyperedge numbering must be gap-free") {
    GraphValue g = graph("hyper,directed", {node(1)}, {hyper({{1, 2}})});
    CHECK(has_rule(validate(g), "numbering-gap"));
    GraphValue ok = graph("hyper,directed", {node(1)}, {hyper({{1, 1}})});
    CHECK(validate(ok).empty());
    // undirected hypergraphs only carry the all-zero numbering
    GraphValue sym = graph("hyper", {node(1), node(2)}, {hyper({{1, 0}, {2, 1}})});
    CHECK(has_rule(validate(sym), "symmetry"));
}

TEST_CASE("attribute presence must match the kind's attribute level") {
    CHECK(has_rule(validate(graph("attributed", {node(1)}, {})), "node-attr-presence"));
    CHECK(has_rule(validate(graph("simple", {node(1, AttrValue::blank())}, {})),
                   "node-attr-presence"));
    CHECK(has_rule(validate(graph("intattributed", {node(1, AttrValue::sym("a"))}, {})),
                   "node-attr-presence"));
    CHECK(validate(graph("intattributed", {node(1, AttrValue::integer(0))}, {})).empty());
}

TEST_CASE("node and edge types are total exactly on heterogeneous kinds") {
    CHECK(has_rule(validate(graph("heteronode", {node(1)}, {})), "node-type-presence"));
    CHECK(has_rule(validate(graph("simple", {tnode(1, "p")}, {})), "node-type-presence"));
    GraphValue g = graph("heteroedge,directed", {node(1)}, {edge(1, 1)});
    CHECK(has_rule(validate(g), "edge-type-presence"));
    g.snapshots[0].edges[0].type = "r";
    CHECK(validate(g).empty());
}

TEST_CASE("multiplicity indices are gap-free occurrence numbers") {
    GraphValue g = graph("multi", {node(1)}, {});
    g.snapshots[0].nodes[0].mult = 2;
    CHECK(has_rule(validate(g), "multiplicity-gap"));
    g.snapshots[0].nodes.push_back(node(1));
    CHECK(validate(g).empty());
    GraphValue simple = graph("simple", {node(1)}, {});
    simple.snapshots[0].nodes[0].mult = 2;
    CHECK(has_rule(validate(simple), "multiplicity-simple"));
}

TEST_CASE("edges cannot dangle and hyperedges cannot be empty") {
    CHECK(has_rule(validate(graph("directed", {node(1)}, {edge(1, 2)})),
                   "dangling-reference"));
    CHECK(has_rule(validate(graph("hyper", {node(1)}, {hyper({})})), "hyperedge-empty"));
    CHECK(has_rule(validate(graph("directed", {node(1), node(1)}, {})), "node-duplicate"));
}

TEST_CASE("snapshot rules distinguish static and dynamic kinds") {
    GraphValue two = dyn_graph("directed", {Snapshot{0, {node(1)}, {}},
                                            Snapshot{1, {node(1)}, {}}});
    CHECK(has_rule(validate(two), "static-single-snapshot"));
    two.kind = parse_kind("directed,dynamic");
    CHECK(validate(two).empty());
    GraphValue dup = dyn_graph("directed,dynamic", {Snapshot{1, {node(1)}, {}},
                                                    Snapshot{1, {node(1)}, {}}});
    CHECK(has_rule(validate(dup), "timestamp-duplicate"));
    GraphValue hole = dyn_graph("directed,dynamic",
                                {Snapshot{0, {node(1)}, {}}, Snapshot{1, {}, {}}});
    CHECK(has_rule(validate(hole), "snapshot-empty"));
    CHECK(validate(GraphValue::empty(parse_kind("directed,dynamic"))).empty());
}

TEST_CASE("canonicalize sorts records and is idempotent") {
    GraphValue g = graph("directed", {node(2), node(1)}, {edge(2, 1), edge(1, 2)});
    GraphValue c = canonicalize(g);
    CHECK(c.snapshots[0].nodes[0].id == 1);
    CHECK(c.snapshots[0].nodes[1].id == 2);
    CHECK(c.snapshots[0].edges[0].simple().u.id == 1);
    CHECK(canonicalize(c) == c);
    CHECK(validate(c).empty());
    GraphValue bad = graph("directed", {node(1)}, {edge(1, 2)});
    CHECK_THROWS_AS(canonicalize(bad), InvalidGraph);
}

TEST_CASE("equals is listing-order independent and attribute exact") {
    GraphValue a = graph("directed", {node(1), node(2)}, {edge(1, 2)});
    GraphValue b = graph("directed", {node(2), node(1)}, {edge(1, 2)});
    CHECK(equals(a, a));
    CHECK(equals(a, b));
    GraphValue c = a;
    c.snapshots[0].nodes.push_back(node(3));
    CHECK_FALSE(equals(a, c));
}

TEST_CASE("kind_of reports the most specific kind") {
    GraphValue sym = graph("directed", {node(1), node(2)}, {edge(1, 2), edge(2, 1)});
    CHECK(kind_of(sym) == parse_kind("simple"));
    GraphValue asym = graph("directed", {node(1), node(2)}, {edge(1, 2)});
    CHECK(kind_of(asym).directed);
    GraphValue blanks = graph("attributed", {node(1, AttrValue::blank())}, {});
    CHECK(kind_of(blanks).attributed == Attributed::Full);
    GraphValue ints = graph("attributed", {node(1, AttrValue::integer(3))}, {});
    CHECK(kind_of(ints).attributed == Attributed::IntegerOnly);
    GraphValue dyn = dyn_graph("directed,dynamic", {Snapshot{0, {node(1)}, {}},
                                                    Snapshot{2, {node(1)}, {}}});
    CHECK(kind_of(dyn).dynamic);
}

TEST_CASE("kind index is a bijection over all 384 kinds") {
    std::set<int> seen;
    for (int i = 0; i < kKindCount; ++i) {
        GraphKind k = kind_from_index(i);
        CHECK(kind_index(k) == i);
        CHECK(parse_kind(format_kind(k)) == k);
        seen.insert(i);
    }
    CHECK(seen.size() == kKindCount);
}

TEST_CASE("subkind orders by implication and keeps representation axes fixed") {
    GraphKind simple = parse_kind("simple");
    CHECK(subkind(simple, simple));
    CHECK(subkind(simple, parse_kind("directed")));
    CHECK(subkind(simple, parse_kind("multi,dynamic")));
    CHECK_FALSE(subkind(parse_kind("directed"), simple));
    CHECK_FALSE(subkind(simple, parse_kind("hyper")));
    CHECK_FALSE(subkind(simple, parse_kind("heteronode")));
    CHECK_FALSE(subkind(simple, parse_kind("attributed")));  // blank is an attribute
    CHECK(subkind(parse_kind("intattributed"), parse_kind("attributed")));
    CHECK_FALSE(subkind(parse_kind("attributed"), parse_kind("intattributed")));
}

TEST_CASE("parse_kind accepts both separators and rejects unknown flags") {
    CHECK(parse_kind("directed+attributed") == parse_kind("directed,attributed"));
    CHECK(parse_kind("unattributed") == parse_kind("simple"));
    CHECK_THROWS_AS(parse_kind("nonsense"), ParseError);
}
