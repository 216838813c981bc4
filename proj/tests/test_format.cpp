#include <doctest.h>

#include "graphex/errors.hpp"
#include "graphex/format.hpp"
#include "graphex/oracle.hpp"
#include "helpers.hpp"

using namespace graphex;
using namespace th;

TEST_CASE("minimal document parses to the 2-node digraph") {
    GraphValue g = parse(
        "graphex 1\n"
        "kind directed\n"
        "snapshot 0\n"
        "node 1\n"
        "node 2\n"
        "edge 1 2\n"
        "end\n");
    CHECK(g == canonicalize(graph("directed", {node(1), node(2)}, {edge(1, 2)})));
}

TEST_CASE("documents violating kind invariants are rejected") {
    CHECK_THROWS_AS(parse("graphex 1\nkind simple\nsnapshot 0\nnode 1\nnode 2\n"
                          "edge 1 2\nend\n"),
                    InvalidGraph);
}

TEST_CASE("syntax errors raise parse errors with line context") {
    CHECK_THROWS_AS(parse("kind directed\nend\n"), ParseError);           // missing header
    CHECK_THROWS_AS(parse("graphex 2\nkind directed\nend\n"), ParseError);  // bad version
    CHECK_THROWS_AS(parse("graphex 1\nkind bogusflag\nend\n"), ParseError);
    CHECK_THROWS_AS(parse("graphex 1\nkind directed\nwhat 1\nend\n"), ParseError);
    CHECK_THROWS_AS(parse("graphex 1\nkind directed\nsnapshot 0\nnode 1\nend\nextra\n"),
                    ParseError);
    try {
        parse("graphex 1\nkind directed\nsnapshot 0\nnode oops\nend\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    GraphValue g = parse(
        "graphex 1\n"
        "# a comment\n"
        "kind directed\n"
        "\n"
        "snapshot 0\n"
        "node 1\n"
        "end\n");
    CHECK(g.snapshots[0].nodes.size() == 1);
}

TEST_CASE("declared alphabets are checked and then dropped") {
    const char* doc =
        "graphex 1\n"
        "kind heteronode,attributed\n"
        "alphabet attr ~ 1\n"
        "alphabet nodetype \"p\" \"q\"\n"
        "snapshot 0\n"
        "node 1:\"p\" attr ~\n"
        "end\n";
    GraphValue g = parse(doc);
    CHECK(*g.snapshots[0].nodes[0].type == "p");
    // serialized form carries no alphabet lines
    CHECK(serialize(g).find("alphabet") == std::string::npos);
    CHECK_THROWS_AS(parse("graphex 1\nkind attributed\nalphabet attr ~\n"
                          "snapshot 0\nnode 1 attr 5\nend\n"),
                    InvalidGraph);
}

TEST_CASE("serialization is byte-deterministic and order independent") {
    GraphValue a = graph("directed,attributed",
                         {node(2, AttrValue::sym("x")), node(1, AttrValue::blank())},
                         {edge(2, 1, AttrValue::integer(3))});
    GraphValue b = graph("directed,attributed",
                         {node(1, AttrValue::blank()), node(2, AttrValue::sym("x"))},
                         {edge(2, 1, AttrValue::integer(3))});
    CHECK(serialize(a) == serialize(a));
    CHECK(serialize(a) == serialize(b));
}

TEST_CASE("every record feature survives a round-trip") {
    GraphValue g;
    g.kind = parse_kind("hyper,directed,multi,heterogeneous,attributed,dynamic");
    Snapshot s0;
    s0.t = 0;
    s0.nodes.push_back(NodeRecord{1, "p", 1, AttrValue::pair(AttrValue::blank(),
                                                             AttrValue::sym("v\"1"))});
    s0.nodes.push_back(NodeRecord{1, "p", 2, AttrValue::seq({})});
    EdgeRecord h;
    HyperEnds he;
    he.members.emplace_back(NodeRef{1, "p"}, 1);
    h.ends = he;
    h.type = "r|s";
    h.mult = 1;
    h.attr = AttrValue::integer(9);
    s0.edges.push_back(h);
    Snapshot s3 = s0;
    s3.t = 3;
    g.snapshots = {s0, s3};
    GraphValue c = canonicalize(g);
    CHECK(parse(serialize(c)) == c);
}

TEST_CASE("parse(serialize(g)) is the identity on sampled universes") {
    for (const char* spec : {"directed", "attributed", "multi,attributed",
                             "heterogeneous,attributed", "hyper,directed",
                             "attributed,dynamic", "intattributed"}) {
        UniverseSpec u = standard_universe(parse_kind(spec));
        u.max_node_ids = 4;
        for (const GraphValue& g : sample_universe(u, 50, 7)) {
            CAPTURE(spec);
            CHECK(parse(serialize(g)) == g);
        }
    }
}
