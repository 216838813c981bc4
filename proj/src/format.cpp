#include "graphex/format.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "graphex/errors.hpp"

namespace graphex {

namespace {

std::string ref_token(const NodeRef& r) {
    std::string s = std::to_string(r.id);
    if (r.type) s += ":" + quote_symbol(*r.type);
    return s;
}

void append_common(std::string& line, const std::optional<std::string>& type,
                   std::uint32_t mult, const std::optional<AttrValue>& attr) {
    if (type) line += " type " + quote_symbol(*type);
    if (mult != 1) line += " x " + std::to_string(mult);
    if (attr) line += " attr " + attr->to_string();
}

}  // namespace

std::string serialize(const GraphValue& g) {
    GraphValue c = canonicalize(g);
    std::string out = "graphex " + std::to_string(kFormatVersion) + "\n";
    out += "kind " + format_kind(c.kind) + "\n";
    for (const Snapshot& s : c.snapshots) {
        out += "snapshot " + std::to_string(s.t) + "\n";
        for (const NodeRecord& n : s.nodes) {
            std::string line = "node " + ref_token(n.ref());
            append_common(line, std::nullopt, n.mult, n.attr);
            out += line + "\n";
        }
        for (const EdgeRecord& e : s.edges) {
            std::string line;
            if (e.is_hyper()) {
                line = "hyper";
                for (const auto& [ref, level] : e.hyper().members)
                    line += " " + ref_token(ref) + "@" + std::to_string(level);
            } else {
                line = "edge " + ref_token(e.simple().u) + " " + ref_token(e.simple().v);
            }
            append_common(line, e.type, e.mult, e.attr);
            out += line + "\n";
        }
    }
    out += "end\n";
    return out;
}

namespace {

struct LineParser {
    std::string_view line;
    std::size_t pos = 0;
    std::size_t lineno = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(lineno, msg); }

    void skip_ws() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }

    // A bare word up to whitespace (keywords, integers).
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (start == pos) fail("unexpected end of line");
        return std::string(line.substr(start, pos - start));
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(line[pos] - '0');
            ++pos;
        }
        if (start == pos) fail("expected an integer");
        return v;
    }

    std::string quoted() {
        skip_ws();
        if (pos >= line.size() || line[pos] != '"') fail("expected a quoted symbol");
        ++pos;
        std::string s;
        while (true) {
            if (pos >= line.size()) fail("unterminated symbol");
            char c = line[pos++];
            if (c == '"') break;
            if (c == '\\') {
                if (pos >= line.size()) fail("dangling escape");
                s.push_back(line[pos++]);
            } else {
                s.push_back(c);
            }
        }
        return s;
    }

    NodeRef ref() {
        NodeRef r;
        r.id = integer();
        if (pos < line.size() && line[pos] == ':') {
            ++pos;
            r.type = quoted();
        }
        return r;
    }

    AttrValue attr_value() {
        skip_ws();
        try {
            return AttrValue::parse_prefix(line, pos);
        } catch (const ParseError& e) {
            fail(e.what());
        }
    }
};

struct Alphabets {
    std::optional<std::set<AttrValue>> attrs;
    std::optional<std::set<std::string>> node_types;
    std::optional<std::set<std::string>> edge_types;
};

void check_alphabets(const GraphValue& g, const Alphabets& al) {
    auto bad = [](const std::string& what) {
        throw InvalidGraph("invalid graph: alphabet: " + what +
                           " is not in the declared alphabet");
    };
    for (const Snapshot& s : g.snapshots) {
        for (const NodeRecord& n : s.nodes) {
            if (al.attrs && n.attr && !al.attrs->count(*n.attr)) bad(n.attr->to_string());
            if (al.node_types && n.type && !al.node_types->count(*n.type)) bad(*n.type);
        }
        for (const EdgeRecord& e : s.edges) {
            if (al.attrs && e.attr && !al.attrs->count(*e.attr)) bad(e.attr->to_string());
            if (al.edge_types && e.type && !al.edge_types->count(*e.type)) bad(*e.type);
        }
    }
}

}  // namespace

GraphValue parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    GraphValue g;
    Alphabets alphabets;
    bool saw_header = false, saw_kind = false, saw_end = false;
    Snapshot* snap = nullptr;

    while (std::getline(in, raw)) {
        ++lineno;
        LineParser p{raw, 0, lineno};
        if (p.at_end()) continue;
        if (saw_end) p.fail("content after 'end'");
        std::string keyword = p.word();
        if (keyword.starts_with("#")) continue;
        if (!saw_header) {
            if (keyword != "graphex") p.fail("expected 'graphex <version>' header");
            std::uint64_t version = p.integer();
            if (version != static_cast<std::uint64_t>(kFormatVersion))
                p.fail("unsupported format version " + std::to_string(version));
            saw_header = true;
            continue;
        }
        if (keyword == "kind") {
            if (saw_kind) p.fail("duplicate kind line");
            p.skip_ws();
            try {
                g.kind = parse_kind(raw.substr(p.pos));
            } catch (const ParseError& e) {
                p.fail(e.what());
            }
            saw_kind = true;
            continue;
        }
        if (!saw_kind) p.fail("expected the kind line first");
        if (keyword == "alphabet") {
            std::string which = p.word();
            if (which == "attr") {
                alphabets.attrs.emplace();
                while (!p.at_end()) alphabets.attrs->insert(p.attr_value());
            } else if (which == "nodetype") {
                alphabets.node_types.emplace();
                while (!p.at_end()) alphabets.node_types->insert(p.quoted());
            } else if (which == "edgetype") {
                alphabets.edge_types.emplace();
                while (!p.at_end()) alphabets.edge_types->insert(p.quoted());
            } else {
                p.fail("unknown alphabet '" + which + "'");
            }
            continue;
        }
        if (keyword == "snapshot") {
            g.snapshots.push_back(Snapshot{static_cast<std::int64_t>(p.integer()), {}, {}});
            snap = &g.snapshots.back();
            if (!p.at_end()) p.fail("trailing content on snapshot line");
            continue;
        }
        if (keyword == "end") {
            if (!p.at_end()) p.fail("trailing content on end line");
            saw_end = true;
            continue;
        }
        if (!snap) p.fail("expected a snapshot line before records");
        if (keyword == "node") {
            NodeRecord n;
            NodeRef r = p.ref();
            n.id = r.id;
            n.type = r.type;
            while (!p.at_end()) {
                std::string field = p.word();
                if (field == "x")
                    n.mult = static_cast<std::uint32_t>(p.integer());
                else if (field == "attr")
                    n.attr = p.attr_value();
                else
                    p.fail("unknown node field '" + field + "'");
            }
            snap->nodes.push_back(std::move(n));
        } else if (keyword == "edge" || keyword == "hyper") {
            EdgeRecord e;
            if (keyword == "edge") {
                SimpleEnds se;
                se.u = p.ref();
                se.v = p.ref();
                e.ends = se;
            } else {
                HyperEnds h;
                while (true) {
                    p.skip_ws();
                    if (p.pos >= p.line.size() ||
                        !std::isdigit(static_cast<unsigned char>(p.line[p.pos])))
                        break;
                    NodeRef r = p.ref();
                    if (p.pos >= p.line.size() || p.line[p.pos] != '@')
                        p.fail("hyperedge member needs '@<level>'");
                    ++p.pos;
                    std::uint64_t level = p.integer();
                    h.members.emplace_back(r, level);
                }
                if (h.members.empty()) p.fail("hyperedge lists no members");
                e.ends = std::move(h);
            }
            while (!p.at_end()) {
                std::string field = p.word();
                if (field == "type")
                    e.type = p.quoted();
                else if (field == "x")
                    e.mult = static_cast<std::uint32_t>(p.integer());
                else if (field == "attr")
                    e.attr = p.attr_value();
                else
                    p.fail("unknown edge field '" + field + "'");
            }
            snap->edges.push_back(std::move(e));
        } else {
            p.fail("unknown directive '" + keyword + "'");
        }
    }
    if (!saw_header) throw ParseError("empty document");
    if (!saw_kind) throw ParseError("missing kind line");
    if (!saw_end) throw ParseError("missing end line");
    if (g.snapshots.empty()) g.snapshots.push_back(Snapshot{});
    check_alphabets(g, alphabets);
    return canonicalize(g);
}

}  // namespace graphex
