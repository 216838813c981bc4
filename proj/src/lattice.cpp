#include "graphex/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "graphex/errors.hpp"

namespace graphex {

namespace {

// adjacency over kind indices, in catalog (deterministic) order
const std::map<int, std::vector<const Embedding*>>& adjacency() {
    static const std::map<int, std::vector<const Embedding*>> adj = [] {
        std::map<int, std::vector<const Embedding*>> m;
        for (const Embedding& e : catalog())
            if (e.invertible()) m[kind_index(e.source_kind)].push_back(&e);
        return m;
    }();
    return adj;
}

PropertyStep step_of(const Embedding& e) {
    return PropertyStep{e.name, e.property, e.adds, e.source_kind, e.target_kind};
}

bool find_chain(const GraphKind& source, const GraphKind& target, WitnessChain& out) {
    out.source_kind = source;
    out.target_kind = target;
    out.steps.clear();
    if (subkind(source, target)) return true;
    std::vector<int> pred_node(kKindCount, -1);
    std::vector<const Embedding*> pred_edge(kKindCount, nullptr);
    std::vector<bool> seen(kKindCount, false);
    const int start = kind_index(source);
    seen[start] = true;
    std::deque<int> queue{start};
    int goal = -1;
    while (!queue.empty() && goal < 0) {
        int u = queue.front();
        queue.pop_front();
        auto it = adjacency().find(u);
        if (it == adjacency().end()) continue;
        for (const Embedding* e : it->second) {
            int v = kind_index(e->target_kind);
            if (seen[v]) continue;
            seen[v] = true;
            pred_node[v] = u;
            pred_edge[v] = e;
            if (subkind(e->target_kind, target)) {
                goal = v;
                break;
            }
            queue.push_back(v);
        }
    }
    if (goal < 0) return false;
    std::vector<PropertyStep> steps;
    for (int v = goal; v != start; v = pred_node[v]) steps.push_back(step_of(*pred_edge[v]));
    std::reverse(steps.begin(), steps.end());
    out.steps = std::move(steps);
    return true;
}

const Embedding& resolve_step(const PropertyStep& s) {
    static std::map<std::pair<std::string, int>, Embedding> cache;
    auto key = std::make_pair(s.family, kind_index(s.source_kind));
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto inst = make_instance(s.family, s.source_kind);
        if (!inst)
            throw Error("chain step '" + s.family + "' is not admissible at kind '" +
                        format_kind(s.source_kind) + "'");
        it = cache.emplace(key, std::move(*inst)).first;
    }
    const Embedding& e = it->second;
    if (!(e.target_kind == s.target_kind))
        throw Error("chain step '" + s.family + "' target kind mismatch");
    return e;
}

}  // namespace

std::string order_name(Order o) {
    switch (o) {
        case Order::Equivalent: return "equivalent";
        case Order::LessOrEqual: return "lessOrEqual";
        case Order::GreaterOrEqual: return "greaterOrEqual";
        case Order::Incomparable: return "incomparable";
    }
    return "?";
}

Order compare_kinds(const GraphKind& a, const GraphKind& b) {
    WitnessChain scratch;
    const bool le = find_chain(a, b, scratch);
    const bool ge = find_chain(b, a, scratch);
    if (le && ge) return Order::Equivalent;
    if (le) return Order::LessOrEqual;
    if (ge) return Order::GreaterOrEqual;
    return Order::Incomparable;
}

WitnessChain plan_chain(const GraphKind& source, const GraphKind& target) {
    WitnessChain chain;
    if (!find_chain(source, target, chain))
        throw NoPath("no witness chain from '" + format_kind(source) + "' to '" +
                     format_kind(target) + "'");
    return chain;
}

GraphValue apply_chain(const WitnessChain& chain, const GraphValue& g) {
    if (!(g.kind == chain.source_kind))
        throw KindMismatch("chain expects source kind '" + format_kind(chain.source_kind) +
                           "', got '" + format_kind(g.kind) + "'");
    GraphValue cur = canonicalize(g);
    for (const PropertyStep& s : chain.steps) {
        if (!(cur.kind == s.source_kind)) {
            if (!subkind(cur.kind, s.source_kind))
                throw KindMismatch("chain step '" + s.family + "' expects kind '" +
                                   format_kind(s.source_kind) + "', got '" +
                                   format_kind(cur.kind) + "'");
            cur = canonicalize(rekind(cur, s.source_kind));
        }
        cur = resolve_step(s).forward(cur);
    }
    if (!(cur.kind == chain.target_kind)) {
        if (!subkind(cur.kind, chain.target_kind))
            throw KindMismatch("chain ends at kind '" + format_kind(cur.kind) +
                               "', which does not widen into '" +
                               format_kind(chain.target_kind) + "'");
        cur = canonicalize(rekind(cur, chain.target_kind));
    }
    return cur;
}

GraphValue apply_chain_inverse(const WitnessChain& chain, const GraphValue& g) {
    if (!(g.kind == chain.target_kind))
        throw NotInImage("chain image has kind '" + format_kind(chain.target_kind) +
                         "', got '" + format_kind(g.kind) + "'");
    GraphValue cur;
    try {
        cur = canonicalize(g);
    } catch (const InvalidGraph& err) {
        throw NotInImage(err.what());
    }
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        const PropertyStep& s = *it;
        if (!(cur.kind == s.target_kind)) {
            // undo the widening: the value must already satisfy the
            // narrower kind's invariants, otherwise it is not an image
            try {
                cur = canonicalize(rekind(cur, s.target_kind));
            } catch (const InvalidGraph& err) {
                throw NotInImage(err.what());
            }
        }
        const Embedding& e = resolve_step(s);
        if (!e.invertible()) throw NotInImage("chain step '" + s.family + "' has no inverse");
        cur = e.inverse(cur);
    }
    if (!(cur.kind == chain.source_kind)) {
        try {
            cur = canonicalize(rekind(cur, chain.source_kind));
        } catch (const InvalidGraph& err) {
            throw NotInImage(err.what());
        }
    }
    return cur;
}

WitnessChain compose_chains(const WitnessChain& first, const WitnessChain& second) {
    if (!subkind(first.target_kind, second.source_kind))
        throw KindMismatch("cannot compose: '" + format_kind(first.target_kind) +
                           "' does not widen into '" + format_kind(second.source_kind) + "'");
    WitnessChain out;
    out.source_kind = first.source_kind;
    out.target_kind = second.target_kind;
    out.steps = first.steps;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    return out;
}

std::string chain_to_string(const WitnessChain& chain) {
    std::ostringstream os;
    os << "chain " << format_kind(chain.source_kind) << " -> "
       << format_kind(chain.target_kind) << " steps " << chain.steps.size() << "\n";
    std::size_t i = 1;
    for (const PropertyStep& s : chain.steps)
        os << "step " << i++ << " " << s.family << " " << property_name(s.property)
           << (s.adds ? " add " : " remove ") << format_kind(s.source_kind) << " -> "
           << format_kind(s.target_kind) << "\n";
    return os.str();
}

WitnessChain chain_from_string(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    WitnessChain chain;
    bool have_header = false;
    std::size_t declared_steps = 0;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "#") continue;
        if (tag == "chain") {
            if (have_header) throw ParseError(lineno, "duplicate chain header");
            std::string src, arrow, tgt, word;
            if (!(ls >> src >> arrow >> tgt >> word >> declared_steps) || arrow != "->" ||
                word != "steps")
                throw ParseError(lineno, "malformed chain header");
            chain.source_kind = parse_kind(src);
            chain.target_kind = parse_kind(tgt);
            have_header = true;
        } else if (tag == "step") {
            if (!have_header) throw ParseError(lineno, "step before chain header");
            std::size_t index = 0;
            std::string family, prop, mode, src, arrow, tgt;
            if (!(ls >> index >> family >> prop >> mode >> src >> arrow >> tgt) ||
                arrow != "->" || (mode != "add" && mode != "remove"))
                throw ParseError(lineno, "malformed step line");
            if (index != chain.steps.size() + 1)
                throw ParseError(lineno, "step index out of order");
            PropertyStep s;
            s.family = family;
            s.adds = mode == "add";
            s.source_kind = parse_kind(src);
            s.target_kind = parse_kind(tgt);
            auto inst = make_instance(family, s.source_kind);
            if (!inst)
                throw Error("step " + std::to_string(index) + ": '" + family +
                            "' is not admissible at kind '" + src + "'");
            if (property_name(inst->property) != prop)
                throw ParseError(lineno, "step property does not match the family");
            if (!(inst->target_kind == s.target_kind))
                throw ParseError(lineno, "step target kind does not match the family");
            s.property = inst->property;
            chain.steps.push_back(std::move(s));
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError("missing chain header");
    if (chain.steps.size() != declared_steps)
        throw ParseError("declared step count does not match the step lines");
    return chain;
}

}  // namespace graphex
