#include "graphex/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "graphex/errors.hpp"
#include "graphex/format.hpp"

namespace graphex {

namespace {

struct EdgeSlot {
    Endpoints ends;
    std::optional<std::string> type;
    bool mirrored = false;  // undirected non-loop: materializes both records
};

struct Ctx {
    const UniverseSpec* spec = nullptr;
    std::vector<std::pair<std::uint64_t, std::optional<std::string>>> node_slots;
    std::vector<std::optional<std::string>> edge_types;
    std::uint32_t node_max = 1;
    std::uint32_t edge_max = 1;
    bool attributed = false;
};

Ctx make_ctx(const UniverseSpec& spec) {
    const GraphKind& k = spec.kind;
    if (spec.max_multiplicity < 1) throw Error("max_multiplicity must be at least 1");
    if (spec.max_timestamps < 1) throw Error("max_timestamps must be at least 1");
    if (k.attributed != Attributed::None && spec.attr_alphabet.empty())
        throw Error("attributed universe needs a nonempty attribute alphabet");
    if (k.attributed == Attributed::IntegerOnly)
        for (const AttrValue& a : spec.attr_alphabet)
            if (!a.is_int())
                throw Error("integer-attributed universe holds non-integer alphabet entry " +
                            a.to_string());
    if (k.hetero_node && spec.node_type_alphabet.empty())
        throw Error("node-heterogeneous universe needs a node type alphabet");
    if (k.hetero_edge && spec.edge_type_alphabet.empty())
        throw Error("edge-heterogeneous universe needs an edge type alphabet");

    Ctx c;
    c.spec = &spec;
    c.attributed = k.attributed != Attributed::None;
    c.node_max = k.multi_node ? spec.max_multiplicity : 1;
    c.edge_max = k.multi_edge ? spec.max_multiplicity : 1;
    std::vector<std::optional<std::string>> ntypes;
    if (k.hetero_node) {
        std::vector<std::string> a = spec.node_type_alphabet;
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (std::string& t : a) ntypes.emplace_back(std::move(t));
    } else {
        ntypes.emplace_back(std::nullopt);
    }
    for (std::uint64_t id = 1; id <= spec.max_node_ids; ++id)
        for (const auto& t : ntypes) c.node_slots.emplace_back(id, t);
    if (k.hetero_edge) {
        std::vector<std::string> a = spec.edge_type_alphabet;
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (std::string& t : a) c.edge_types.emplace_back(std::move(t));
    } else {
        c.edge_types.emplace_back(std::nullopt);
    }
    return c;
}

// every per-member level assignment whose used level set has no gap above 1
void enum_numberings(std::size_t arity, std::vector<std::uint64_t>& levels,
                     const std::function<void()>& done) {
    if (levels.size() == arity) {
        std::set<std::uint64_t> used(levels.begin(), levels.end());
        for (std::uint64_t l : used)
            if (l > 1 && !used.count(l - 1)) return;
        done();
        return;
    }
    for (std::uint64_t l = 0; l <= arity; ++l) {
        levels.push_back(l);
        enum_numberings(arity, levels, done);
        levels.pop_back();
    }
}

std::vector<EdgeSlot> edge_slots_for(const Ctx& c, const std::vector<NodeRef>& refs) {
    const GraphKind& k = c.spec->kind;
    std::vector<EdgeSlot> slots;
    if (!k.hyper) {
        for (std::size_t i = 0; i < refs.size(); ++i) {
            for (std::size_t j = 0; j < refs.size(); ++j) {
                if (!k.directed && j < i) continue;
                for (const auto& t : c.edge_types)
                    slots.push_back(EdgeSlot{SimpleEnds{refs[i], refs[j]}, t,
                                             !k.directed && i != j});
            }
        }
        return slots;
    }
    if (refs.size() > 16)
        throw UniverseTooLarge("hyperedge universe over more than 16 node references");
    for (std::uint32_t mask = 1; mask < (1u << refs.size()); ++mask) {
        std::vector<NodeRef> members;
        for (std::size_t i = 0; i < refs.size(); ++i)
            if (mask & (1u << i)) members.push_back(refs[i]);
        auto add = [&](const std::vector<std::uint64_t>& levels) {
            HyperEnds h;
            for (std::size_t i = 0; i < members.size(); ++i)
                h.members.emplace_back(members[i], levels[i]);
            for (const auto& t : c.edge_types) slots.push_back(EdgeSlot{h, t, false});
        };
        if (k.directed) {
            std::vector<std::uint64_t> levels;
            enum_numberings(members.size(), levels, [&] { add(levels); });
        } else {
            add(std::vector<std::uint64_t>(members.size(), 0));
        }
    }
    return slots;
}

// assigns an alphabet attribute to each of the occurrences 1..count
void enum_attr_rows(const Ctx& c, std::uint32_t count,
                    std::vector<std::optional<AttrValue>>& row,
                    const std::function<void()>& done) {
    if (row.size() == count) {
        done();
        return;
    }
    if (!c.attributed) {
        row.emplace_back(std::nullopt);
        enum_attr_rows(c, count, row, done);
        row.pop_back();
        return;
    }
    for (const AttrValue& a : c.spec->attr_alphabet) {
        row.emplace_back(a);
        enum_attr_rows(c, count, row, done);
        row.pop_back();
    }
}

void enum_edges(const Ctx& c, const std::vector<EdgeSlot>& slots, std::size_t i,
                std::uint32_t records, Snapshot& snap, const std::function<void()>& done) {
    if (i == slots.size()) {
        done();
        return;
    }
    const EdgeSlot& slot = slots[i];
    const std::uint32_t per = slot.mirrored ? 2 : 1;
    for (std::uint32_t count = 0; count <= c.edge_max; ++count) {
        const std::uint32_t added = count * per;
        if (c.spec->max_edge_records && records + added > *c.spec->max_edge_records) break;
        std::vector<std::optional<AttrValue>> row;
        enum_attr_rows(c, count, row, [&] {
            const std::size_t base = snap.edges.size();
            for (std::uint32_t m = 1; m <= count; ++m) {
                snap.edges.push_back(EdgeRecord{slot.ends, slot.type, m, row[m - 1]});
                if (slot.mirrored) {
                    const SimpleEnds& se = std::get<SimpleEnds>(slot.ends);
                    snap.edges.push_back(
                        EdgeRecord{SimpleEnds{se.v, se.u}, slot.type, m, row[m - 1]});
                }
            }
            enum_edges(c, slots, i + 1, records + added, snap, done);
            snap.edges.resize(base);
        });
    }
}

void enum_nodes(const Ctx& c, std::size_t i, Snapshot& snap, std::vector<NodeRef>& refs,
                const std::function<void()>& done) {
    if (i == c.node_slots.size()) {
        done();
        return;
    }
    const auto& [id, type] = c.node_slots[i];
    for (std::uint32_t count = 0; count <= c.node_max; ++count) {
        std::vector<std::optional<AttrValue>> row;
        enum_attr_rows(c, count, row, [&] {
            const std::size_t nbase = snap.nodes.size();
            const std::size_t rbase = refs.size();
            for (std::uint32_t m = 1; m <= count; ++m)
                snap.nodes.push_back(NodeRecord{id, type, m, row[m - 1]});
            if (count > 0) refs.push_back(NodeRef{id, type});
            enum_nodes(c, i + 1, snap, refs, done);
            snap.nodes.resize(nbase);
            refs.resize(rbase);
        });
    }
}

void enum_snapshots(const Ctx& c, bool require_nodes,
                    const std::function<void(const Snapshot&)>& fn) {
    Snapshot snap;
    std::vector<NodeRef> refs;
    enum_nodes(c, 0, snap, refs, [&] {
        if (require_nodes && snap.nodes.empty()) return;
        std::vector<EdgeSlot> slots = edge_slots_for(c, refs);
        enum_edges(c, slots, 0, 0, snap, [&] { fn(snap); });
    });
}

void pick_timestamps(std::uint32_t t, std::uint32_t max_t, std::vector<std::int64_t>& acc,
                     const std::function<void()>& done) {
    if (t == max_t) {
        done();
        return;
    }
    pick_timestamps(t + 1, max_t, acc, done);  // t absent
    acc.push_back(t);
    pick_timestamps(t + 1, max_t, acc, done);
    acc.pop_back();
}

}  // namespace

void enumerate_universe(const UniverseSpec& spec,
                        const std::function<void(const GraphValue&)>& fn) {
    Ctx c = make_ctx(spec);
    std::uint64_t emitted = 0;
    auto emit = [&](GraphValue g) {
        if (++emitted > spec.size_cap)
            throw UniverseTooLarge("universe exceeds size_cap = " +
                                   std::to_string(spec.size_cap));
        g.kind = spec.kind;
        fn(sort_records(g));
    };
    if (!spec.kind.dynamic) {
        enum_snapshots(c, false, [&](const Snapshot& s) {
            GraphValue g;
            g.snapshots.push_back(s);
            emit(std::move(g));
        });
        return;
    }
    std::vector<Snapshot> configs;
    enum_snapshots(c, true, [&](const Snapshot& s) {
        if (configs.size() >= spec.size_cap)
            throw UniverseTooLarge("snapshot space exceeds size_cap = " +
                                   std::to_string(spec.size_cap));
        configs.push_back(s);
    });
    emit(GraphValue::empty(spec.kind));  // single empty snapshot at 0
    std::vector<std::int64_t> stamps;
    pick_timestamps(0, spec.max_timestamps, stamps, [&] {
        if (stamps.empty()) return;
        std::vector<std::size_t> choice(stamps.size(), 0);
        while (true) {
            GraphValue g;
            for (std::size_t i = 0; i < stamps.size(); ++i) {
                Snapshot s = configs[choice[i]];
                s.t = stamps[i];
                g.snapshots.push_back(std::move(s));
            }
            emit(std::move(g));
            std::size_t i = 0;
            while (i < choice.size() && ++choice[i] == configs.size()) choice[i++] = 0;
            if (i == choice.size()) break;
        }
    });
}

std::vector<GraphValue> enumerate_all(const UniverseSpec& spec) {
    std::vector<GraphValue> out;
    enumerate_universe(spec, [&](const GraphValue& g) { out.push_back(g); });
    return out;
}

std::uint64_t universe_size(const UniverseSpec& spec) {
    std::uint64_t n = 0;
    enumerate_universe(spec, [&](const GraphValue&) { ++n; });
    return n;
}

namespace {

Snapshot random_snapshot(const Ctx& c, bool require_nodes, std::mt19937_64& rng) {
    const GraphKind& k = c.spec->kind;
    Snapshot snap;
    std::vector<NodeRef> refs;
    auto rand_attr = [&]() -> std::optional<AttrValue> {
        if (!c.attributed) return std::nullopt;
        std::uniform_int_distribution<std::size_t> d(0, c.spec->attr_alphabet.size() - 1);
        return c.spec->attr_alphabet[d(rng)];
    };
    std::uniform_int_distribution<std::uint32_t> ncount(0, c.node_max);
    for (const auto& [id, type] : c.node_slots) {
        std::uint32_t count = ncount(rng);
        for (std::uint32_t m = 1; m <= count; ++m)
            snap.nodes.push_back(NodeRecord{id, type, m, rand_attr()});
        if (count > 0) refs.push_back(NodeRef{id, type});
    }
    if (require_nodes && refs.empty() && !c.node_slots.empty()) {
        std::uniform_int_distribution<std::size_t> d(0, c.node_slots.size() - 1);
        const auto& [id, type] = c.node_slots[d(rng)];
        snap.nodes.push_back(NodeRecord{id, type, 1, rand_attr()});
        refs.push_back(NodeRef{id, type});
    }
    if (refs.empty()) return snap;

    auto rand_type = [&]() {
        std::uniform_int_distribution<std::size_t> d(0, c.edge_types.size() - 1);
        return c.edge_types[d(rng)];
    };
    std::uint32_t budget = c.spec->max_edge_records
                               ? *c.spec->max_edge_records
                               : static_cast<std::uint32_t>(refs.size() * refs.size() + 2);
    std::uniform_int_distribution<std::uint32_t> ecount(1, c.edge_max);
    std::uniform_int_distribution<int> coin(0, 1);
    std::set<std::pair<Endpoints, std::optional<std::string>>> used;
    std::uniform_int_distribution<std::uint32_t> tries(0, budget);
    for (std::uint32_t attempt = tries(rng); attempt > 0; --attempt) {
        Endpoints ends;
        bool mirrored = false;
        if (!k.hyper) {
            std::uniform_int_distribution<std::size_t> d(0, refs.size() - 1);
            NodeRef u = refs[d(rng)], v = refs[d(rng)];
            if (!k.directed && v < u) std::swap(u, v);
            mirrored = !k.directed && !(u == v);
            ends = SimpleEnds{u, v};
        } else {
            std::vector<NodeRef> members;
            for (const NodeRef& r : refs)
                if (coin(rng)) members.push_back(r);
            if (members.empty()) {
                std::uniform_int_distribution<std::size_t> d(0, refs.size() - 1);
                members.push_back(refs[d(rng)]);
            }
            HyperEnds h;
            if (k.directed) {
                std::uniform_int_distribution<std::uint64_t> dl(0, members.size());
                std::vector<std::uint64_t> raw;
                for (std::size_t i = 0; i < members.size(); ++i) raw.push_back(dl(rng));
                // compress the used levels so they satisfy the gap rule
                std::set<std::uint64_t> used_levels(raw.begin(), raw.end());
                std::map<std::uint64_t, std::uint64_t> remap;
                std::uint64_t next = used_levels.count(0) ? 0 : 1;
                for (std::uint64_t l : used_levels) remap[l] = next++;
                for (std::size_t i = 0; i < members.size(); ++i)
                    h.members.emplace_back(members[i], remap[raw[i]]);
            } else {
                for (const NodeRef& r : members) h.members.emplace_back(r, 0);
            }
            ends = std::move(h);
        }
        auto key = std::make_pair(ends, rand_type());
        if (!used.insert(key).second) continue;
        std::uint32_t count = ecount(rng);
        const std::uint32_t per = mirrored ? 2 : 1;
        if (c.spec->max_edge_records &&
            snap.edges.size() + count * per > *c.spec->max_edge_records)
            continue;
        for (std::uint32_t m = 1; m <= count; ++m) {
            auto attr = rand_attr();
            snap.edges.push_back(EdgeRecord{key.first, key.second, m, attr});
            if (mirrored) {
                const SimpleEnds& se = std::get<SimpleEnds>(key.first);
                snap.edges.push_back(EdgeRecord{SimpleEnds{se.v, se.u}, key.second, m, attr});
            }
        }
    }
    return snap;
}

}  // namespace

std::vector<GraphValue> sample_universe(const UniverseSpec& spec, std::uint64_t count,
                                        std::uint64_t seed) {
    Ctx c = make_ctx(spec);
    std::mt19937_64 rng(seed);
    std::vector<GraphValue> out;
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::uint64_t i = 0; i < count; ++i) {
        GraphValue g;
        g.kind = spec.kind;
        if (!spec.kind.dynamic) {
            g.snapshots.push_back(random_snapshot(c, false, rng));
        } else {
            for (std::uint32_t t = 0; t < spec.max_timestamps; ++t) {
                if (!coin(rng)) continue;
                Snapshot s = random_snapshot(c, true, rng);
                if (s.nodes.empty()) continue;  // no nodes available at all
                s.t = t;
                g.snapshots.push_back(std::move(s));
            }
            if (g.snapshots.empty()) g.snapshots.push_back(Snapshot{});
        }
        out.push_back(canonicalize(g));
    }
    return out;
}

namespace {

VerificationReport run_checks(const Embedding& e,
                              const std::vector<GraphValue>* samples,
                              const UniverseSpec& spec) {
    if (!(spec.kind == e.source_kind))
        throw KindMismatch("universe kind '" + format_kind(spec.kind) +
                           "' does not match embedding source '" +
                           format_kind(e.source_kind) + "'");
    VerificationReport r;
    r.embedding = e.name;
    std::vector<std::string> images;
    std::set<std::string> seen_sources;
    auto note = [&](const GraphValue& g, const std::string& what) {
        if (r.examples.size() < 5) r.examples.push_back(what + " on:\n" + serialize(g));
    };
    auto check = [&](const GraphValue& g) {
        if (samples && !seen_sources.insert(serialize(g)).second) return;
        ++r.universe_size;
        GraphValue img;
        try {
            img = e.forward(g);
        } catch (const std::exception& ex) {
            ++r.forward_failures;
            note(g, std::string("forward threw: ") + ex.what());
            return;
        }
        if (!(img.kind == e.target_kind) || !validate(img).empty()) {
            ++r.forward_failures;
            note(g, "forward image is invalid or mis-kinded");
            return;
        }
        images.push_back(serialize(img));
        if (e.invertible()) {
            try {
                GraphValue back = e.inverse(img);
                if (!(back == canonicalize(g))) {
                    ++r.roundtrip_failures;
                    note(g, "inverse(forward(g)) differs from g");
                }
            } catch (const std::exception& ex) {
                ++r.roundtrip_failures;
                note(g, std::string("inverse threw: ") + ex.what());
            }
        }
    };
    if (samples) {
        for (const GraphValue& g : *samples) check(g);
    } else {
        enumerate_universe(spec, check);
    }
    std::sort(images.begin(), images.end());
    for (std::size_t i = 1; i < images.size(); ++i)
        if (images[i] == images[i - 1]) ++r.injectivity_collisions;
    return r;
}

}  // namespace

VerificationReport verify_embedding(const Embedding& e, const UniverseSpec& spec) {
    return run_checks(e, nullptr, spec);
}

VerificationReport fuzz_embedding(const Embedding& e, const UniverseSpec& spec,
                                  std::uint64_t count, std::uint64_t seed) {
    std::vector<GraphValue> samples = sample_universe(spec, count, seed);
    return run_checks(e, &samples, spec);
}

UniverseSpec standard_universe(const GraphKind& kind) {
    UniverseSpec s;
    s.kind = kind;
    s.max_node_ids = 2;
    s.max_multiplicity = (kind.multi_node || kind.multi_edge) ? 2 : 1;
    s.max_timestamps = kind.dynamic ? 2 : 1;
    if (kind.hetero_node) s.node_type_alphabet = {"p", "q"};
    if (kind.hetero_edge) s.edge_type_alphabet = {"r", "s"};
    if (kind.attributed == Attributed::Full)
        s.attr_alphabet = {AttrValue::blank(), AttrValue::sym("a")};
    // positive integers only: the weight-to-multiplicity embedding is defined
    // on positive weights, matching the multiplicity bound above
    if (kind.attributed == Attributed::IntegerOnly)
        s.attr_alphabet = {AttrValue::integer(1), AttrValue::integer(2)};
    // keeps the exhaustive edge space tractable on every axis combination
    s.max_edge_records = 4;
    return s;
}

}  // namespace graphex
