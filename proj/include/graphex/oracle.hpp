#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphex/embedding.hpp"
#include "graphex/graph.hpp"

namespace graphex {

// A finite, exactly enumerable space of graphs of one kind. Alphabets apply
// only when the kind uses the corresponding axis; node ids run 1..max_node_ids.
struct UniverseSpec {
    GraphKind kind;
    std::uint64_t max_node_ids = 1;
    std::vector<AttrValue> attr_alphabet;        // Full: any values; IntegerOnly: integers
    std::uint32_t max_multiplicity = 1;          // occurrence indices 1..m
    std::uint32_t max_timestamps = 1;            // dynamic timestamps 0..t-1
    std::vector<std::string> node_type_alphabet;
    std::vector<std::string> edge_type_alphabet;
    std::optional<std::uint32_t> max_edge_records;  // per snapshot, mirrors included
    std::uint64_t size_cap = 10'000'000;
};

// Streams every graph of the universe, in a deterministic order, each in
// canonical form. Throws UniverseTooLarge when the universe exceeds
// size_cap graphs, and Error on inconsistent spec parameters.
void enumerate_universe(const UniverseSpec& spec,
                        const std::function<void(const GraphValue&)>& fn);

std::vector<GraphValue> enumerate_all(const UniverseSpec& spec);

std::uint64_t universe_size(const UniverseSpec& spec);

// Seed-deterministic random members of the universe (not exhaustive and
// possibly repeating; intended for kinds whose full universe is too large).
std::vector<GraphValue> sample_universe(const UniverseSpec& spec, std::uint64_t count,
                                        std::uint64_t seed);

struct VerificationReport {
    std::string embedding;
    std::uint64_t universe_size = 0;
    std::uint64_t forward_failures = 0;      // exceptions, invalid or mis-kinded images
    std::uint64_t roundtrip_failures = 0;    // inverse(forward(g)) != g
    std::uint64_t injectivity_collisions = 0;  // pairs of sources sharing an image
    std::vector<std::string> examples;       // first few offending sources, serialized

    bool ok() const {
        return forward_failures == 0 && roundtrip_failures == 0 &&
               injectivity_collisions == 0;
    }
};

// Brute-force check of an embedding over a whole universe: the forward map
// must send every member to a valid graph of the target kind, be injective,
// and (when an inverse exists) round-trip exactly. The spec's kind must
// match the embedding's source kind.
VerificationReport verify_embedding(const Embedding& e, const UniverseSpec& spec);

// Same checks on seed-deterministic samples instead of the full universe.
VerificationReport fuzz_embedding(const Embedding& e, const UniverseSpec& spec,
                                  std::uint64_t count, std::uint64_t seed);

// Small default universe for a kind, tuned so exhaustive verification stays
// in the ~1e5 range on every axis combination.
UniverseSpec standard_universe(const GraphKind& kind);

}  // namespace graphex
