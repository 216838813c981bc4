#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace graphex {

enum class Attributed : std::uint8_t { None = 0, IntegerOnly = 1, Full = 2 };

// Kind descriptor: which structural predicates a graph value may use.
// Flags are permissions; kind_of() computes the minimal kind a value needs.
struct GraphKind {
    bool directed = false;
    bool hyper = false;
    bool multi_node = false;
    bool multi_edge = false;
    bool hetero_node = false;
    bool hetero_edge = false;
    Attributed attributed = Attributed::None;
    bool dynamic = false;

    bool operator==(const GraphKind&) const = default;

    bool multi() const { return multi_node && multi_edge; }
    bool hetero() const { return hetero_node && hetero_edge; }
};

inline constexpr int kKindCount = 384;  // 2^6 boolean flags x 3 attribute levels

int kind_index(const GraphKind& k);
GraphKind kind_from_index(int index);

// k1 is a subkind of k2 when every graph valid under k1 is valid under k2
// after re-kinding. Representation-changing flags (hyper) and totality
// constraints (hetero node/edge types) require equality; the remaining
// flags order by implication, and IntegerOnly attributes widen to Full.
bool subkind(const GraphKind& k1, const GraphKind& k2);

// Canonical comma-separated flag list, e.g. "directed,attributed,dynamic";
// the empty kind renders as "simple".
std::string format_kind(const GraphKind& k);

// Accepts ',' or '+' separated property tokens. Throws ParseError on an
// unknown token.
GraphKind parse_kind(std::string_view spec);

}  // namespace graphex
