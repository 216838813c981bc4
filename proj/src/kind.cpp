#include "graphex/kind.hpp"

#include <vector>

#include "graphex/errors.hpp"

namespace graphex {

int kind_index(const GraphKind& k) {
    int i = 0;
    i = i * 2 + (k.directed ? 1 : 0);
    i = i * 2 + (k.hyper ? 1 : 0);
    i = i * 2 + (k.multi_node ? 1 : 0);
    i = i * 2 + (k.multi_edge ? 1 : 0);
    i = i * 2 + (k.hetero_node ? 1 : 0);
    i = i * 2 + (k.hetero_edge ? 1 : 0);
    i = i * 3 + static_cast<int>(k.attributed);
    i = i * 2 + (k.dynamic ? 1 : 0);
    return i;
}

GraphKind kind_from_index(int index) {
    GraphKind k;
    k.dynamic = index % 2;
    index /= 2;
    k.attributed = static_cast<Attributed>(index % 3);
    index /= 3;
    k.hetero_edge = index % 2;
    index /= 2;
    k.hetero_node = index % 2;
    index /= 2;
    k.multi_edge = index % 2;
    index /= 2;
    k.multi_node = index % 2;
    index /= 2;
    k.hyper = index % 2;
    index /= 2;
    k.directed = index % 2;
    return k;
}

bool subkind(const GraphKind& k1, const GraphKind& k2) {
    if (k1.hyper != k2.hyper) return false;
    if (k1.hetero_node != k2.hetero_node) return false;
    if (k1.hetero_edge != k2.hetero_edge) return false;
    if (k1.directed && !k2.directed) return false;
    if (k1.multi_node && !k2.multi_node) return false;
    if (k1.multi_edge && !k2.multi_edge) return false;
    if (k1.dynamic && !k2.dynamic) return false;
    switch (k1.attributed) {
        case Attributed::None:
            if (k2.attributed != Attributed::None) return false;
            break;
        case Attributed::IntegerOnly:
            if (k2.attributed == Attributed::None) return false;
            break;
        case Attributed::Full:
            if (k2.attributed != Attributed::Full) return false;
            break;
    }
    return true;
}

std::string format_kind(const GraphKind& k) {
    std::vector<std::string> parts;
    if (k.hyper) parts.push_back("hyper");
    if (k.directed) parts.push_back("directed");
    if (k.multi_node && k.multi_edge) {
        parts.push_back("multi");
    } else {
        if (k.multi_node) parts.push_back("multinode");
        if (k.multi_edge) parts.push_back("multiedge");
    }
    if (k.hetero_node && k.hetero_edge) {
        parts.push_back("heterogeneous");
    } else {
        if (k.hetero_node) parts.push_back("heteronode");
        if (k.hetero_edge) parts.push_back("heteroedge");
    }
    if (k.attributed == Attributed::IntegerOnly) parts.push_back("intattributed");
    if (k.attributed == Attributed::Full) parts.push_back("attributed");
    if (k.dynamic) parts.push_back("dynamic");
    if (parts.empty()) return "simple";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += parts[i];
    }
    return out;
}

GraphKind parse_kind(std::string_view spec) {
    GraphKind k;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find_first_of(",+", start);
        if (end == std::string_view::npos) end = spec.size();
        std::string_view tok = spec.substr(start, end - start);
        if (tok == "directed") {
            k.directed = true;
        } else if (tok == "hyper") {
            k.hyper = true;
        } else if (tok == "multi") {
            k.multi_node = k.multi_edge = true;
        } else if (tok == "multinode" || tok == "multi_node") {
            k.multi_node = true;
        } else if (tok == "multiedge" || tok == "multi_edge") {
            k.multi_edge = true;
        } else if (tok == "heterogeneous" || tok == "hetero") {
            k.hetero_node = k.hetero_edge = true;
        } else if (tok == "heteronode" || tok == "hetero_node") {
            k.hetero_node = true;
        } else if (tok == "heteroedge" || tok == "hetero_edge") {
            k.hetero_edge = true;
        } else if (tok == "attributed") {
            k.attributed = Attributed::Full;
        } else if (tok == "intattributed" || tok == "int_attributed") {
            k.attributed = Attributed::IntegerOnly;
        } else if (tok == "dynamic") {
            k.dynamic = true;
        } else if (tok == "simple" || tok == "unattributed" || tok == "undirected" ||
                   tok == "static" || tok.empty()) {
            // no-op tokens naming the default state of an axis
        } else {
            throw ParseError("unknown kind flag: '" + std::string(tok) + "'");
        }
        if (end == spec.size()) break;
        start = end + 1;
    }
    return k;
}

}  // namespace graphex
