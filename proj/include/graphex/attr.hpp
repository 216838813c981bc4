#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphex {

// Recursive attribute values: the blank symbol, a non-negative integer,
// a symbol from a finite alphabet, an ordered pair, or an ordered sequence.
class AttrValue {
public:
    enum class Kind { Blank, Int, Sym, Pair, Seq };

    AttrValue() : kind_(Kind::Blank) {}

    static AttrValue blank();
    static AttrValue integer(std::uint64_t value);
    static AttrValue sym(std::string symbol);
    static AttrValue pair(AttrValue first, AttrValue second);
    static AttrValue seq(std::vector<AttrValue> items);

    Kind kind() const { return kind_; }
    bool is_blank() const { return kind_ == Kind::Blank; }
    bool is_int() const { return kind_ == Kind::Int; }
    bool is_sym() const { return kind_ == Kind::Sym; }
    bool is_pair() const { return kind_ == Kind::Pair; }
    bool is_seq() const { return kind_ == Kind::Seq; }

    std::uint64_t int_value() const;
    const std::string& symbol() const;
    const AttrValue& first() const;
    const AttrValue& second() const;
    const std::vector<AttrValue>& items() const;

    std::strong_ordering compare(const AttrValue& other) const;
    bool operator==(const AttrValue& other) const {
        return compare(other) == std::strong_ordering::equal;
    }
    std::strong_ordering operator<=>(const AttrValue& other) const {
        return compare(other);
    }

    // Unambiguous escape-coded grammar: ~  |  42  |  "sym"  |  (a, b)  |  [a, b].
    std::string to_string() const;
    static AttrValue parse(std::string_view text);  // throws ParseError
    static std::optional<AttrValue> try_parse(std::string_view text);
    // Parses one value starting at pos and advances pos past it.
    static AttrValue parse_prefix(std::string_view text, std::size_t& pos);

private:
    Kind kind_;
    std::uint64_t int_ = 0;
    std::string sym_;
    std::vector<AttrValue> kids_;
};

// Symbol rendering shared by the attribute grammar and the document format.
std::string quote_symbol(std::string_view s);

}  // namespace graphex
