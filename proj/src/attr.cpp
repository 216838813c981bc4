#include "graphex/attr.hpp"

#include <cassert>
#include <cctype>
#include <utility>

#include "graphex/errors.hpp"

namespace graphex {

AttrValue AttrValue::blank() { return AttrValue(); }

AttrValue AttrValue::integer(std::uint64_t value) {
    AttrValue v;
    v.kind_ = Kind::Int;
    v.int_ = value;
    return v;
}

AttrValue AttrValue::sym(std::string symbol) {
    AttrValue v;
    v.kind_ = Kind::Sym;
    v.sym_ = std::move(symbol);
    return v;
}

AttrValue AttrValue::pair(AttrValue first, AttrValue second) {
    AttrValue v;
    v.kind_ = Kind::Pair;
    v.kids_.reserve(2);
    v.kids_.push_back(std::move(first));
    v.kids_.push_back(std::move(second));
    return v;
}

AttrValue AttrValue::seq(std::vector<AttrValue> items) {
    AttrValue v;
    v.kind_ = Kind::Seq;
    v.kids_ = std::move(items);
    return v;
}

std::uint64_t AttrValue::int_value() const {
    assert(kind_ == Kind::Int);
    return int_;
}

const std::string& AttrValue::symbol() const {
    assert(kind_ == Kind::Sym);
    return sym_;
}

const AttrValue& AttrValue::first() const {
    assert(kind_ == Kind::Pair);
    return kids_[0];
}

const AttrValue& AttrValue::second() const {
    assert(kind_ == Kind::Pair);
    return kids_[1];
}

const std::vector<AttrValue>& AttrValue::items() const {
    assert(kind_ == Kind::Seq);
    return kids_;
}

std::strong_ordering AttrValue::compare(const AttrValue& other) const {
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(other.kind_); c != 0) return c;
    switch (kind_) {
        case Kind::Blank:
            return std::strong_ordering::equal;
        case Kind::Int:
            return int_ <=> other.int_;
        case Kind::Sym:
            return sym_ <=> other.sym_;
        case Kind::Pair:
        case Kind::Seq: {
            const std::size_t n = std::min(kids_.size(), other.kids_.size());
            for (std::size_t i = 0; i < n; ++i) {
                if (auto c = kids_[i].compare(other.kids_[i]); c != 0) return c;
            }
            return kids_.size() <=> other.kids_.size();
        }
    }
    return std::strong_ordering::equal;
}

std::string quote_symbol(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string AttrValue::to_string() const {
    switch (kind_) {
        case Kind::Blank:
            return "~";
        case Kind::Int:
            return std::to_string(int_);
        case Kind::Sym:
            return quote_symbol(sym_);
        case Kind::Pair:
            return "(" + kids_[0].to_string() + ", " + kids_[1].to_string() + ")";
        case Kind::Seq: {
            std::string out = "[";
            for (std::size_t i = 0; i < kids_.size(); ++i) {
                if (i > 0) out += ", ";
                out += kids_[i].to_string();
            }
            out += "]";
            return out;
        }
    }
    return "~";
}

namespace {

struct AttrParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("attribute value: " + msg + " at offset " + std::to_string(pos));
    }

    char peek() {
        if (pos >= text.size()) fail("unexpected end of input");
        return text[pos];
    }

    void expect(char c) {
        if (pos >= text.size() || text[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    AttrValue value() {
        skip_ws();
        char c = peek();
        if (c == '~') {
            ++pos;
            return AttrValue::blank();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                ++pos;
            }
            return AttrValue::integer(v);
        }
        if (c == '"') {
            ++pos;
            std::string s;
            while (true) {
                if (pos >= text.size()) fail("unterminated symbol");
                char d = text[pos++];
                if (d == '"') break;
                if (d == '\\') {
                    if (pos >= text.size()) fail("dangling escape");
                    s.push_back(text[pos++]);
                } else {
                    s.push_back(d);
                }
            }
            return AttrValue::sym(std::move(s));
        }
        if (c == '(') {
            ++pos;
            AttrValue a = value();
            skip_ws();
            expect(',');
            AttrValue b = value();
            skip_ws();
            expect(')');
            return AttrValue::pair(std::move(a), std::move(b));
        }
        if (c == '[') {
            ++pos;
            std::vector<AttrValue> items;
            skip_ws();
            if (peek() == ']') {
                ++pos;
                return AttrValue::seq({});
            }
            while (true) {
                items.push_back(value());
                skip_ws();
                char d = peek();
                if (d == ']') {
                    ++pos;
                    break;
                }
                expect(',');
            }
            return AttrValue::seq(std::move(items));
        }
        fail("unexpected character");
    }
};

}  // namespace

AttrValue AttrValue::parse(std::string_view text) {
    AttrParser p{text};
    AttrValue v = p.value();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return v;
}

AttrValue AttrValue::parse_prefix(std::string_view text, std::size_t& pos) {
    AttrParser p{text, pos};
    AttrValue v = p.value();
    pos = p.pos;
    return v;
}

std::optional<AttrValue> AttrValue::try_parse(std::string_view text) {
    try {
        return parse(text);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

}  // namespace graphex
