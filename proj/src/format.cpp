#include "groewalk/format.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "groewalk/errors.hpp"

namespace groewalk {

namespace {

std::string term_body(const Exponents& e, const Rational& coeff, const VariableContext& ctx) {
    std::string out;
    Rational mag = abs(coeff);
    bool all_zero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || all_zero) out += to_string(mag);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string join_terms(const std::vector<std::pair<Exponents, Rational>>& terms,
                       const VariableContext& ctx) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_body(e, c, ctx);
    }
    return out;
}

// Total degree, then declaration-order lex; order-independent and total.
bool fixed_greater(const Exponents& a, const Exponents& b) {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

std::string to_canonical_string(const Polynomial& f, const MonomialOrder& order) {
    return join_terms(terms_descending(f, order), *f.context());
}

std::string to_fixed_string(const Polynomial& f) {
    std::vector<std::pair<Exponents, Rational>> terms(f.terms().begin(), f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return fixed_greater(a.first, b.first); });
    return join_terms(terms, *f.context());
}

std::string fingerprint(std::span<const Polynomial> polys) {
    std::vector<std::string> parts;
    parts.reserve(polys.size());
    for (const auto& p : polys) parts.push_back(to_fixed_string(p));
    std::sort(parts.begin(), parts.end());
    std::string out = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i];
    }
    out += "}";
    return out;
}

std::vector<std::string> canonical_strings(std::span<const Polynomial> polys,
                                           const MonomialOrder& order) {
    std::vector<const Polynomial*> sorted;
    sorted.reserve(polys.size());
    for (const auto& p : polys) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [&](const Polynomial* a, const Polynomial* b) {
        return order.compare(leading_exponent(*a, order), leading_exponent(*b, order)) < 0;
    });
    std::vector<std::string> out;
    out.reserve(sorted.size());
    for (const Polynomial* p : sorted) out.push_back(to_canonical_string(*p, order));
    return out;
}

std::string order_spec_string(const MonomialOrder& order, const VariableContext& ctx) {
    std::string out = "rows=[";
    for (std::size_t r = 0; r < order.rows().size(); ++r) {
        if (r) out += ",";
        out += "[";
        const auto& row = order.rows()[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += to_string(row[i]);
        }
        out += "]";
    }
    out += "];tiebreak=";
    for (std::size_t i = 0; i < order.tiebreak().size(); ++i) {
        if (i) out += ">";
        out += ctx.name(order.tiebreak()[i]);
    }
    return out;
}

namespace {

struct SpecCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in order spec", 1,
                             static_cast<int>(pos) + 1);
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::string token(auto pred) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && pred(text[pos])) ++pos;
        return std::string(text.substr(start, pos - start));
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

}  // namespace

MonomialOrder parse_order_spec(std::string_view spec, const VariableContext& ctx) {
    SpecCursor cur{spec};
    if (!cur.eat_word("rows"))
        throw ParseError("order spec must start with rows=", 1, static_cast<int>(cur.pos) + 1);
    cur.expect('=');
    cur.expect('[');
    std::vector<WeightVector> rows;
    if (!cur.eat(']')) {
        do {
            cur.expect('[');
            std::vector<Rational> row;
            do {
                std::string tok = cur.token([](char c) {
                    return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-';
                });
                if (tok.empty())
                    throw ParseError("expected rational in order row", 1,
                                     static_cast<int>(cur.pos) + 1);
                Rational r;
                try {
                    r = parse_rational(tok);
                } catch (const DomainError& e) {
                    throw ParseError(e.what(), 1, static_cast<int>(cur.pos) + 1);
                }
                row.push_back(r);
            } while (cur.eat(','));
            cur.expect(']');
            if (row.size() != ctx.size())
                throw ParseError("order row has wrong length", 1, static_cast<int>(cur.pos) + 1);
            try {
                rows.emplace_back(std::move(row));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), 1, static_cast<int>(cur.pos) + 1);
            }
        } while (cur.eat(','));
        cur.expect(']');
    }
    std::vector<std::size_t> perm;
    if (cur.eat(';')) {
        if (!cur.eat_word("tiebreak"))
            throw ParseError("expected tiebreak= after ';'", 1, static_cast<int>(cur.pos) + 1);
        cur.expect('=');
        do {
            std::string name = cur.token([](char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            });
            if (name.empty())
                throw ParseError("expected variable name in tiebreak", 1,
                                 static_cast<int>(cur.pos) + 1);
            auto idx = ctx.index_of(name);
            if (!idx)
                throw ParseError("unknown variable in tiebreak: " + name, 1,
                                 static_cast<int>(cur.pos) + 1);
            perm.push_back(*idx);
        } while (cur.eat('>'));
        if (perm.size() != ctx.size())
            throw ParseError("tiebreak must list every variable", 1,
                             static_cast<int>(cur.pos) + 1);
    } else {
        perm.resize(ctx.size());
        std::iota(perm.begin(), perm.end(), 0);
    }
    if (!cur.done())
        throw ParseError("trailing characters in order spec", 1, static_cast<int>(cur.pos) + 1);
    try {
        return MonomialOrder(std::move(rows), std::move(perm));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

std::string weight_vector_string(const WeightVector& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ", ";
        out += to_string(w[i]);
    }
    out += ")";
    return out;
}

}  // namespace groewalk
