#include "groewalk/parser.hpp"

#include <cctype>

#include "groewalk/errors.hpp"
#include "groewalk/format.hpp"
#include "groewalk/order.hpp"

namespace groewalk {

namespace {

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;
    int line = 1;

    int col() const { return static_cast<int>(pos) + 1; }
    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) throw ParseError("expected " + what, line, col());
    }
    std::string name() {
        skip_ws();
        if (pos >= s.size() || !name_start(s[pos]))
            throw ParseError("expected an identifier", line, col());
        std::size_t start = pos;
        while (pos < s.size() && name_char(s[pos])) ++pos;
        return std::string(s.substr(start, pos - start));
    }
    std::string digits() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number", line, col());
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::string(s.substr(start, pos - start));
    }
    // Unsigned rational literal: digits or digits/digits.
    Rational rational_literal() {
        std::string num = digits();
        if (eat('/')) {
            int c = col();
            std::string den = digits();
            try {
                return parse_rational(num + "/" + den);
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line, c);
            }
        }
        return parse_rational(num);
    }
    int exponent_literal() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-')
            throw ParseError("negative exponent", line, col());
        int c = col();
        std::string d = digits();
        try {
            std::size_t used = 0;
            int value = std::stoi(d, &used);
            if (used != d.size()) throw std::invalid_argument(d);
            return value;
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", line, c);
        }
    }
};

Polynomial parse_term(Cursor& cur, const ContextPtr& ctx) {
    Polynomial prod = Polynomial::constant(ctx, Rational(1));
    for (;;) {
        char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            prod = scale(prod, cur.rational_literal());
        } else if (name_start(c)) {
            int col = cur.col();
            std::string var = cur.name();
            auto idx = ctx->index_of(var);
            if (!idx) throw ParseError("unknown variable: " + var, cur.line, col);
            int e = 1;
            if (cur.eat('^')) e = cur.exponent_literal();
            Exponents exps(ctx->size(), 0);
            exps[*idx] = e;
            prod = prod * Polynomial::monomial(ctx, exps, Rational(1));
        } else {
            throw ParseError("expected a coefficient or variable", cur.line, cur.col());
        }
        if (!cur.eat('*')) break;
    }
    return prod;
}

Polynomial parse_expression(Cursor& cur, const ContextPtr& ctx) {
    Polynomial acc = Polynomial::zero(ctx);
    int sign = 1;
    if (cur.eat('-'))
        sign = -1;
    else
        cur.eat('+');
    for (;;) {
        Polynomial term = parse_term(cur, ctx);
        acc = sign < 0 ? acc - term : acc + term;
        if (cur.eat('+')) {
            sign = 1;
        } else if (cur.eat('-')) {
            sign = -1;
        } else {
            break;
        }
    }
    if (!cur.done()) throw ParseError("unexpected trailing input", cur.line, cur.col());
    return acc;
}

}  // namespace

const Polynomial* ProblemFile::generator(std::string_view id) const {
    for (const auto& [name, poly] : generators)
        if (name == id) return &poly;
    return nullptr;
}

const WeightVector* ProblemFile::weight(std::string_view id) const {
    auto it = weights.find(std::string(id));
    return it == weights.end() ? nullptr : &it->second;
}

std::vector<Polynomial> ProblemFile::generator_polys() const {
    std::vector<Polynomial> out;
    out.reserve(generators.size());
    for (const auto& [name, poly] : generators) out.push_back(poly);
    return out;
}

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, int line) {
    Cursor cur{text, 0, line};
    if (cur.done()) throw ParseError("empty polynomial", line, cur.col());
    return parse_expression(cur, ctx);
}

ProblemFile parse_problem(std::string_view text) {
    ProblemFile out;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw =
            text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        std::string_view body = raw.substr(0, raw.find('#'));
        Cursor cur{body, 0, line_no};
        if (cur.done()) continue;

        if (!out.context) {
            int col = cur.col();
            std::string kw = cur.name();
            if (kw != "ring")
                throw ParseError("the ring declaration must come first", line_no, col);
            std::vector<std::string> x_vars, u_vars;
            while (!cur.done() && cur.peek() != ';') x_vars.push_back(cur.name());
            if (cur.eat(';')) {
                int kcol = cur.col();
                if (cur.name() != "eliminate")
                    throw ParseError("expected 'eliminate' after ';'", line_no, kcol);
                while (!cur.done()) u_vars.push_back(cur.name());
                if (u_vars.empty())
                    throw ParseError("eliminate clause lists no variables", line_no, cur.col());
            }
            try {
                out.context = make_context(std::move(x_vars), std::move(u_vars));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no, col);
            }
            continue;
        }

        int col = cur.col();
        std::string id = cur.name();
        if (id == "weight") {
            int wcol = cur.col();
            std::string wname = cur.name();
            if (out.weights.count(wname))
                throw ParseError("duplicate weight definition: " + wname, line_no, wcol);
            cur.expect('=', "'=' after weight name");
            cur.expect('(', "'('");
            std::vector<Rational> entries;
            do {
                entries.push_back(cur.rational_literal());
            } while (cur.eat(','));
            cur.expect(')', "')'");
            if (!cur.done())
                throw ParseError("unexpected trailing input", line_no, cur.col());
            if (entries.size() != out.context->size())
                throw ParseError("weight vector has wrong length", line_no, col);
            out.weights.emplace(std::move(wname), WeightVector(std::move(entries)));
            continue;
        }
        if (out.generator(id))
            throw ParseError("duplicate generator definition: " + id, line_no, col);
        cur.expect('=', "'=' after generator name");
        Polynomial p = parse_expression(cur, out.context);
        out.generators.emplace_back(std::move(id), std::move(p));
    }
    if (!out.context) throw ParseError("missing ring declaration", line_no, 1);
    if (out.generators.empty()) throw ParseError("empty generator list", line_no, 1);
    return out;
}

std::string serialize_problem(const ProblemFile& problem) {
    const VariableContext& ctx = *problem.context;
    std::string out = "ring";
    for (std::size_t i = 0; i < ctx.x_count(); ++i) out += " " + ctx.name(i);
    if (ctx.u_count() > 0) {
        out += " ; eliminate";
        for (std::size_t i = ctx.x_count(); i < ctx.size(); ++i) out += " " + ctx.name(i);
    }
    out += "\n";
    MonomialOrder lex = make_lex(ctx);
    for (const auto& [id, poly] : problem.generators)
        out += id + " = " + to_canonical_string(poly, lex) + "\n";
    for (const auto& [id, w] : problem.weights) {
        out += "weight " + id + " = " + weight_vector_string(w) + "\n";
    }
    return out;
}

}  // namespace groewalk
