#include "skewcc/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skewcc {

namespace {

// Both element strings and generator strings share one grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := INT | 'w' ['^' INT] | 'x' ['^' INT] | '(' expr ')'
// A value is a polynomial in x whose coefficients are field elements; the
// element parser additionally rejects any appearance of x.  Integer literals
// in coefficient position must lie in [0, p); exponents are unrestricted.
struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    FieldSpecPtr spec;

    using Value = std::vector<FieldElement>;  // coeffs in x, constant first

    explicit Parser(const std::string& t, FieldSpecPtr s) : text(t), spec(std::move(s)) {}

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

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream os;
        os << "parse error at position " << pos << " in \"" << text << "\": " << what;
        throw std::invalid_argument(os.str());
    }

    Value zero() const { return {}; }
    Value constant(const FieldElement& e) const {
        if (e.is_zero()) return {};
        return {e};
    }

    static Value trim(Value v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        return v;
    }

    Value add(const Value& a, const Value& b) const {
        Value out = a;
        if (out.size() < b.size()) out.resize(b.size(), spec->zero());
        for (std::size_t i = 0; i < b.size(); ++i) out[i] = out[i] + b[i];
        return trim(std::move(out));
    }

    Value negate(const Value& a) const {
        Value out = a;
        for (auto& c : out) c = -c;
        return out;
    }

    // Values come from parsed text, where coefficients commute notationally;
    // this is plain polynomial multiplication, not the skew product.
    Value mul(const Value& a, const Value& b) const {
        if (a.empty() || b.empty()) return {};
        Value out(a.size() + b.size() - 1, spec->zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
        return trim(std::move(out));
    }

    long long parse_int() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected integer");
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    int parse_exponent() {
        if (eat('^')) return static_cast<int>(parse_int());
        return 1;
    }

    Value parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = parse_int();
            if (v >= spec->p()) fail("coefficient out of range for characteristic");
            return constant(spec->from_scalar(v));
        }
        if (c == 'w') {
            ++pos;
            const int e = parse_exponent();
            FieldElement g = spec->generator();
            return constant(g.pow(static_cast<unsigned long long>(e)));
        }
        if (c == 'x') {
            ++pos;
            const int e = parse_exponent();
            Value out(static_cast<std::size_t>(e) + 1, spec->zero());
            out[e] = spec->one();
            return trim(std::move(out));
        }
        if (c == '(') {
            ++pos;
            Value inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected character");
    }

    bool at_factor_start() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'x' || c == '(';
    }

    Value parse_term() {
        Value v = parse_factor();
        for (;;) {
            if (eat('*')) {
                v = mul(v, parse_factor());
            } else if (at_factor_start()) {
                v = mul(v, parse_factor());
            } else {
                return v;
            }
        }
    }

    Value parse_expr() {
        bool neg = eat('-');
        Value v = parse_term();
        if (neg) v = negate(v);
        for (;;) {
            if (eat('+')) {
                v = add(v, parse_term());
            } else if (eat('-')) {
                v = add(v, negate(parse_term()));
            } else {
                return v;
            }
        }
    }

    Value run() {
        skip_ws();
        if (pos >= text.size()) fail("empty input");
        Value v = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("trailing characters");
        return v;
    }
};

std::string coeff_string(const FieldElement& e, int* term_count) {
    const auto c = e.coeffs();
    const int m = e.spec()->m();
    std::ostringstream os;
    int terms = 0;
    for (int k = m - 1; k >= 0; --k) {
        if (c[k] == 0) continue;
        if (terms > 0) os << "+";
        if (k == 0) {
            os << c[k];
        } else {
            if (c[k] != 1) os << c[k];
            os << "w";
            if (k > 1) os << "^" << k;
        }
        ++terms;
    }
    if (term_count) *term_count = terms;
    return os.str();
}

}  // namespace

FieldElement parse_element(const std::string& text, const FieldSpecPtr& spec) {
    Parser p(text, spec);
    auto v = p.run();
    if (v.size() > 1) throw std::invalid_argument("element string must not involve x: \"" + text + "\"");
    return v.empty() ? spec->zero() : v[0];
}

std::vector<FieldElement> parse_poly(const std::string& text, const FieldSpecPtr& spec) {
    Parser p(text, spec);
    return p.run();
}

std::string format_element(const FieldElement& e) {
    if (e.is_zero()) return "0";
    int terms = 0;
    return coeff_string(e, &terms);
}

std::string format_poly(const std::vector<FieldElement>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const FieldElement& c = coeffs[k];
        if (c.is_zero()) continue;
        if (!first) os << "+";
        first = false;
        int terms = 0;
        const std::string cs = coeff_string(c, &terms);
        if (k == 0) {
            os << cs;
            continue;
        }
        if (!c.is_one()) {
            if (terms > 1)
                os << "(" << cs << ")";
            else
                os << cs;
        }
        os << "x";
        if (k > 1) os << "^" << k;
    }
    return first ? "0" : os.str();
}

}  // namespace skewcc
