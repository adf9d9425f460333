#include "ringdim/parser.hpp"

#include "ringdim/errors.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace ringdim {

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& src, int line0) : src_(src), line_(line0) {}

    Token next() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'))
            advance();
        if (pos_ >= src_.size())
            return make(Token::End, "");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            int line = line_, col = col_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                advance();
            }
            return Token{Token::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            int line = line_, col = col_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                advance();
            }
            return Token{Token::Ident, id, line, col};
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '^': k = Token::Caret; break;
        case '/': k = Token::Slash; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case '\n': {
            Token t = make(Token::End, "\\n"); // polynomials are single-line
            advance();
            return t;
        }
        default:
            throw input_error(where() + "unexpected character '" + std::string(1, c) + "'");
        }
        Token t = make(k, std::string(1, c));
        advance();
        return t;
    }

private:
    Token make(Token::Kind k, const std::string& text) const { return Token{k, text, line_, col_}; }
    std::string where() const {
        return "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": ";
    }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

class PolyParser {
public:
    PolyParser(const std::string& text, const VariableSet& vars, const CoefficientDomain& domain,
               int line0)
        : lexer_(text, line0), vars_(vars), domain_(domain) {
        shift();
    }

    Polynomial parse() {
        Polynomial p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw input_error("line " + std::to_string(t.line) + ", col " + std::to_string(t.col) +
                          ": " + msg);
    }

    void shift() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k)
            fail(cur_, "expected " + what +
                           (cur_.kind == Token::End ? "" : ", found '" + cur_.text + "'"));
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            shift();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        if (cur_.kind == Token::Minus) {
            shift();
            return term().negated();
        }
        return product();
    }

    Polynomial product() {
        Polynomial acc = factor();
        while (cur_.kind == Token::Star) {
            shift();
            acc = acc * factor();
        }
        if (cur_.kind == Token::Ident || cur_.kind == Token::Number || cur_.kind == Token::LParen)
            fail(cur_, "missing '*' before '" + cur_.text + "'");
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (cur_.kind != Token::Caret)
            return base;
        Token caret = cur_;
        shift();
        if (cur_.kind == Token::Minus)
            fail(cur_, "malformed exponent: negative");
        if (cur_.kind != Token::Number)
            fail(caret, "malformed exponent: expected a nonnegative integer");
        unsigned long e;
        try {
            e = std::stoul(cur_.text);
        } catch (const std::exception&) {
            fail(cur_, "exponent out of range");
        }
        shift();
        if (cur_.kind == Token::Caret)
            fail(cur_, "chained '^' needs parentheses");
        Polynomial acc = Polynomial::constant(base.domain(), base.nvars(), domain_.one());
        for (unsigned long i = 0; i < e; ++i)
            acc = acc * base;
        return acc;
    }

    Polynomial atom() {
        switch (cur_.kind) {
        case Token::Number: {
            mpz_class num(cur_.text);
            shift();
            if (cur_.kind == Token::Slash) {
                shift();
                expect(Token::Number, "a denominator");
                mpz_class den(cur_.text);
                shift();
                return Polynomial::constant(domain_, vars_.size(), domain_.from_rational(num, den));
            }
            return Polynomial::constant(domain_, vars_.size(), domain_.from_integer(num));
        }
        case Token::Ident: {
            auto idx = vars_.index_of(cur_.text);
            if (!idx)
                fail(cur_, "unknown variable '" + cur_.text + "'");
            std::vector<int> exps(static_cast<std::size_t>(vars_.size()), 0);
            exps[static_cast<std::size_t>(*idx)] = 1;
            shift();
            return Polynomial::from_term(domain_, Term{domain_.one(), Monomial(std::move(exps))});
        }
        case Token::LParen: {
            shift();
            Polynomial inner = expr();
            expect(Token::RParen, "')'");
            shift();
            return inner;
        }
        default:
            fail(cur_, cur_.kind == Token::End ? "unexpected end of input"
                                               : "unexpected '" + cur_.text + "'");
        }
    }

    Lexer lexer_;
    Token cur_{Token::End, "", 0, 0};
    const VariableSet& vars_;
    const CoefficientDomain& domain_;
};

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

CoefficientDomain parse_domain(const std::string& text) {
    std::string t = trimmed(text);
    if (t == "ZZ")
        return CoefficientDomain::integers();
    if (t == "QQ")
        return CoefficientDomain::rationals();
    if (t.rfind("Fp:", 0) == 0) {
        std::string ps = trimmed(t.substr(3));
        if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
            throw input_error("malformed prime field modulus '" + ps + "'");
        return CoefficientDomain::prime_field(mpz_class(ps));
    }
    throw input_error("unknown ring '" + t + "' (expected ZZ, QQ or Fp:<p>)");
}

Polynomial parse_polynomial(const std::string& text, const VariableSet& vars,
                            const CoefficientDomain& domain) {
    return PolyParser(text, vars, domain, 1).parse();
}

ProblemSpec parse_problem(const std::string& contents) {
    std::vector<std::string> lines = split(contents, '\n');

    std::map<std::string, std::string> headers;
    std::vector<std::pair<std::string, int>> generator_lines; // text, 1-based line
    std::optional<int> ideal_line;
    bool in_bracket = false;
    std::string bracket_text;
    int bracket_start = 0;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int lineno = static_cast<int>(li) + 1;
        std::string line = trimmed(strip_comment(lines[li]));
        if (line.empty())
            continue;
        if (in_bracket) {
            bracket_text += " " + line;
            if (line.find(']') != std::string::npos)
                in_bracket = false;
            continue;
        }
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trimmed(line.substr(0, colon));
        if (key == "ring" || key == "vars" || key == "order" || key == "ideal") {
            if (headers.count(key) || (key == "ideal" && ideal_line))
                throw input_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
            std::string value = trimmed(line.substr(colon + 1));
            if (key == "ideal") {
                ideal_line = lineno;
                if (!value.empty()) {
                    if (value.front() != '[')
                        throw input_error("line " + std::to_string(lineno) +
                                          ": ideal value must be a [...] list or empty with "
                                          "generators on following lines");
                    bracket_text = value;
                    bracket_start = lineno;
                    in_bracket = value.find(']') == std::string::npos;
                }
            } else {
                headers[key] = value;
            }
            continue;
        }
        if (ideal_line && bracket_text.empty()) {
            generator_lines.emplace_back(line, lineno);
            continue;
        }
        throw input_error("line " + std::to_string(lineno) + ": expected 'key: value', got '" +
                          line + "'");
    }
    if (in_bracket)
        throw input_error("line " + std::to_string(bracket_start) + ": unterminated '[' list");

    for (const char* key : {"ring", "vars", "order"})
        if (!headers.count(key))
            throw input_error(std::string("missing '") + key + ":' header");
    if (!ideal_line)
        throw input_error("missing 'ideal:' header");

    CoefficientDomain ring = parse_domain(headers["ring"]);
    std::vector<std::string> names;
    for (const std::string& part : split(headers["vars"], ','))
        if (!trimmed(part).empty())
            names.push_back(trimmed(part));
    VariableSet vars(names);
    MonomialOrder order = MonomialOrder::from_name(trimmed(headers["order"]));

    std::vector<std::pair<std::string, int>> raw;
    if (!bracket_text.empty()) {
        std::string inner = trimmed(bracket_text);
        inner = trimmed(inner.substr(1, inner.size() - 2));
        if (!inner.empty())
            for (const std::string& part : split(inner, ','))
                raw.emplace_back(trimmed(part), bracket_start);
    } else {
        raw = generator_lines;
    }
    if (raw.empty())
        throw input_error("ideal list is empty");

    std::vector<Polynomial> gens;
    for (const auto& [text, lineno] : raw) {
        if (text.empty())
            throw input_error("line " + std::to_string(lineno) + ": empty generator");
        gens.push_back(PolyParser(text, vars, ring, lineno).parse());
    }
    return ProblemSpec{ring, vars, order, std::move(gens)};
}

} // namespace ringdim
