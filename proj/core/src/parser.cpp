#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "sup/binding.hpp"
#include "sup/syntax.hpp"

namespace sup {

namespace {

enum class Tok {
    Ident,
    Number,
    ImagNumber,
    Lambda,
    Colon,
    Dot,
    LParen,
    RParen,
    LAngle,
    RAngle,
    Comma,
    LBracket,
    RBracket,
    Bars,
    Plus,
    Minus,
    Star,
    Slash,
    Arrow,
    AndOp,
    OrOp,
    SupOp,
    Equals,
    Hash,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    double number = 0.0;
    SourceLocation where;
};

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    SourceLocation loc;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    auto startsWith = [&](std::string_view s) { return src.substr(i, s.size()) == s; };

    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (startsWith("--")) {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token tok;
        tok.where = loc;
        if (identStart(c)) {
            std::size_t j = i;
            while (j < src.size() && identChar(src[j])) ++j;
            tok.kind = Tok::Ident;
            tok.text = std::string(src.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto digitAt = [&](std::size_t k) {
                return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]));
            };
            std::size_t j = i;
            while (digitAt(j)) ++j;
            if (j < src.size() && src[j] == '.' && digitAt(j + 1)) {
                ++j;
                while (digitAt(j)) ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (digitAt(k)) {
                    j = k;
                    while (digitAt(j)) ++j;
                }
            }
            const std::string_view digits = src.substr(i, j - i);
            std::from_chars(digits.data(), digits.data() + digits.size(), tok.number);
            tok.text = std::string(digits);
            tok.kind = Tok::Number;
            if (j < src.size() && src[j] == 'i' && !(j + 1 < src.size() && identChar(src[j + 1]))) {
                tok.kind = Tok::ImagNumber;
                ++j;
            }
            advance(j - i);
            out.push_back(std::move(tok));
            continue;
        }
        struct Symbol {
            std::string_view text;
            Tok kind;
        };
        static constexpr Symbol symbols[] = {
            {"(+)", Tok::SupOp}, {"\\/", Tok::OrOp}, {"/\\", Tok::AndOp}, {"->", Tok::Arrow},
            {"||", Tok::Bars},   {"\\", Tok::Lambda}, {":", Tok::Colon},   {".", Tok::Dot},
            {"(", Tok::LParen},  {")", Tok::RParen},  {"<", Tok::LAngle},  {">", Tok::RAngle},
            {",", Tok::Comma},   {"[", Tok::LBracket}, {"]", Tok::RBracket}, {"+", Tok::Plus},
            {"-", Tok::Minus},   {"*", Tok::Star},    {"/", Tok::Slash},   {"=", Tok::Equals},
            {"#", Tok::Hash},
        };
        bool matched = false;
        for (const auto& sym : symbols) {
            if (startsWith(sym.text)) {
                tok.kind = sym.kind;
                tok.text = std::string(sym.text);
                advance(sym.text.size());
                out.push_back(std::move(tok));
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw ParseError(ErrorKind::Parse, loc, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back(Token{Tok::End, "<end of input>", 0.0, loc});
    return out;
}

bool isTermKeyword(const std::string& s) {
    return s == "def" || s == "inl" || s == "inr" || s == "absurd" || s == "case_and" || s == "case_or" ||
           s == "case_sup" || s == "case_sup_par" || s == "false" || s == "true";
}

struct WeightedParse {
    Weighted value;
    bool explicitWeight = false;
};

class Parser {
public:
    Parser(std::string_view text, Mode mode) : tokens_(lex(text)), mode_(mode) {
        for (const auto& t : tokens_) {
            if (t.kind == Tok::Ident) spelled_.insert(t.text);
        }
    }

    Term wholeTerm() {
        Term t = term();
        expect(Tok::End, "end of input");
        return t;
    }

    Prop wholeProp() {
        Prop p = prop();
        expect(Tok::End, "end of input");
        return p;
    }

    ScalarExpr wholeScalar() {
        ScalarExpr e = scalarSum();
        expect(Tok::End, "end of input");
        return e;
    }

    SourceFile source() {
        SourceFile file;
        file.mode = mode_;
        if (at(Tok::Hash)) {
            advance();
            const Token& kw = expectIdent("pragma name");
            if (kw.text != "mode") fail(kw, "unknown pragma '#" + kw.text + "'");
            const Token& value = expectIdent("'plain' or 'scalar'");
            if (value.text == "plain") {
                mode_ = Mode::Plain;
            } else if (value.text == "scalar") {
                mode_ = Mode::Scalar;
            } else {
                fail(value, "expected 'plain' or 'scalar'");
            }
            file.mode = mode_;
        }
        Substitution earlier;
        while (!at(Tok::End)) {
            const Token& kw = expectIdent("'def'");
            if (kw.text != "def") fail(kw, "expected 'def'");
            const Token& name = expectIdent("definition name");
            if (isTermKeyword(name.text)) fail(name, "'" + name.text + "' is reserved");
            if (earlier.count(name.text)) {
                throw ParseError(ErrorKind::Definition, name.where, "'" + name.text + "' is already defined");
            }
            expect(Tok::Colon, "':'");
            Prop p = prop();
            expect(Tok::Equals, "'='");
            Term body = term();
            Definition d{name.text, p, body, substitute(body, earlier), name.where};
            earlier.emplace(d.name, d.elaborated);
            file.definitions.push_back(std::move(d));
        }
        return file;
    }

private:
    // ---- tokens -------------------------------------------------------------
    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool atIdent(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }
    const Token& advance() {
        const Token& t = peek();
        if (pos_ < tokens_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError(ErrorKind::Parse, t.where, message);
    }
    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(peek(), std::string("expected ") + what + ", found '" + peek().text + "'");
        return advance();
    }
    const Token& expectIdent(const char* what) { return expect(Tok::Ident, what); }

    // ---- propositions -------------------------------------------------------
    Prop prop() {
        Prop lhs = supProp();
        if (at(Tok::Arrow)) {
            advance();
            return Prop::implies(lhs, prop());
        }
        return lhs;
    }
    Prop supProp() {
        Prop lhs = orProp();
        if (at(Tok::SupOp)) {
            advance();
            return Prop::sup(lhs, supProp());
        }
        return lhs;
    }
    Prop orProp() {
        Prop lhs = andProp();
        if (at(Tok::OrOp)) {
            advance();
            return Prop::disj(lhs, orProp());
        }
        return lhs;
    }
    Prop andProp() {
        Prop lhs = atomProp();
        if (at(Tok::AndOp)) {
            advance();
            return Prop::conj(lhs, andProp());
        }
        return lhs;
    }
    Prop atomProp() {
        if (atIdent("T")) {
            advance();
            return Prop::top();
        }
        if (atIdent("F")) {
            advance();
            return Prop::bottom();
        }
        if (at(Tok::LParen)) {
            advance();
            Prop p = prop();
            expect(Tok::RParen, "')'");
            return p;
        }
        fail(peek(), "expected a proposition, found '" + peek().text + "'");
    }

    // ---- scalars ------------------------------------------------------------
    ScalarExpr scalarSum() {
        ScalarExpr lhs = scalarProduct();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            const auto kind = advance().kind == Tok::Plus ? ScalarExpr::Kind::Add : ScalarExpr::Kind::Subtract;
            lhs = ScalarExpr::binary(kind, std::move(lhs), scalarProduct());
        }
        return lhs;
    }
    ScalarExpr scalarProduct() {
        ScalarExpr lhs = scalarUnary();
        while (at(Tok::Star) || at(Tok::Slash)) {
            const Token& op = advance();
            ScalarExpr rhs = scalarUnary();
            if (op.kind == Tok::Slash) {
                const Scalar d = evalScalar(rhs);
                if (d.real() == 0.0 && d.imag() == 0.0) {
                    throw ParseError(ErrorKind::DivisionByZero, op.where, "division by zero in scalar constant");
                }
            }
            lhs = ScalarExpr::binary(op.kind == Tok::Star ? ScalarExpr::Kind::Multiply : ScalarExpr::Kind::Divide,
                                     std::move(lhs), std::move(rhs));
        }
        return lhs;
    }
    ScalarExpr scalarUnary() {
        if (at(Tok::Minus)) {
            advance();
            return ScalarExpr::unary(ScalarExpr::Kind::Negate, scalarUnary());
        }
        return scalarAtom();
    }
    ScalarExpr scalarAtom() {
        if (at(Tok::Number)) return ScalarExpr::literal(advance().number);
        if (at(Tok::ImagNumber)) return ScalarExpr::literal(advance().number, true);
        if (atIdent("i")) {
            advance();
            return ScalarExpr::imaginaryUnit();
        }
        if (atIdent("sqrt")) {
            advance();
            expect(Tok::LParen, "'('");
            ScalarExpr e = scalarSum();
            expect(Tok::RParen, "')'");
            return ScalarExpr::unary(ScalarExpr::Kind::Sqrt, std::move(e));
        }
        if (at(Tok::LParen)) {
            advance();
            ScalarExpr e = scalarSum();
            expect(Tok::RParen, "')'");
            return e;
        }
        fail(peek(), "expected a scalar, found '" + peek().text + "'");
    }

    bool mayStartScalar() const {
        return at(Tok::Number) || at(Tok::ImagNumber) || at(Tok::Minus) || at(Tok::LParen) || atIdent("i") ||
               atIdent("sqrt");
    }

    // Parses `scalar .` if present; otherwise leaves the position untouched.
    std::optional<std::pair<Scalar, Token>> weightPrefix() {
        if (!mayStartScalar()) return std::nullopt;
        const std::size_t saved = pos_;
        const Token start = peek();
        try {
            ScalarExpr e = scalarSum();
            if (at(Tok::Dot)) {
                advance();
                return std::make_pair(evalScalar(e), start);
            }
        } catch (const ParseError& err) {
            if (err.kind() == ErrorKind::DivisionByZero) throw;
        }
        pos_ = saved;
        return std::nullopt;
    }

    // ---- terms --------------------------------------------------------------
    Term term() {
        WeightedParse w = parLevel();
        if (w.explicitWeight) {
            fail(peek(), "a weighted proof a . t must be an operand of '+' or '||'");
        }
        return w.value.body;
    }

    WeightedParse parLevel() {
        WeightedParse lhs = sumLevel();
        while (at(Tok::Bars)) {
            advance();
            WeightedParse rhs = sumLevel();
            lhs = WeightedParse{Weighted{scalarOne(), Term::par(lhs.value, rhs.value)}, false};
        }
        return lhs;
    }

    WeightedParse sumLevel() {
        WeightedParse lhs = weightedOperand();
        while (at(Tok::Plus)) {
            advance();
            WeightedParse rhs = weightedOperand();
            lhs = WeightedParse{Weighted{scalarOne(), Term::sum(lhs.value, rhs.value)}, false};
        }
        return lhs;
    }

    WeightedParse weightedOperand() {
        if (auto w = weightPrefix()) {
            if (mode_ == Mode::Plain) {
                throw ParseError(ErrorKind::Mode, w->second.where, "weights are not allowed in plain mode");
            }
            return WeightedParse{Weighted{w->first, bodyTerm()}, true};
        }
        return WeightedParse{Weighted{scalarOne(), bodyTerm()}, false};
    }

    Term bodyTerm() {
        if (at(Tok::Lambda)) return lambda();
        return appTerm();
    }

    Term lambda() {
        expect(Tok::Lambda, "'\\'");
        const Token& x = expectIdent("binder name");
        checkBinder(x);
        expect(Tok::Colon, "':'");
        Prop domain = prop();
        expect(Tok::Dot, "'.'");
        const std::string name = bind(x.text);
        Term body = term();
        unbind(1);
        return Term::lam(name, domain, body);
    }

    bool startsAtom() const {
        if (at(Tok::Ident)) return peek().text != "def";
        return at(Tok::Star) || at(Tok::LParen) || at(Tok::LAngle);
    }

    Term appTerm() {
        Term t = atom();
        while (startsAtom()) t = Term::app(t, atom());
        return t;
    }

    Term atom() {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::Star: advance(); return Term::star();
        case Tok::LParen: {
            advance();
            Term t = term();
            expect(Tok::RParen, "')'");
            return t;
        }
        case Tok::LAngle: {
            advance();
            Term a = term();
            expect(Tok::Comma, "','");
            Term b = term();
            expect(Tok::RAngle, "'>'");
            return Term::pair(a, b);
        }
        case Tok::Ident: break;
        default: fail(tok, "expected a term, found '" + tok.text + "'");
        }

        const std::string& word = tok.text;
        if (word == "false" || word == "true") {
            advance();
            return word == "true" ? Term::inr(Term::star()) : Term::inl(Term::star());
        }
        if (word == "inl" || word == "inr") {
            advance();
            expect(Tok::LParen, "'('");
            Term inner = term();
            if (at(Tok::Comma)) {
                advance();
                Prop other = prop();
                expect(Tok::RParen, "')'");
                return word == "inl" ? Term::inl(inner, other) : Term::inr(inner, other);
            }
            expect(Tok::RParen, "')'");
            return word == "inl" ? Term::inl(inner) : Term::inr(inner);
        }
        if (word == "absurd") {
            advance();
            expect(Tok::LParen, "'('");
            Term inner = term();
            expect(Tok::Comma, "','");
            Prop target = prop();
            expect(Tok::RParen, "')'");
            return Term::elimBot(inner, target);
        }
        if (word == "case_and") {
            advance();
            expect(Tok::LParen, "'('");
            Term scrutinee = term();
            expect(Tok::Comma, "','");
            expect(Tok::LBracket, "'['");
            const Token& x = expectIdent("binder name");
            checkBinder(x);
            expect(Tok::Comma, "','");
            const Token& y = expectIdent("binder name");
            checkBinder(y);
            expect(Tok::RBracket, "']'");
            const std::string xn = bind(x.text);
            const std::string yn = bind(y.text);
            Term body = term();
            unbind(2);
            expect(Tok::RParen, "')'");
            return Term::elimAnd(scrutinee, xn, yn, body);
        }
        if (word == "case_or" || word == "case_sup" || word == "case_sup_par") {
            advance();
            expect(Tok::LParen, "'('");
            Term scrutinee = term();
            expect(Tok::Comma, "','");
            auto [xn, left] = branch();
            expect(Tok::Comma, "','");
            auto [yn, right] = branch();
            expect(Tok::RParen, "')'");
            if (word == "case_or") return Term::elimOr(scrutinee, xn, left, yn, right);
            if (word == "case_sup") return Term::elimSup(scrutinee, xn, left, yn, right);
            return Term::elimSupPar(scrutinee, xn, left, yn, right);
        }
        if (word == "def") fail(tok, "unexpected 'def'");
        advance();
        return Term::var(resolve(word));
    }

    std::pair<std::string, Term> branch() {
        expect(Tok::LBracket, "'['");
        const Token& x = expectIdent("binder name");
        checkBinder(x);
        expect(Tok::RBracket, "']'");
        const std::string name = bind(x.text);
        Term body = term();
        unbind(1);
        return {name, body};
    }

    // ---- scopes -------------------------------------------------------------
    void checkBinder(const Token& t) const {
        if (isTermKeyword(t.text)) fail(t, "'" + t.text + "' cannot be a binder");
    }

    // Binders that would shadow an enclosing one are freshened.
    std::string bind(const std::string& surface) {
        NameSet inScope;
        for (const auto& [s, internal] : scope_) inScope.insert(internal);
        std::string internal = surface;
        if (inScope.count(surface)) {
            NameSet avoid = spelled_;
            avoid.insert(inScope.begin(), inScope.end());
            internal = freshName(surface, avoid);
        }
        scope_.emplace_back(surface, internal);
        return internal;
    }
    void unbind(std::size_t n) { scope_.resize(scope_.size() - n); }
    std::string resolve(const std::string& surface) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->first == surface) return it->second;
        }
        return surface;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    Mode mode_;
    std::vector<std::pair<std::string, std::string>> scope_;
    NameSet spelled_;  // every identifier in the input; freshened binders avoid them
};

}  // namespace

Term parseTerm(std::string_view text, Mode mode) { return Parser(text, mode).wholeTerm(); }

Prop parseProp(std::string_view text) { return Parser(text, Mode::Plain).wholeProp(); }

ScalarExpr parseScalarExpr(std::string_view text) { return Parser(text, Mode::Scalar).wholeScalar(); }

Scalar parseScalar(std::string_view text) { return evalScalar(parseScalarExpr(text)); }

const Definition* SourceFile::find(const std::string& name) const {
    for (const auto& d : definitions) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

SourceFile parseSource(std::string_view text) { return Parser(text, Mode::Plain).source(); }

SourceFile loadSource(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parseSource(buf.str());
}

}  // namespace sup
