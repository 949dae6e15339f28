#pragma once
// Recursive-descent parser for the story language.
//
//   session(s(1),[q(01),q(06)],_).        sessions, in reading order
//   s(1) :: aim(pj,turkey) at 2.          timed observations per block
//   p(11) :: a, b implies x.              property rule (same-time)
//   pc(1) :: -gun_loaded implies -fired.  precondition rule (blocks an effect)
//   c(2)  :: a, b causes x.               causal rule (effect one step later)
//   p(14) >> p(13).                       priority between rule families
//   q(06) ?? x at 3 ; (y at 3, z at 3).   multiple-choice question
//   event pull_trigger/1.                 declares an event atom
//
// `true` is the empty body, `-` negates, uppercase-initial tokens are
// variables, `%` starts a line comment, `.` terminates every clause.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "literal.hpp"
#include "unit_argument.hpp"

namespace storyarg {

struct SourcePos {
    int line = 1;
    int col = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& what)
        : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " +
                             what),
          pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

struct TemplateLiteral {
    Term term;  // root functor is the predicate; may contain variables
    bool positive = true;

    bool operator==(const TemplateLiteral&) const = default;

    std::string str() const { return positive ? term.str() : "-" + term.str(); }
};

struct ParsedStatement {
    int block = 1;
    TemplateLiteral lit;
    TimePoint time = 0;
    SourcePos pos;
    bool operator==(const ParsedStatement& o) const {
        return block == o.block && lit == o.lit && time == o.time;
    }
};

struct ParsedRule {
    std::string name;  // "p(11)", "pc(1)", "c(2)"
    UnitKind kind = UnitKind::Property;
    std::vector<TemplateLiteral> body;  // empty encodes `true`
    TemplateLiteral head;
    SourcePos pos;
    bool operator==(const ParsedRule& o) const {
        return name == o.name && kind == o.kind && body == o.body && head == o.head;
    }
};

struct ParsedSession {
    int block = 1;
    std::vector<std::string> questions;
    bool all_visible = true;
    std::vector<Term> visible;  // atom patterns, may contain variables
    SourcePos pos;
    bool operator==(const ParsedSession& o) const {
        return block == o.block && questions == o.questions && all_visible == o.all_visible &&
               visible == o.visible;
    }
};

struct ParsedQuestion {
    std::string name;  // "q(01)"
    std::vector<std::vector<std::pair<TemplateLiteral, TimePoint>>> choices;
    SourcePos pos;
    bool operator==(const ParsedQuestion& o) const {
        return name == o.name && choices == o.choices;
    }
};

struct ParsedPriority {
    std::string stronger;
    std::string weaker;
    SourcePos pos;
    bool operator==(const ParsedPriority& o) const {
        return stronger == o.stronger && weaker == o.weaker;
    }
};

struct EventDecl {
    std::string predicate;
    int arity = 0;
    SourcePos pos;
    bool operator==(const EventDecl& o) const {
        return predicate == o.predicate && arity == o.arity;
    }
};

struct ParsedStory {
    std::vector<ParsedSession> sessions;
    std::vector<ParsedStatement> statements;
    std::vector<ParsedRule> rules;
    std::vector<ParsedPriority> priorities;
    std::vector<ParsedQuestion> questions;
    std::vector<EventDecl> events;

    bool operator==(const ParsedStory&) const = default;
};

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    struct Token {
        enum class Kind { Ident, Number, Punct, End };
        Kind kind = Kind::End;
        std::string text;
        SourcePos pos;
    };

    const Token& peek() {
        if (!has_) {
            tok_ = lex();
            has_ = true;
        }
        return tok_;
    }

    Token next() {
        const Token t = peek();
        has_ = false;
        return t;
    }

private:
    Token lex() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == '%') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
                continue;
            }
            break;
        }
        Token t;
        t.pos = pos_;
        if (i_ >= text_.size()) return t;
        char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                                         text_[i_] == '_')) {
                t.text += text_[i_];
                advance();
            }
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
                t.text += text_[i_];
                advance();
            }
            return t;
        }
        t.kind = Token::Kind::Punct;
        if (i_ + 1 < text_.size()) {
            std::string two{text_[i_], text_[i_ + 1]};
            if (two == "::" || two == ">>" || two == "??") {
                t.text = two;
                advance();
                advance();
                return t;
            }
        }
        t.text = std::string(1, c);
        advance();
        return t;
    }

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_;
    Token tok_;
    bool has_ = false;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ParsedStory parse() {
        ParsedStory out;
        while (lex_.peek().kind != Lexer::Token::Kind::End) {
            const auto& t = lex_.peek();
            if (t.kind != Lexer::Token::Kind::Ident)
                throw ParseError(t.pos, "expected a clause, found '" + t.text + "'");
            if (t.text == "session")
                out.sessions.push_back(parse_session());
            else if (t.text == "event")
                out.events.push_back(parse_event());
            else if (t.text == "s")
                out.statements.push_back(parse_statement());
            else if (t.text == "q")
                out.questions.push_back(parse_question());
            else if (t.text == "p" || t.text == "pc" || t.text == "c")
                parse_rule_or_priority(out);
            else
                throw ParseError(t.pos, "unknown clause head '" + t.text + "'");
        }
        check(out);
        return out;
    }

private:
    using Token = Lexer::Token;

    Token expect_ident(const std::string& what) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident)
            throw ParseError(t.pos, "expected " + what + ", found '" + t.text + "'");
        return t;
    }

    Token expect_keyword(const std::string& kw) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Ident || t.text != kw)
            throw ParseError(t.pos, "expected '" + kw + "', found '" + t.text + "'");
        return t;
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Punct || t.text != p)
            throw ParseError(t.pos, "expected '" + p + "', found '" + t.text + "'");
        return t;
    }

    Token expect_number() {
        Token t = lex_.next();
        if (t.kind != Token::Kind::Number)
            throw ParseError(t.pos, "expected a number, found '" + t.text + "'");
        return t;
    }

    bool peek_punct(const std::string& p) {
        const Token& t = lex_.peek();
        return t.kind == Token::Kind::Punct && t.text == p;
    }

    // name(NUM) with the digits preserved verbatim, e.g. "q(01)".
    std::string parse_tag(const std::string& head) {
        expect_punct("(");
        Token n = expect_number();
        expect_punct(")");
        return head + "(" + n.text + ")";
    }

    int parse_block_ref() {
        expect_keyword("s");
        expect_punct("(");
        Token n = expect_number();
        expect_punct(")");
        return std::stoi(n.text);
    }

    Term parse_term() {
        Token t = lex_.next();
        if (t.kind == Token::Kind::Number) return constant(t.text);
        if (t.kind != Token::Kind::Ident)
            throw ParseError(t.pos, "expected a term, found '" + t.text + "'");
        Term out{t.text, {}};
        if (peek_punct("(")) {
            lex_.next();
            out.args.push_back(parse_term());
            while (peek_punct(",")) {
                lex_.next();
                out.args.push_back(parse_term());
            }
            expect_punct(")");
        }
        return out;
    }

    TemplateLiteral parse_literal() {
        TemplateLiteral lit;
        if (peek_punct("-")) {
            lex_.next();
            lit.positive = false;
        }
        SourcePos pos = lex_.peek().pos;
        lit.term = parse_term();
        if (lit.term.is_variable())
            throw ParseError(pos, "a literal cannot be a bare variable");
        return lit;
    }

    ParsedSession parse_session() {
        ParsedSession s;
        s.pos = lex_.peek().pos;
        expect_keyword("session");
        expect_punct("(");
        s.block = parse_block_ref();
        expect_punct(",");
        expect_punct("[");
        if (!peek_punct("]")) {
            for (;;) {
                expect_keyword("q");
                s.questions.push_back("q" + std::string("(") + expect_after_open() + ")");
                if (!peek_punct(",")) break;
                lex_.next();
            }
        }
        expect_punct("]");
        expect_punct(",");
        if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "_") {
            lex_.next();
            s.all_visible = true;
        } else {
            expect_punct("[");
            s.all_visible = false;
            if (!peek_punct("]")) {
                for (;;) {
                    s.visible.push_back(parse_term());
                    if (!peek_punct(",")) break;
                    lex_.next();
                }
            }
            expect_punct("]");
        }
        expect_punct(")");
        expect_punct(".");
        return s;
    }

    std::string expect_after_open() {
        expect_punct("(");
        Token n = expect_number();
        expect_punct(")");
        return n.text;
    }

    EventDecl parse_event() {
        EventDecl e;
        e.pos = lex_.peek().pos;
        expect_keyword("event");
        e.predicate = expect_ident("an event predicate").text;
        expect_punct("/");
        e.arity = std::stoi(expect_number().text);
        expect_punct(".");
        return e;
    }

    ParsedStatement parse_statement() {
        ParsedStatement st;
        st.pos = lex_.peek().pos;
        st.block = parse_block_ref();
        expect_punct("::");
        st.lit = parse_literal();
        expect_keyword("at");
        st.time = std::stoi(expect_number().text);
        expect_punct(".");
        return st;
    }

    void parse_rule_or_priority(ParsedStory& out) {
        Token head = lex_.next();
        SourcePos pos = head.pos;
        std::string name = parse_tag(head.text);
        if (peek_punct(">>")) {
            lex_.next();
            Token rhs = expect_ident("a rule name");
            std::string weaker = parse_tag(rhs.text);
            expect_punct(".");
            out.priorities.push_back({name, weaker, pos});
            return;
        }
        expect_punct("::");
        ParsedRule r;
        r.pos = pos;
        r.name = name;
        r.kind = head.text == "c"    ? UnitKind::Causal
                 : head.text == "pc" ? UnitKind::Precondition
                                     : UnitKind::Property;
        // Body up to the connective; `true` alone is the empty body.
        const Token& first = lex_.peek();
        if (first.kind == Token::Kind::Ident && first.text == "true") {
            lex_.next();
        } else {
            for (;;) {
                r.body.push_back(parse_literal());
                if (!peek_punct(",")) break;
                lex_.next();
            }
        }
        Token conn = expect_ident("'implies' or 'causes'");
        const bool causes = conn.text == "causes";
        if (!causes && conn.text != "implies")
            throw ParseError(conn.pos, "expected 'implies' or 'causes', found '" + conn.text + "'");
        if (causes != (r.kind == UnitKind::Causal))
            throw ParseError(conn.pos, r.name + " uses the wrong connective for its kind");
        r.head = parse_literal();
        expect_punct(".");
        out.rules.push_back(std::move(r));
    }

    ParsedQuestion parse_question() {
        ParsedQuestion q;
        q.pos = lex_.peek().pos;
        expect_keyword("q");
        q.name = "q(" + expect_after_open() + ")";
        expect_punct("??");
        for (;;) {
            q.choices.push_back(parse_choice());
            if (!peek_punct(";")) break;
            lex_.next();
        }
        expect_punct(".");
        return q;
    }

    std::vector<std::pair<TemplateLiteral, TimePoint>> parse_choice() {
        std::vector<std::pair<TemplateLiteral, TimePoint>> conj;
        const bool parens = peek_punct("(");
        if (parens) lex_.next();
        for (;;) {
            TemplateLiteral lit = parse_literal();
            expect_keyword("at");
            TimePoint t = std::stoi(expect_number().text);
            conj.push_back({std::move(lit), t});
            if (!parens || !peek_punct(",")) break;
            lex_.next();
        }
        if (parens) expect_punct(")");
        return conj;
    }

    void check(const ParsedStory& out) {
        std::vector<std::string> names;
        for (const ParsedRule& r : out.rules) {
            for (const std::string& n : names)
                if (n == r.name) throw ParseError(r.pos, "duplicate rule name " + r.name);
            names.push_back(r.name);
        }
        std::vector<std::string> qnames;
        for (const ParsedQuestion& q : out.questions) {
            for (const std::string& n : qnames)
                if (n == q.name) throw ParseError(q.pos, "duplicate question name " + q.name);
            qnames.push_back(q.name);
        }
        for (const ParsedSession& s : out.sessions) {
            bool found = false;
            for (const ParsedStatement& st : out.statements) found = found || st.block == s.block;
            if (!found)
                throw ParseError(s.pos, "session refers to block s(" + std::to_string(s.block) +
                                            ") with no statements");
            for (const std::string& qn : s.questions) {
                bool known = false;
                for (const std::string& n : qnames) known = known || n == qn;
                if (!known) throw ParseError(s.pos, "session refers to unknown question " + qn);
            }
        }
        // Head variables must be bound by the body.
        for (const ParsedRule& r : out.rules) {
            std::vector<std::string> body_vars;
            for (const TemplateLiteral& b : r.body) collect_vars(b.term, body_vars);
            std::vector<std::string> head_vars;
            collect_vars(r.head.term, head_vars);
            for (const std::string& v : head_vars) {
                bool bound = false;
                for (const std::string& bv : body_vars) bound = bound || bv == v;
                if (!bound)
                    throw ParseError(r.pos,
                                     "head variable " + v + " of " + r.name + " is unbound");
            }
        }
    }

    static void collect_vars(const Term& t, std::vector<std::string>& out) {
        if (t.is_variable()) {
            for (const std::string& v : out)
                if (v == t.functor) return;
            out.push_back(t.functor);
            return;
        }
        for (const Term& a : t.args) collect_vars(a, out);
    }

    Lexer lex_;
};

}  // namespace detail

inline ParsedStory parse_story(std::string_view text) { return detail::Parser(text).parse(); }

// Canonical text form; reparsing it yields an equal ParsedStory.
inline std::string pretty_print(const ParsedStory& p) {
    std::string out;
    for (const ParsedSession& s : p.sessions) {
        out += "session(s(" + std::to_string(s.block) + "),[";
        for (std::size_t i = 0; i < s.questions.size(); ++i) {
            if (i) out += ',';
            out += s.questions[i];
        }
        out += "],";
        if (s.all_visible) {
            out += "_";
        } else {
            out += "[";
            for (std::size_t i = 0; i < s.visible.size(); ++i) {
                if (i) out += ',';
                out += s.visible[i].str();
            }
            out += "]";
        }
        out += ").\n";
    }
    for (const EventDecl& e : p.events)
        out += "event " + e.predicate + "/" + std::to_string(e.arity) + ".\n";
    for (const ParsedStatement& st : p.statements)
        out += "s(" + std::to_string(st.block) + ") :: " + st.lit.str() + " at " +
               std::to_string(st.time) + ".\n";
    for (const ParsedRule& r : p.rules) {
        out += r.name + " :: ";
        if (r.body.empty()) {
            out += "true";
        } else {
            for (std::size_t i = 0; i < r.body.size(); ++i) {
                if (i) out += ", ";
                out += r.body[i].str();
            }
        }
        out += r.kind == UnitKind::Causal ? " causes " : " implies ";
        out += r.head.str() + ".\n";
    }
    for (const ParsedPriority& pr : p.priorities)
        out += pr.stronger + " >> " + pr.weaker + ".\n";
    for (const ParsedQuestion& q : p.questions) {
        out += q.name + " ?? ";
        for (std::size_t i = 0; i < q.choices.size(); ++i) {
            if (i) out += " ; ";
            const auto& conj = q.choices[i];
            if (conj.size() > 1) out += "(";
            for (std::size_t j = 0; j < conj.size(); ++j) {
                if (j) out += ", ";
                out += conj[j].first.str() + " at " + std::to_string(conj[j].second);
            }
            if (conj.size() > 1) out += ")";
        }
        out += ".\n";
    }
    return out;
}

}  // namespace storyarg
