// Lattice terms: abstract syntax, parser, printer and evaluation.
//
// Grammar (EBNF):
//   term   := factor { "|" factor }
//   factor := atom { "&" atom }
//   atom   := ident | "(" term ")"
//   ident  := [a-z][a-z0-9_]*
// `&` (meet) binds tighter than `|` (join); both associate to the left.
#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

class Term {
public:
    enum class Kind { var, meet, join };

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        std::string name;
        NodePtr left, right;
    };

public:
    static Term var(std::string name) {
        return Term(std::make_shared<Node>(Node{Kind::var, std::move(name), nullptr, nullptr}));
    }
    static Term meet(Term l, Term r) {
        return Term(
            std::make_shared<Node>(Node{Kind::meet, {}, std::move(l.node_), std::move(r.node_)}));
    }
    static Term join(Term l, Term r) {
        return Term(
            std::make_shared<Node>(Node{Kind::join, {}, std::move(l.node_), std::move(r.node_)}));
    }
    // Left-associated n-ary joins/meets (sugar).
    static Term join_all(const std::vector<Term>& ts) {
        Term r = ts.at(0);
        for (std::size_t i = 1; i < ts.size(); ++i) r = join(r, ts[i]);
        return r;
    }
    static Term meet_all(const std::vector<Term>& ts) {
        Term r = ts.at(0);
        for (std::size_t i = 1; i < ts.size(); ++i) r = meet(r, ts[i]);
        return r;
    }

    Kind kind() const { return node_->kind; }
    const std::string& var_name() const { return node_->name; }
    Term left() const { return Term(node_->left); }
    Term right() const { return Term(node_->right); }

    bool equals(const Term& o) const {
        if (kind() != o.kind()) return false;
        if (kind() == Kind::var) return var_name() == o.var_name();
        return left().equals(o.left()) && right().equals(o.right());
    }

    // Sorted variable names.
    std::vector<std::string> vars() const {
        std::set<std::string> s;
        collect_vars(s);
        return {s.begin(), s.end()};
    }

    // Round-trips through parse_term: parentheses are emitted exactly where
    // the left-associative grammar requires them.
    std::string to_string() const { return print(0); }

private:
    Term() = default;
    explicit Term(NodePtr n) : node_(std::move(n)) {}

    void collect_vars(std::set<std::string>& s) const {
        if (kind() == Kind::var) {
            s.insert(var_name());
            return;
        }
        left().collect_vars(s);
        right().collect_vars(s);
    }

    // level: 0 = join context, 1 = meet context, 2 = atom context.
    std::string print(int level) const {
        switch (kind()) {
            case Kind::var:
                return var_name();
            case Kind::join: {
                std::string s = left().print(0) + " | " + right().print(1);
                return level > 0 ? "(" + s + ")" : s;
            }
            case Kind::meet: {
                std::string s = left().print(1) + " & " + right().print(2);
                return level > 1 ? "(" + s + ")" : s;
            }
        }
        return {};
    }

    NodePtr node_;
};

using Assignment = std::map<std::string, int>;

// ---------------------------------------------------------------------------
// Parser

namespace detail {

struct Token {
    enum class Kind { ident, amp, bar, lparen, rparen, end } kind;
    std::string text;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0, tok = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        ++tok;
        if (c == '&') out.push_back({Token::Kind::amp, "&"});
        else if (c == '|') out.push_back({Token::Kind::bar, "|"});
        else if (c == '(') out.push_back({Token::Kind::lparen, "("});
        else if (c == ')') out.push_back({Token::Kind::rparen, ")"});
        else if (c >= 'a' && c <= 'z') {
            std::size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= '0' && src[j] <= '9') ||
                    src[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, src.substr(i, j - i)});
            i = j;
            continue;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", tok);
        }
        ++i;
    }
    out.push_back({Token::Kind::end, ""});
    return out;
}

class TermParser {
public:
    explicit TermParser(const std::string& src) : toks_(tokenize(src)) {}

    Term parse() {
        Term t = term();
        if (cur().kind != Token::Kind::end)
            throw ParseError("unexpected trailing input", pos_ + 1);
        return t;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    Term term() {
        Term t = factor();
        while (cur().kind == Token::Kind::bar) {
            advance();
            t = Term::join(t, factor());
        }
        return t;
    }
    Term factor() {
        Term t = atom();
        while (cur().kind == Token::Kind::amp) {
            advance();
            t = Term::meet(t, atom());
        }
        return t;
    }
    Term atom() {
        if (cur().kind == Token::Kind::ident) {
            Term t = Term::var(cur().text);
            advance();
            return t;
        }
        if (cur().kind == Token::Kind::lparen) {
            advance();
            Term t = term();
            if (cur().kind != Token::Kind::rparen)
                throw ParseError("expected ')'", pos_ + 1);
            advance();
            return t;
        }
        throw ParseError("expected a variable or '('", pos_ + 1);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Term parse_term(const std::string& src) { return detail::TermParser(src).parse(); }

// ---------------------------------------------------------------------------
// Evaluation

inline int eval(const Lattice& L, const Term& t, const Assignment& a) {
    switch (t.kind()) {
        case Term::Kind::var: {
            auto it = a.find(t.var_name());
            if (it == a.end()) throw UnboundVariableError(t.var_name());
            return it->second;
        }
        case Term::Kind::meet:
            return L.meet(eval(L, t.left(), a), eval(L, t.right(), a));
        case Term::Kind::join:
            return L.join(eval(L, t.left(), a), eval(L, t.right(), a));
    }
    return 0;
}

// Flat postfix form for the inner loops of exhaustive checks.  Variable
// slots index into a caller-supplied value vector; join/meet are supplied by
// the evaluation context (ambient lattice, or a sub-join-semilattice with
// its relative meet).
struct CompiledTerm {
    // op >= 0: push value of variable slot `op`; -1: meet; -2: join.
    std::vector<int> ops;
    int max_stack = 0;

    static CompiledTerm compile(const Term& t, const std::vector<std::string>& var_order) {
        CompiledTerm c;
        int depth = 0;
        std::function<void(const Term&)> go = [&](const Term& u) {
            if (u.kind() == Term::Kind::var) {
                auto it = std::find(var_order.begin(), var_order.end(), u.var_name());
                if (it == var_order.end()) throw UnboundVariableError(u.var_name());
                c.ops.push_back(static_cast<int>(it - var_order.begin()));
                if (++depth > c.max_stack) c.max_stack = depth;
                return;
            }
            go(u.left());
            go(u.right());
            c.ops.push_back(u.kind() == Term::Kind::meet ? -1 : -2);
            --depth;
        };
        go(t);
        if (c.max_stack > 64) throw SizeGuardError("term is too deep to evaluate");
        return c;
    }

    template <typename JoinFn, typename MeetFn>
    int eval(const int* values, JoinFn&& join, MeetFn&& meet) const {
        int stack[64];
        int sp = 0;
        for (int op : ops) {
            if (op >= 0) {
                stack[sp++] = values[op];
            } else {
                int b = stack[--sp];
                int a = stack[--sp];
                stack[sp++] = (op == -1) ? meet(a, b) : join(a, b);
            }
        }
        return stack[0];
    }

    int eval_in(const Lattice& L, const int* values) const {
        return eval(values, [&](int a, int b) { return L.join(a, b); },
                    [&](int a, int b) { return L.meet(a, b); });
    }
};

}  // namespace latkit
