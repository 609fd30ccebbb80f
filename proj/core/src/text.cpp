#include "rdcirc/text.hpp"

#include <cctype>
#include <ostream>

#include "rdcirc/errors.hpp"

namespace rdcirc {

namespace {

struct Parser {
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

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    }

    int natural() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw SyntaxError("expected a natural number", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000) throw SyntaxError("wire count too large", pos);
            ++pos;
        }
        return static_cast<int>(v);
    }

    // term := tensor_chain (";" tensor_chain)*
    Term term() {
        Term t = tensor_chain();
        while (eat(';')) t = Term::seq(t, tensor_chain());
        return t;
    }

    // tensor_chain := atom ("|" atom)*
    Term tensor_chain() {
        Term t = atom();
        while (eat('|')) t = Term::tensor(t, atom());
        return t;
    }

    Term atom() {
        skip_ws();
        if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
        if (text[pos] == '(') {
            ++pos;
            Term t = term();
            if (!eat(')')) throw SyntaxError("expected ')'", pos);
            return t;
        }
        std::size_t word_pos = pos;
        std::string w = word();
        if (w == "discard") return Term::gen(Gen::Discard);
        if (w == "copy") return Term::gen(Gen::Copy);
        if (w == "zero") return Term::gen(Gen::Zero);
        if (w == "add") return Term::gen(Gen::Add);
        if (w == "one") return Term::gen(Gen::One);
        if (w == "and") return Term::gen(Gen::And);
        if (w == "swap") return Term::swap();
        if (w == "id") return Term::id(natural());
        throw SyntaxError(w.empty() ? "unexpected character" : "unknown atom '" + w + "'",
                          word_pos);
    }
};

// Precedence levels for printing: seq (loosest), tensor, atom.
void print_atom(std::string& out, const Term& t);
void print_seq(std::string& out, const Term& t);

void print_tensor(std::string& out, const Term& t) {
    if (t.kind() == Term::Kind::Tensor) {
        // Left-associative: the left child may be a bare tensor chain, the
        // right child needs parens if it is itself a Seq or Tensor.
        if (t.left().kind() == Term::Kind::Seq) {
            out.push_back('(');
            print_seq(out, t.left());
            out.push_back(')');
        } else {
            print_tensor(out, t.left());
        }
        out += " | ";
        print_atom(out, t.right());
    } else {
        print_atom(out, t);
    }
}

void print_seq(std::string& out, const Term& t) {
    if (t.kind() == Term::Kind::Seq) {
        print_seq(out, t.left());
        out += " ; ";
        if (t.right().kind() == Term::Kind::Seq) {
            out.push_back('(');
            print_seq(out, t.right());
            out.push_back(')');
        } else {
            print_tensor(out, t.right());
        }
    } else {
        print_tensor(out, t);
    }
}

void print_atom(std::string& out, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Gen: out += gen_name(t.gen_kind()); return;
        case Term::Kind::Swap: out += "swap"; return;
        case Term::Kind::Id: out += "id " + std::to_string(t.id_width()); return;
        case Term::Kind::Seq:
        case Term::Kind::Tensor:
            out.push_back('(');
            print_seq(out, t);
            out.push_back(')');
            return;
    }
}

}  // namespace

Term parse(std::string_view text) {
    Parser p{text};
    Term t = p.term();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return t;
}

std::string print(const Term& t) {
    std::string out;
    print_seq(out, t);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print(t); }

}  // namespace rdcirc
