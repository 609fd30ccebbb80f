#include "rdcirc/term.hpp"

#include <cassert>

#include "rdcirc/errors.hpp"
#include "rdcirc/text.hpp"

namespace rdcirc {

struct Term::Node {
    Kind kind;
    Gen gen = Gen::Discard;
    int width = 0;  // Id only
    std::shared_ptr<const Node> sub_left, sub_right;
    Arity ar;
    int gens = 0;
};

Arity gen_arity(Gen g) {
    switch (g) {
        case Gen::Discard: return {1, 0};
        case Gen::Copy: return {1, 2};
        case Gen::Zero: return {0, 1};
        case Gen::Add: return {2, 1};
        case Gen::One: return {0, 1};
        case Gen::And: return {2, 1};
    }
    return {};
}

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::Discard: return "discard";
        case Gen::Copy: return "copy";
        case Gen::Zero: return "zero";
        case Gen::Add: return "add";
        case Gen::One: return "one";
        case Gen::And: return "and";
    }
    return {};
}

Term Term::gen(Gen g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Gen;
    n->gen = g;
    n->ar = gen_arity(g);
    n->gens = 1;
    return Term(std::move(n));
}

Term Term::id(int n_wires) {
    assert(n_wires >= 0);
    auto n = std::make_shared<Node>();
    n->kind = Kind::Id;
    n->width = n_wires;
    n->ar = {n_wires, n_wires};
    return Term(std::move(n));
}

Term Term::swap() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Swap;
    n->ar = {2, 2};
    return Term(std::move(n));
}

Term Term::seq(Term f, Term g) {
    if (f.arity().outputs != g.arity().inputs)
        throw TypeMismatch("cannot compose " + print(f) + " : " +
                           std::to_string(f.arity().inputs) + "->" +
                           std::to_string(f.arity().outputs) + " with " + print(g) + " : " +
                           std::to_string(g.arity().inputs) + "->" +
                           std::to_string(g.arity().outputs));
    auto n = std::make_shared<Node>();
    n->kind = Kind::Seq;
    n->ar = {f.arity().inputs, g.arity().outputs};
    n->gens = f.gen_count() + g.gen_count();
    n->sub_left = std::move(f.node_);
    n->sub_right = std::move(g.node_);
    return Term(std::move(n));
}

Term Term::tensor(Term f, Term g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tensor;
    n->ar = {f.arity().inputs + g.arity().inputs, f.arity().outputs + g.arity().outputs};
    n->gens = f.gen_count() + g.gen_count();
    n->sub_left = std::move(f.node_);
    n->sub_right = std::move(g.node_);
    return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

Gen Term::gen_kind() const {
    assert(node_->kind == Kind::Gen);
    return node_->gen;
}

int Term::id_width() const {
    assert(node_->kind == Kind::Id);
    return node_->width;
}

Term Term::left() const {
    assert(node_->kind == Kind::Seq || node_->kind == Kind::Tensor);
    return Term(node_->sub_left);
}

Term Term::right() const {
    assert(node_->kind == Kind::Seq || node_->kind == Kind::Tensor);
    return Term(node_->sub_right);
}

Arity Term::arity() const { return node_->ar; }

int Term::gen_count() const { return node_->gens; }

bool Term::operator==(const Term& other) const {
    if (node_ == other.node_) return true;
    if (node_->kind != other.node_->kind) return false;
    switch (node_->kind) {
        case Kind::Gen: return node_->gen == other.node_->gen;
        case Kind::Id: return node_->width == other.node_->width;
        case Kind::Swap: return true;
        case Kind::Seq:
        case Kind::Tensor:
            return Term(node_->sub_left) == Term(other.node_->sub_left) &&
                   Term(node_->sub_right) == Term(other.node_->sub_right);
    }
    return false;
}

}  // namespace rdcirc
