#pragma once

// Shared circuit vocabulary for the test suites: the equational theory as
// concrete term pairs, the two eval-circuit presentations, and a seeded
// generator of random well-typed terms.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rdcirc/model.hpp"
#include "rdcirc/rng.hpp"
#include "rdcirc/term.hpp"
#include "rdcirc/text.hpp"
#include "rdcirc/wiring.hpp"

namespace samples {

struct AxiomPair {
    std::string name;
    rdcirc::Term lhs, rhs;
};

/// The axiom set A: the circuit equations minus copy;and = id. Naturality
/// of copy/discard is instantiated at the four algebraic generators.
inline std::vector<AxiomPair> axioms_a() {
    using rdcirc::parse;
    std::vector<AxiomPair> pairs;
    auto axiom = [&](std::string name, const char* l, const char* r) {
        pairs.push_back({std::move(name), parse(l), parse(r)});
    };

    axiom("copy-comm", "copy ; swap", "copy");
    axiom("copy-assoc", "copy ; (id 1 | copy)", "copy ; (copy | id 1)");
    axiom("copy-unit", "copy ; (discard | id 1)", "id 1");

    axiom("copy-nat-zero", "zero ; copy", "zero | zero");
    axiom("copy-nat-one", "one ; copy", "one | one");
    axiom("copy-nat-add", "add ; copy",
          "(copy | copy) ; (id 1 | swap | id 1) ; (add | add)");
    axiom("copy-nat-and", "and ; copy",
          "(copy | copy) ; (id 1 | swap | id 1) ; (and | and)");
    axiom("discard-nat-zero", "zero ; discard", "id 0");
    axiom("discard-nat-one", "one ; discard", "id 0");
    axiom("discard-nat-add", "add ; discard", "discard | discard");
    axiom("discard-nat-and", "and ; discard", "discard | discard");

    axiom("add-comm", "swap ; add", "add");
    axiom("add-assoc", "(add | id 1) ; add", "(id 1 | add) ; add");
    axiom("add-unit", "(zero | id 1) ; add", "id 1");

    axiom("and-comm", "swap ; and", "and");
    axiom("and-assoc", "(and | id 1) ; and", "(id 1 | and) ; and");
    axiom("and-unit", "(one | id 1) ; and", "id 1");

    axiom("copy-add", "copy ; add", "discard ; zero");
    axiom("distrib", "(id 1 | add) ; and",
          "(copy | id 1 | id 1) ; (id 1 | swap | id 1) ; (and | and) ; add");

    return pairs;
}

/// The one equation of the boolean theory that A drops.
inline AxiomPair boolean_only_axiom() {
    return {"copy-and", rdcirc::parse("copy ; and"), rdcirc::parse("id 1")};
}

/// The lookup circuit over one data bit: theta1 + (theta1 + theta2) * x.
inline rdcirc::Term eval_circuit_2_1() { return rdcirc::eval_term(1, 1); }

/// A boolean-equivalent but unsafe presentation of the same function:
/// theta1 + s*(s*x) with s = theta1 + theta2. Both in-ports of the
/// rightmost AND are reachable from theta1 and from theta2.
inline rdcirc::Term unsafe_eval_variant() {
    using rdcirc::Term;
    std::vector<int> route{0, 0, 1, 2};
    Term t = rdcirc::wiring(3, route);  // (t1, t1, t2, x)
    t = Term::seq(t, Term::tensor(Term::id(1),
                                  Term::tensor(Term::gen(rdcirc::Gen::Add), Term::id(1))));
    t = Term::seq(t, Term::tensor(Term::id(1),
                                  Term::tensor(Term::gen(rdcirc::Gen::Copy), Term::id(1))));
    t = Term::seq(t, Term::tensor(Term::id(2), Term::gen(rdcirc::Gen::And)));
    t = Term::seq(t, Term::tensor(Term::id(1), Term::gen(rdcirc::Gen::And)));
    return Term::seq(t, Term::gen(rdcirc::Gen::Add));
}

/// Rewrites structural matches of the commutativity axioms (swap;add = add,
/// swap;and = and, copy;swap = copy) in both directions, at random. Every
/// rewrite preserves the polynomial reading and safety, so the result is an
/// A-equal term of the same arity.
template <typename Rng>
rdcirc::Term comm_rewrite(const rdcirc::Term& t, Rng& rng) {
    using rdcirc::Gen;
    using rdcirc::Term;
    auto flip = [&rng] { return rng() % 4 == 0; };
    switch (t.kind()) {
        case Term::Kind::Gen:
            if (t.gen_kind() == Gen::Add && flip()) return rdcirc::parse("swap ; add");
            if (t.gen_kind() == Gen::And && flip()) return rdcirc::parse("swap ; and");
            if (t.gen_kind() == Gen::Copy && flip()) return rdcirc::parse("copy ; swap");
            return t;
        case Term::Kind::Id:
        case Term::Kind::Swap:
            return t;
        case Term::Kind::Seq: {
            // contract swap;add -> add, swap;and -> and, copy;swap -> copy
            if (t.left().kind() == Term::Kind::Swap && t.right().kind() == Term::Kind::Gen &&
                (t.right().gen_kind() == Gen::Add || t.right().gen_kind() == Gen::And) && flip())
                return t.right();
            if (t.right().kind() == Term::Kind::Swap && t.left().kind() == Term::Kind::Gen &&
                t.left().gen_kind() == Gen::Copy && flip())
                return t.left();
            return Term::seq(comm_rewrite(t.left(), rng), comm_rewrite(t.right(), rng));
        }
        case Term::Kind::Tensor:
            return Term::tensor(comm_rewrite(t.left(), rng), comm_rewrite(t.right(), rng));
    }
    return t;
}

/// Seeded generator of random well-typed terms.
class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(rdcirc::splitmix64(seed)) {}

    /// A term with exactly n input wires.
    rdcirc::Term with_inputs(int n, int depth) {
        using rdcirc::Term;
        if (depth <= 0 || pick(4) == 0) return leaf_layer(n);
        if (pick(2) == 0) {
            Term f = with_inputs(n, depth - 1);
            Term g = with_inputs(f.outputs(), depth - 1);
            return Term::seq(f, g);
        }
        int n1 = pick(n + 1);
        return Term::tensor(with_inputs(n1, depth - 1), with_inputs(n - n1, depth - 1));
    }

    rdcirc::Term term(int max_inputs, int depth) {
        return with_inputs(pick(max_inputs) + 1, depth);
    }

    /// A term of the exact requested arity, by rejection; returns id-based
    /// padding as a last resort so callers always get a usable term.
    rdcirc::Term with_arity(int a, int b, int depth = 3, int tries = 500) {
        for (int i = 0; i < tries; ++i) {
            rdcirc::Term t = with_inputs(a, depth);
            if (t.outputs() == b) return t;
        }
        // discard everything, emit constants
        std::vector<rdcirc::Term> parts(a, rdcirc::Term::gen(rdcirc::Gen::Discard));
        for (int k = 0; k < b; ++k) parts.push_back(rdcirc::Term::gen(rdcirc::Gen::Zero));
        return rdcirc::tensor_all(parts);
    }

    std::uint64_t raw() { return rng_(); }
    int pick(int n) { return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<unsigned>(n)); }

private:
    rdcirc::Term leaf_layer(int n) {
        using rdcirc::Gen;
        using rdcirc::Term;
        std::vector<Term> parts;
        int remaining = n;
        int constants = 0;
        while (remaining > 0) {
            if (constants < 2 && pick(6) == 0) {
                parts.push_back(Term::gen(pick(2) ? Gen::Zero : Gen::One));
                ++constants;
                continue;
            }
            if (remaining >= 2 && pick(2) == 0) {
                switch (pick(3)) {
                    case 0: parts.push_back(Term::gen(Gen::Add)); break;
                    case 1: parts.push_back(Term::gen(Gen::And)); break;
                    default: parts.push_back(Term::swap()); break;
                }
                remaining -= 2;
                continue;
            }
            switch (pick(3)) {
                case 0: parts.push_back(Term::gen(Gen::Discard)); break;
                case 1: parts.push_back(Term::gen(Gen::Copy)); break;
                default: parts.push_back(Term::id(1)); break;
            }
            remaining -= 1;
        }
        if (n == 0 && pick(2) == 0)
            parts.push_back(Term::gen(pick(2) ? Gen::Zero : Gen::One));
        return rdcirc::tensor_all(parts);
    }

    std::mt19937_64 rng_;
};

}  // namespace samples
