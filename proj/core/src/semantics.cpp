#include "rdcirc/semantics.hpp"

#include <numeric>
#include <vector>

#include "rdcirc/errors.hpp"
#include "rdcirc/wiring.hpp"

namespace rdcirc {

namespace {

PolyTuple gen_poly(Gen g) {
    switch (g) {
        case Gen::Discard: return {1, {}};
        case Gen::Copy: return {1, {Poly::var(1), Poly::var(1)}};
        case Gen::Zero: return {0, {Poly::zero()}};
        case Gen::One: return {0, {Poly::one()}};
        case Gen::Add: return {2, {Poly::var(1) + Poly::var(2)}};
        case Gen::And: return {2, {Poly::var(1) * Poly::var(2)}};
    }
    return {};
}

}  // namespace

PolyTuple to_poly(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Gen: return gen_poly(t.gen_kind());
        case Term::Kind::Id: {
            PolyTuple p{t.id_width(), {}};
            for (int i = 1; i <= t.id_width(); ++i) p.components.push_back(Poly::var(i));
            return p;
        }
        case Term::Kind::Swap: return {2, {Poly::var(2), Poly::var(1)}};
        case Term::Kind::Seq: return substitute(to_poly(t.right()), to_poly(t.left()));
        case Term::Kind::Tensor: {
            PolyTuple f = to_poly(t.left());
            PolyTuple g = to_poly(t.right());
            PolyTuple out{f.arity_in + g.arity_in, std::move(f.components)};
            for (const auto& p : g.components)
                out.components.push_back(p.shift_vars(f.arity_in));
            return out;
        }
    }
    return {};
}

bool equiv_poly(const Term& c, const Term& d) {
    if (c.arity() != d.arity())
        throw ArityMismatch("comparing arities " + std::to_string(c.inputs()) + "->" +
                            std::to_string(c.outputs()) + " and " + std::to_string(d.inputs()) +
                            "->" + std::to_string(d.outputs()));
    return to_poly(c) == to_poly(d);
}

bool equiv_bool(const Term& c, const Term& d) {
    if (c.arity() != d.arity())
        throw ArityMismatch("comparing arities " + std::to_string(c.inputs()) + "->" +
                            std::to_string(c.outputs()) + " and " + std::to_string(d.inputs()) +
                            "->" + std::to_string(d.outputs()));
    return to_poly(c).multilinear() == to_poly(d).multilinear();
}

namespace {

Term pointwise_combine(const Term& f, const Term& g, Gen op) {
    if (f.arity() != g.arity())
        throw ArityMismatch("combining arities " + std::to_string(f.inputs()) + "->" +
                            std::to_string(f.outputs()) + " and " + std::to_string(g.inputs()) +
                            "->" + std::to_string(g.outputs()));
    int a = f.inputs(), b = f.outputs();

    // (x) -> (x, x) -> (f(x), g(x)) -> interleave -> op pairs
    std::vector<int> dup(2 * a);
    for (int i = 0; i < a; ++i) dup[i] = dup[a + i] = i;
    Term t = Term::seq(wiring(a, dup), Term::tensor(f, g));

    std::vector<int> interleave(2 * b);
    for (int k = 0; k < b; ++k) {
        interleave[2 * k] = k;
        interleave[2 * k + 1] = b + k;
    }
    t = Term::seq(t, wiring(2 * b, interleave));

    std::vector<Term> gates(b, Term::gen(op));
    return Term::seq(t, tensor_all(gates));
}

}  // namespace

Term circuit_add(const Term& f, const Term& g) { return pointwise_combine(f, g, Gen::Add); }

Term circuit_mul(const Term& f, const Term& g) { return pointwise_combine(f, g, Gen::And); }

Term circuit_zero(int a, int b) {
    std::vector<Term> zeros(b, Term::gen(Gen::Zero));
    return Term::seq(discard_all(a), tensor_all(zeros));
}

}  // namespace rdcirc
