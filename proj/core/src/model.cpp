#include "rdcirc/model.hpp"

#include <cassert>
#include <memory>
#include <numeric>
#include <vector>

#include "rdcirc/compile.hpp"
#include "rdcirc/errors.hpp"
#include "rdcirc/wiring.hpp"

namespace rdcirc {

namespace {

// p + (p+q)*s : selects p when s = 0 and q when s = 1.
Term mux3() {
    std::vector<int> dup{0, 0, 1, 2};
    Term t = Term::seq(wiring(3, dup),
                       Term::tensor(Term::id(1), Term::tensor(Term::gen(Gen::Add), Term::id(1))));
    t = Term::seq(t, Term::tensor(Term::id(1), Term::gen(Gen::And)));
    return Term::seq(t, Term::gen(Gen::Add));
}

// eval over `a` data bits and `b` outputs: 2^a * b parameters followed by
// the a data bits, most significant address bit first. Defined by
// recursion on the address: select between the two half-tables with a mux
// layer driven by the leading bit.
Term eval_rec(int a, int b) {
    if (a == 0) return Term::id(b);
    int h = (1 << (a - 1)) * b;
    int rest = a - 1;

    // (theta[2h], x1, xrest) -> (theta_lo, xrest | theta_hi, xrest | x1 * b)
    std::vector<int> route;
    route.reserve(2 * (h + rest) + b);
    for (int i = 0; i < h; ++i) route.push_back(i);
    for (int i = 0; i < rest; ++i) route.push_back(2 * h + 1 + i);
    for (int i = 0; i < h; ++i) route.push_back(h + i);
    for (int i = 0; i < rest; ++i) route.push_back(2 * h + 1 + i);
    for (int k = 0; k < b; ++k) route.push_back(2 * h);

    Term sub = eval_rec(a - 1, b);
    Term t = Term::seq(wiring(2 * h + a, route),
                       Term::tensor(sub, Term::tensor(sub, Term::id(b))));

    // (lo[b], hi[b], s[b]) -> per-output triples -> b muxes
    std::vector<int> triples(3 * b);
    for (int k = 0; k < b; ++k) {
        triples[3 * k] = k;
        triples[3 * k + 1] = b + k;
        triples[3 * k + 2] = 2 * b + k;
    }
    std::vector<Term> muxes(b, mux3());
    return Term::seq(Term::seq(t, wiring(3 * b, triples)), tensor_all(muxes));
}

}  // namespace

Term eval_term(int data_bits, int label_bits) {
    assert(data_bits >= 0 && label_bits >= 1);
    return eval_rec(data_bits, label_bits);
}

ParamModel build_eval(int data_bits, int label_bits, long param_limit) {
    if (data_bits < 1 || label_bits < 1)
        throw RangeError("eval needs at least one data bit and one output");
    long p_long = (1L << data_bits) * label_bits;
    if (data_bits >= 30 || p_long > param_limit)
        throw LimitExceeded("eval over " + std::to_string(data_bits) + " data bits and " +
                            std::to_string(label_bits) + " outputs needs " +
                            std::to_string(p_long) + " parameters, limit " +
                            std::to_string(param_limit));
    int p = static_cast<int>(p_long);
    int a = data_bits, b = label_bits;

    BlackBoxFn forward{p + a, b, [p, a, b](const BitVec& in) {
                           int addr = 0;
                           for (int i = 0; i < a; ++i) addr = (addr << 1) | (in.get(p + i) ? 1 : 0);
                           BitVec out(b);
                           for (int k = 0; k < b; ++k) out.set(k, in.get(addr * b + k));
                           return out;
                       }};

    Term source = eval_term(a, b);
    return {"eval", p, a, b, std::move(forward), as_black_box(rdiff(source)), source};
}

ParamModel build_pseudo_linear(int n) {
    if (n < 1) throw RangeError("pseudoLinear needs at least one input bit");
    BlackBoxFn forward{2 * n, 1, [n](const BitVec& in) {
                           BitVec mask = in.slice(0, n);
                           BitVec x = in.slice(n, n);
                           int overlap = BitVec::popcount_and(mask, x);
                           BitVec out(1);
                           out.set(0, 4 * overlap < mask.popcount());
                           return out;
                       }};
    BlackBoxFn reverse = rdiff_brute(forward);
    return {"pseudoLinear", n, n, 1, std::move(forward), std::move(reverse), std::nullopt};
}

}  // namespace rdcirc
