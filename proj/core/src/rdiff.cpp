#include "rdcirc/rdiff.hpp"

#include <memory>
#include <numeric>

#include "rdcirc/compile.hpp"
#include "rdcirc/errors.hpp"
#include "rdcirc/port_graph.hpp"
#include "rdcirc/semantics.hpp"
#include "rdcirc/wiring.hpp"

namespace rdcirc {

BitVec BlackBoxFn::operator()(const BitVec& x) const {
    if (x.width() != in_arity)
        throw WidthMismatch("function takes " + std::to_string(in_arity) + " bits, got " +
                            std::to_string(x.width()));
    return apply(x);
}

BlackBoxFn as_black_box(const Term& t) {
    auto compiled = std::make_shared<CompiledCircuit>(t);
    return {t.inputs(), t.outputs(),
            [compiled](const BitVec& x) { return (*compiled)(x); }};
}

std::string SafetyReport::str() const {
    if (safe) return "safe";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "\n";
        s += "and@" + std::to_string(v.and_node) + " reachable-from input " +
             std::to_string(v.input);
    }
    return s;
}

SafetyReport is_safe(const Term& t) {
    PortGraph g = to_port_graph(t);

    // For every node in-port, the set of circuit inputs with a forward path
    // to it. Propagate one input at a time; circuits here are small.
    int n = static_cast<int>(g.nodes.size());
    std::vector<std::vector<bool>> port_reach(n);
    for (int i = 0; i < n; ++i)
        port_reach[i].assign(g.nodes[i].in_wires.size() * g.num_inputs(), false);

    for (int input = 0; input < g.num_inputs(); ++input) {
        std::vector<bool> node_reached(n, false);
        std::vector<int> frontier;
        auto follow = [&](int wire) {
            const auto& sink = g.wires[wire].sink;
            if (sink.type != PortGraph::End::Type::Node) return;
            port_reach[sink.node][sink.port * g.num_inputs() + input] = true;
            if (!node_reached[sink.node]) {
                node_reached[sink.node] = true;
                frontier.push_back(sink.node);
            }
        };
        follow(g.input_wires[input]);
        while (!frontier.empty()) {
            int u = frontier.back();
            frontier.pop_back();
            for (int w : g.nodes[u].out_wires) follow(w);
        }
    }

    SafetyReport report;
    int and_index = 0;
    for (int node = 0; node < n; ++node) {
        if (g.nodes[node].kind != Gen::And) continue;
        for (int input = 0; input < g.num_inputs(); ++input) {
            bool left = port_reach[node][0 * g.num_inputs() + input];
            bool right = port_reach[node][1 * g.num_inputs() + input];
            if (left && right) report.violations.push_back({and_index, input + 1});
        }
        ++and_index;
    }
    report.safe = report.violations.empty();
    return report;
}

namespace {

// Reverse derivatives of the generators, as circuits over the original
// inputs followed by the output-change inputs. These realize the
// Jacobian-transpose action of the polynomial reading; the brute-force
// operator is the independent cross-check in the test suite.
Term rdiff_gen(Gen g) {
    switch (g) {
        case Gen::Discard:  // (x) -> 0
            return Term::seq(Term::gen(Gen::Discard), Term::gen(Gen::Zero));
        case Gen::Copy: {  // (x, d1, d2) -> d1 + d2
            std::vector<int> keep{1, 2};
            return Term::seq(wiring(3, keep), Term::gen(Gen::Add));
        }
        case Gen::Zero:  // (d) -> ()
        case Gen::One:
            return Term::gen(Gen::Discard);
        case Gen::Add: {  // (x1, x2, d) -> (d, d)
            std::vector<int> fan{2, 2};
            return wiring(3, fan);
        }
        case Gen::And: {  // (x1, x2, d) -> (x2*d, x1*d)
            std::vector<int> route{1, 2, 0, 2};
            return Term::seq(wiring(3, route),
                             Term::tensor(Term::gen(Gen::And), Term::gen(Gen::And)));
        }
    }
    return {};
}

Term rdiff_rec(const Term& t) {
    int a = t.inputs(), b = t.outputs();
    switch (t.kind()) {
        case Term::Kind::Gen:
            return rdiff_gen(t.gen_kind());
        case Term::Kind::Id: {
            // (x, d) -> d
            std::vector<int> keep(a);
            std::iota(keep.begin(), keep.end(), a);
            return wiring(2 * a, keep);
        }
        case Term::Kind::Swap: {  // (x1, x2, d1, d2) -> (d2, d1)
            std::vector<int> route{3, 2};
            return wiring(4, route);
        }
        case Term::Kind::Seq: {
            // R[f;g](x, d) = R[f](x, R[g](f(x), d)), so x is copied to both
            // f and R[f].
            const Term& f = t.left();
            const Term& g = t.right();
            std::vector<int> dup(2 * a + b);
            for (int i = 0; i < a; ++i) dup[i] = dup[a + i] = i;
            for (int j = 0; j < b; ++j) dup[2 * a + j] = a + j;
            Term stage = Term::seq(wiring(a + b, dup),
                                   Term::tensor(Term::id(a), Term::tensor(f, Term::id(b))));
            stage = Term::seq(stage, Term::tensor(Term::id(a), rdiff_rec(g)));
            return Term::seq(stage, rdiff_rec(f));
        }
        case Term::Kind::Tensor: {
            // Route (x_f, x_g, d_f, d_g) to (x_f, d_f | x_g, d_g).
            const Term& f = t.left();
            const Term& g = t.right();
            int af = f.inputs(), ag = g.inputs();
            int bf = f.outputs(), bg = g.outputs();
            std::vector<int> route;
            route.reserve(af + bf + ag + bg);
            for (int i = 0; i < af; ++i) route.push_back(i);
            for (int j = 0; j < bf; ++j) route.push_back(af + ag + j);
            for (int i = 0; i < ag; ++i) route.push_back(af + i);
            for (int j = 0; j < bg; ++j) route.push_back(af + ag + bf + j);
            return Term::seq(wiring(af + ag + bf + bg, route),
                             Term::tensor(rdiff_rec(f), rdiff_rec(g)));
        }
    }
    return {};
}

}  // namespace

Term rdiff(const Term& t) { return rdiff_rec(t); }

BitVec partial_diff(const BlackBoxFn& f, int i, const BitVec& x) {
    if (i < 1 || i > f.in_arity)
        throw IndexOutOfRange("partial index " + std::to_string(i) + " outside 1.." +
                              std::to_string(f.in_arity));
    BitVec flipped = x;
    flipped.flip(i - 1);
    BitVec out = f(x);
    out ^= f(flipped);
    return out;
}

BlackBoxFn rdiff_brute(BlackBoxFn f) {
    int a = f.in_arity, b = f.out_arity;
    auto inner = std::make_shared<BlackBoxFn>(std::move(f));
    return {a + b, a, [inner, a, b](const BitVec& xd) {
                BitVec x = xd.slice(0, a);
                BitVec delta = xd.slice(a, b);
                BitVec fx = (*inner)(x);
                BitVec out(a);
                for (int i = 0; i < a; ++i) {
                    BitVec flipped = x;
                    flipped.flip(i);
                    BitVec partial = (*inner)(flipped);
                    partial ^= fx;
                    out.set(i, BitVec::dot(partial, delta));
                }
                return out;
            }};
}

namespace {

Term component_circuit(int a, const Poly& p) {
    if (p.is_zero()) return Term::seq(discard_all(a), Term::gen(Gen::Zero));
    // Fan the inputs out once per monomial, evaluate the monomials side by
    // side as pow towers under an AND tree, then fold with XOR.
    std::vector<int> route;
    std::vector<Term> blocks;
    for (const auto& m : p.monomials()) {
        if (m.is_constant()) {
            blocks.push_back(Term::gen(Gen::One));
            continue;
        }
        std::vector<Term> powers;
        for (auto [v, e] : m.factors()) {
            route.push_back(v - 1);
            powers.push_back(pow_tower(e));
        }
        blocks.push_back(Term::seq(tensor_all(powers),
                                   and_tree(static_cast<int>(powers.size()))));
    }
    Term t = Term::seq(wiring(a, route), tensor_all(blocks));
    return Term::seq(t, add_tree(static_cast<int>(blocks.size())));
}

Term tuple_circuit(const PolyTuple& pt) {
    int a = pt.arity_in;
    int b = static_cast<int>(pt.components.size());
    if (b == 0) return discard_all(a);
    // Copy the inputs once per component, then lay the components side by
    // side.
    std::vector<int> route(static_cast<std::size_t>(a) * b);
    for (int k = 0; k < b; ++k)
        for (int i = 0; i < a; ++i) route[static_cast<std::size_t>(k) * a + i] = i;
    std::vector<Term> comps;
    comps.reserve(b);
    for (const auto& p : pt.components) comps.push_back(component_circuit(a, p));
    return Term::seq(wiring(a, route), tensor_all(comps));
}

}  // namespace

Term canonical_form(const Term& t) { return tuple_circuit(to_poly(t)); }

Term safe_form(const Term& t) { return tuple_circuit(to_poly(t).multilinear()); }

Term rdiff_bool(const Term& t) { return rdiff(safe_form(t)); }

}  // namespace rdcirc
