#include "rdcirc/port_graph.hpp"

#include <cassert>
#include <numeric>

namespace rdcirc {

namespace {

// Wires are discovered as equivalence classes of terminals: pass-through
// points (Id, Swap, the two sides of a Seq) merge the terminals they connect.
struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Builder {
    UnionFind uf;
    std::vector<PortGraph::Node> nodes;
    // terminal -> endpoint role, filled in for node ports only
    struct Role {
        bool is_source = false;  // node out-port
        bool is_sink = false;    // node in-port
        int node = -1;
        int port = 0;
    };
    std::vector<Role> roles;

    int fresh() {
        int t = uf.make();
        roles.emplace_back();
        return t;
    }

    struct Interface {
        std::vector<int> ins, outs;
    };

    Interface build(const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Gen: {
                int node_id = static_cast<int>(nodes.size());
                nodes.push_back({t.gen_kind(), {}, {}});
                Interface f;
                Arity ar = gen_arity(t.gen_kind());
                for (int p = 0; p < ar.inputs; ++p) {
                    int term = fresh();
                    roles[term] = {false, true, node_id, p};
                    f.ins.push_back(term);
                }
                for (int p = 0; p < ar.outputs; ++p) {
                    int term = fresh();
                    roles[term] = {true, false, node_id, p};
                    f.outs.push_back(term);
                }
                return f;
            }
            case Term::Kind::Id: {
                Interface f;
                for (int i = 0; i < t.id_width(); ++i) {
                    int term = fresh();
                    f.ins.push_back(term);
                    f.outs.push_back(term);
                }
                return f;
            }
            case Term::Kind::Swap: {
                int a = fresh(), b = fresh();
                return {{a, b}, {b, a}};
            }
            case Term::Kind::Seq: {
                Interface f = build(t.left());
                Interface g = build(t.right());
                assert(f.outs.size() == g.ins.size());
                for (std::size_t i = 0; i < f.outs.size(); ++i) uf.unite(f.outs[i], g.ins[i]);
                return {std::move(f.ins), std::move(g.outs)};
            }
            case Term::Kind::Tensor: {
                Interface f = build(t.left());
                Interface g = build(t.right());
                f.ins.insert(f.ins.end(), g.ins.begin(), g.ins.end());
                f.outs.insert(f.outs.end(), g.outs.begin(), g.outs.end());
                return f;
            }
        }
        return {};
    }
};

}  // namespace

PortGraph to_port_graph(const Term& t) {
    Builder b;
    Builder::Interface top = b.build(t);

    PortGraph g;
    g.nodes = std::move(b.nodes);
    for (auto& n : g.nodes) {
        Arity ar = gen_arity(n.kind);
        n.in_wires.assign(ar.inputs, -1);
        n.out_wires.assign(ar.outputs, -1);
    }

    // One wire per terminal class; a class may carry a boundary source (from
    // a circuit input), a boundary sink, a node source, and a node sink, but
    // well-typedness guarantees exactly one source and one sink overall.
    std::vector<int> wire_of_class(b.roles.size(), -1);
    auto wire_for = [&](int term) {
        int c = b.uf.find(term);
        if (wire_of_class[c] == -1) {
            wire_of_class[c] = static_cast<int>(g.wires.size());
            g.wires.emplace_back();
        }
        return wire_of_class[c];
    };

    for (std::size_t term = 0; term < b.roles.size(); ++term) {
        const auto& role = b.roles[term];
        if (!role.is_source && !role.is_sink) continue;
        int w = wire_for(static_cast<int>(term));
        PortGraph::End end{PortGraph::End::Type::Node, role.node, role.port};
        if (role.is_source) {
            g.wires[w].source = end;
            g.nodes[role.node].out_wires[role.port] = w;
        } else {
            g.wires[w].sink = end;
            g.nodes[role.node].in_wires[role.port] = w;
        }
    }
    for (std::size_t i = 0; i < top.ins.size(); ++i) {
        int w = wire_for(top.ins[i]);
        g.wires[w].source = {PortGraph::End::Type::Boundary, -1, static_cast<int>(i)};
        g.input_wires.push_back(w);
    }
    for (std::size_t j = 0; j < top.outs.size(); ++j) {
        int w = wire_for(top.outs[j]);
        g.wires[w].sink = {PortGraph::End::Type::Boundary, -1, static_cast<int>(j)};
        g.output_wires.push_back(w);
    }
    return g;
}

bool is_acyclic(const PortGraph& g) {
    // Kahn's algorithm over nodes; edges follow wires between node ports.
    int n = static_cast<int>(g.nodes.size());
    std::vector<int> indeg(n, 0);
    for (const auto& w : g.wires)
        if (w.source.type == PortGraph::End::Type::Node &&
            w.sink.type == PortGraph::End::Type::Node)
            ++indeg[w.sink.node];
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        ++seen;
        for (int w : g.nodes[u].out_wires) {
            const auto& sink = g.wires[w].sink;
            if (sink.type == PortGraph::End::Type::Node && --indeg[sink.node] == 0)
                queue.push_back(sink.node);
        }
    }
    return seen == n;
}

}  // namespace rdcirc
