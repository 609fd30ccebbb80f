#pragma once

#include <vector>

#include "rdcirc/term.hpp"

namespace rdcirc {

/// Directed wire graph of a circuit term. Nodes are generator occurrences in
/// diagram order (depth-first, left factor before right); Id and Swap leave
/// no nodes, only wires. Every wire runs from one source (a circuit input
/// port or a node out-port) to one sink (a circuit output port or a node
/// in-port).
struct PortGraph {
    struct Node {
        Gen kind;
        std::vector<int> in_wires;   // wire id per in-port
        std::vector<int> out_wires;  // wire id per out-port
    };

    /// One endpoint of a wire.
    struct End {
        enum class Type { Boundary, Node };
        Type type = Type::Boundary;
        int node = -1;  // node index when type == Node
        int port = 0;   // in/out-port index on the node, or boundary position
    };

    struct Wire {
        End source;  // circuit input port or node out-port
        End sink;    // circuit output port or node in-port
    };

    std::vector<Node> nodes;
    std::vector<Wire> wires;
    std::vector<int> input_wires;   // wire leaving circuit input i
    std::vector<int> output_wires;  // wire feeding circuit output j

    int num_inputs() const { return static_cast<int>(input_wires.size()); }
    int num_outputs() const { return static_cast<int>(output_wires.size()); }
};

PortGraph to_port_graph(const Term& t);

/// True when the node-to-node dependency relation has no cycle. Holds for
/// every well-typed term; exposed so tests can assert it.
bool is_acyclic(const PortGraph& g);

}  // namespace rdcirc
