#pragma once

#include <cstdint>
#include <vector>

#include "rdcirc/bitvec.hpp"
#include "rdcirc/term.hpp"

namespace rdcirc {

/// A term flattened to a straight-line program over bit registers. Copy,
/// swap, identity and discard cost nothing; they only reroute register
/// names, so evaluation touches one instruction per gate.
///
/// The program is immutable after construction; run() takes caller-owned
/// scratch so concurrent evaluation needs no locking.
class CompiledCircuit {
public:
    explicit CompiledCircuit(const Term& t);

    int inputs() const { return inputs_; }
    int outputs() const { return static_cast<int>(output_regs_.size()); }
    int register_count() const { return reg_count_; }

    BitVec operator()(const BitVec& input) const;  // throws WidthMismatch

    /// Evaluation with reused scratch; resizes scratch as needed.
    void run(const BitVec& input, BitVec& output, std::vector<std::uint8_t>& scratch) const;

private:
    struct Instr {
        enum class Op : std::uint8_t { And, Xor, Zero, One };
        Op op;
        int a = -1, b = -1, dst = -1;
    };
    std::vector<int> compile_rec(const Term& t, std::vector<int> ins);

    std::vector<Instr> instrs_;
    std::vector<int> output_regs_;
    int inputs_ = 0;
    int reg_count_ = 0;
};

/// One-shot interpretation of a term as a boolean function: discard drops,
/// copy duplicates, zero/one emit constants, add is XOR, and is AND, swap
/// exchanges. For repeated evaluation compile once instead.
BitVec eval_bool(const Term& t, const BitVec& input);

/// Full truth table of a term: entry k is the output at input
/// BitVec::from_index(a, k). Throws LimitExceeded past max_inputs wires.
std::vector<BitVec> truth_table(const Term& t, int max_inputs = 20);

}  // namespace rdcirc
