#include "rdcirc/compile.hpp"

#include <cassert>

#include "rdcirc/errors.hpp"

namespace rdcirc {

std::vector<int> CompiledCircuit::compile_rec(const Term& t, std::vector<int> ins) {
    using Op = Instr::Op;
    switch (t.kind()) {
        case Term::Kind::Gen:
            switch (t.gen_kind()) {
                case Gen::Discard: return {};
                case Gen::Copy: return {ins[0], ins[0]};
                case Gen::Zero: {
                    int r = reg_count_++;
                    instrs_.push_back({Op::Zero, -1, -1, r});
                    return {r};
                }
                case Gen::One: {
                    int r = reg_count_++;
                    instrs_.push_back({Op::One, -1, -1, r});
                    return {r};
                }
                case Gen::Add: {
                    int r = reg_count_++;
                    instrs_.push_back({Op::Xor, ins[0], ins[1], r});
                    return {r};
                }
                case Gen::And: {
                    int r = reg_count_++;
                    instrs_.push_back({Op::And, ins[0], ins[1], r});
                    return {r};
                }
            }
            return {};
        case Term::Kind::Id: return ins;
        case Term::Kind::Swap: return {ins[1], ins[0]};
        case Term::Kind::Seq:
            return compile_rec(t.right(), compile_rec(t.left(), std::move(ins)));
        case Term::Kind::Tensor: {
            int split = t.left().inputs();
            std::vector<int> left_ins(ins.begin(), ins.begin() + split);
            std::vector<int> right_ins(ins.begin() + split, ins.end());
            std::vector<int> out = compile_rec(t.left(), std::move(left_ins));
            std::vector<int> right_out = compile_rec(t.right(), std::move(right_ins));
            out.insert(out.end(), right_out.begin(), right_out.end());
            return out;
        }
    }
    return {};
}

CompiledCircuit::CompiledCircuit(const Term& t) : inputs_(t.inputs()), reg_count_(t.inputs()) {
    std::vector<int> input_regs(inputs_);
    for (int i = 0; i < inputs_; ++i) input_regs[i] = i;
    output_regs_ = compile_rec(t, std::move(input_regs));
    assert(static_cast<int>(output_regs_.size()) == t.outputs());
}

BitVec CompiledCircuit::operator()(const BitVec& input) const {
    BitVec out;
    std::vector<std::uint8_t> scratch;
    run(input, out, scratch);
    return out;
}

void CompiledCircuit::run(const BitVec& input, BitVec& output,
                          std::vector<std::uint8_t>& scratch) const {
    if (input.width() != inputs_)
        throw WidthMismatch("circuit takes " + std::to_string(inputs_) + " bits, got " +
                            std::to_string(input.width()));
    scratch.resize(reg_count_);
    for (int i = 0; i < inputs_; ++i) scratch[i] = input.get(i);
    for (const auto& ins : instrs_) {
        switch (ins.op) {
            case Instr::Op::And: scratch[ins.dst] = scratch[ins.a] & scratch[ins.b]; break;
            case Instr::Op::Xor: scratch[ins.dst] = scratch[ins.a] ^ scratch[ins.b]; break;
            case Instr::Op::Zero: scratch[ins.dst] = 0; break;
            case Instr::Op::One: scratch[ins.dst] = 1; break;
        }
    }
    if (output.width() != static_cast<int>(output_regs_.size()))
        output = BitVec(static_cast<int>(output_regs_.size()));
    for (std::size_t j = 0; j < output_regs_.size(); ++j)
        output.set(static_cast<int>(j), scratch[output_regs_[j]] != 0);
    return;
}

BitVec eval_bool(const Term& t, const BitVec& input) {
    return CompiledCircuit(t)(input);
}

std::vector<BitVec> truth_table(const Term& t, int max_inputs) {
    int a = t.inputs();
    if (a > max_inputs)
        throw LimitExceeded("truth table over " + std::to_string(a) + " inputs exceeds limit " +
                            std::to_string(max_inputs));
    CompiledCircuit c(t);
    std::vector<BitVec> table;
    table.reserve(std::size_t{1} << a);
    std::vector<std::uint8_t> scratch;
    BitVec out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << a); ++k) {
        c.run(BitVec::from_index(a, k), out, scratch);
        table.push_back(out);
    }
    return table;
}

}  // namespace rdcirc
