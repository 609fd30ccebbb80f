#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rdcirc/bitvec.hpp"
#include "rdcirc/term.hpp"

namespace rdcirc {

/// A boolean function of unknown symbolic form. apply must be total,
/// deterministic and safe to invoke concurrently.
struct BlackBoxFn {
    int in_arity = 0;
    int out_arity = 0;
    std::function<BitVec(const BitVec&)> apply;

    BitVec operator()(const BitVec& x) const;  // throws WidthMismatch
};

/// Wrap a term as a black-box function (compiled once).
BlackBoxFn as_black_box(const Term& t);

struct SafetyViolation {
    int and_node;  // 0-based index among And nodes, in diagram order
    int input;     // 1-based circuit input port reaching both in-ports
    bool operator==(const SafetyViolation&) const = default;
};

/// A circuit is safe when no And gate has both in-ports reachable from the
/// same circuit input port.
struct SafetyReport {
    bool safe = true;
    std::vector<SafetyViolation> violations;  // all of them, not just the first

    /// One line per violation: "and@<node-id> reachable-from input <i>".
    std::string str() const;
};

SafetyReport is_safe(const Term& t);

/// The syntactic reverse-derivative operator: for t : a -> b, a term of
/// arity (a+b) -> a taking the a original inputs followed by the b
/// output-change inputs, and producing the input changes in input order.
///
/// Sound for the polynomial reading of circuits (equiv_poly is preserved by
/// every axiom except copy;and = id); on safe circuits it agrees with
/// rdiff_brute of the boolean reading. Not sound on unsafe circuits.
Term rdiff(const Term& t);

/// i-th partial difference: f(x) + f(x + e_i), with i 1-based.
/// Throws IndexOutOfRange.
BitVec partial_diff(const BlackBoxFn& f, int i, const BitVec& x);

/// Brute-force reverse derivative of a black box: component i of the result
/// at (x, delta) is the Z2 dot product of the i-th partial difference at x
/// with delta. Costs in_arity + 1 evaluations of f per call.
BlackBoxFn rdiff_brute(BlackBoxFn f);

/// The sum-of-monomials layout of to_poly(t): per output, monomials are
/// realized as AND trees of pow towers over projections and summed with XOR
/// trees. equiv_poly(t, canonical_form(t)) always holds.
Term canonical_form(const Term& t);

/// A safe representative of t's boolean-function class: the canonical
/// circuit of the multilinear reduction of to_poly(t). The result passes
/// is_safe and is equiv_bool to t.
Term safe_form(const Term& t);

/// Reverse derivative for the boolean reading: rdiff(safe_form(t)).
/// Well-defined up to equiv_bool regardless of the representative chosen.
Term rdiff_bool(const Term& t);

}  // namespace rdcirc
