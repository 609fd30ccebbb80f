#pragma once

#include <optional>
#include <string>

#include "rdcirc/rdiff.hpp"
#include "rdcirc/term.hpp"

namespace rdcirc {

/// A trainable parametrised function: forward takes the parameter bits
/// followed by the data bits; reverse is its reverse derivative, used by
/// the training loop to turn an output error into a parameter change.
///
/// Circuit-backed models carry their source term and use the syntactic
/// reverse derivative; pure black-box models fall back to the brute-force
/// one.
struct ParamModel {
    std::string name;
    int params = 0;   // p
    int inputs = 0;   // a
    int outputs = 0;  // b
    BlackBoxFn forward;  // p+a -> b
    BlackBoxFn reverse;  // p+a+b -> p+a
    std::optional<Term> source;
};

/// The lookup-table model: 2^a * b parameters holding a full truth table,
/// forward(theta, x) reads entry theta[addr(x)*b + k] for output k, with
/// addr reading x as a big-endian binary number. The source circuit is a
/// mux tree selecting on the data bits; it is safe, and for a = b = 1 its
/// polynomial is x1 + (x1+x2)*x3.
///
/// Throws LimitExceeded when 2^a * b exceeds param_limit.
ParamModel build_eval(int data_bits, int label_bits, long param_limit = 4096);

/// The source term of the eval model (exposed for analysis and tests).
Term eval_term(int data_bits, int label_bits);

/// The masked-overlap threshold model over n-bit images: the parameters are
/// a feature mask m, and forward(m, x) = 1 iff popcount(m AND x) is
/// strictly less than a quarter of popcount(m) (an all-zero mask outputs
/// 0). Black-box model: reverse is the brute-force reverse derivative.
ParamModel build_pseudo_linear(int n);

}  // namespace rdcirc
