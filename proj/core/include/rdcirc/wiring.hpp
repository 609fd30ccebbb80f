#pragma once

#include <span>
#include <vector>

#include "rdcirc/term.hpp"

namespace rdcirc {

/// Tensor fold of a list of terms; the empty list gives id 0.
Term tensor_all(std::span<const Term> parts);

/// Sequential fold; the list must be non-empty and arity-compatible.
Term seq_all(std::span<const Term> stages);

/// n -> n term realizing a permutation with adjacent swaps: output j carries
/// input sources[j] (0-based). sources must be a permutation of 0..n-1.
Term permutation(std::span<const int> sources);

/// The general copy/discard/permute layer: an n -> sources.size() term whose
/// output j carries input sources[j] (0-based). Inputs may be used any
/// number of times; unused inputs are discarded. Built from copy trees, a
/// swap network, and discards only; it contains no gates.
Term wiring(int n, std::span<const int> sources);

Term copy_tree(int k);     // 1 -> k; k = 0 discards
Term discard_all(int n);   // n -> 0
Term add_tree(int k);      // k -> 1; the empty sum is zero
Term and_tree(int k);      // k -> 1; the empty product is one

/// x -> x^k as a circuit: pow(1) = id, pow(k) = copy ; (id | pow(k-1)) ; and.
Term pow_tower(int k);     // pre: k >= 1

}  // namespace rdcirc
