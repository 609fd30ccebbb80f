#pragma once

#include "rdcirc/compile.hpp"
#include "rdcirc/poly.hpp"
#include "rdcirc/term.hpp"

namespace rdcirc {

/// Polynomial interpretation of a term: circuit input wire i (1-based, top
/// to bottom) is variable x_i. Seq is polynomial substitution, Tensor is
/// juxtaposition with the right factor's variables shifted.
PolyTuple to_poly(const Term& t);

/// Equality as tuples of Z2 polynomials: the equational theory that keeps
/// x^2 distinct from x. Polynomials are kept as canonical monomial sets, so
/// this is a data-structure identity. Throws ArityMismatch.
bool equiv_poly(const Term& c, const Term& d);

/// Equality as boolean functions: polynomial equality modulo x^2 = x.
/// Agrees with exhaustive truth-table comparison. Throws ArityMismatch.
bool equiv_bool(const Term& c, const Term& d);

/// Pointwise sum of two circuits of equal arity: copy the inputs to both
/// and XOR the paired outputs. to_poly(circuit_add(f, g)) is the
/// componentwise polynomial sum.
Term circuit_add(const Term& f, const Term& g);

/// Pointwise product; to_poly is the componentwise polynomial product.
Term circuit_mul(const Term& f, const Term& g);

/// The zero morphism a -> b: discard everything, emit zeros.
Term circuit_zero(int a, int b);

}  // namespace rdcirc
