#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdcirc/bitvec.hpp"

namespace rdcirc {

/// A power product of variables x1, x2, ... Variables are 1-based and an
/// absent variable has exponent 0; stored exponents are always >= 1.
/// Ordering is graded lexicographic so polynomial printing is deterministic.
class Monomial {
public:
    Monomial() = default;  // the constant 1
    static Monomial var(int index, int exponent = 1);

    bool is_constant() const { return factors_.empty(); }
    int degree() const;
    int max_var() const { return factors_.empty() ? 0 : factors_.back().first; }
    std::span<const std::pair<int, int>> factors() const { return factors_; }

    Monomial times(const Monomial& other) const;  // exponent-wise addition
    Monomial multilinear() const;                 // every exponent clamped to 1
    Monomial shift_vars(int offset) const;

    /// Value at a point: the product of bit^exponent per factor.
    bool eval(const BitVec& point) const;

    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    std::vector<std::pair<int, int>> factors_;  // (variable, exponent), sorted by variable
};

/// A multivariate polynomial over Z2: a set of monomials, each with implicit
/// coefficient 1. The empty set is 0; the set {1} is the constant 1.
/// Addition is symmetric difference, so p + p = 0.
class Poly {
public:
    Poly() = default;  // zero
    static Poly zero() { return {}; }
    static Poly one();
    static Poly var(int index);
    static Poly of(std::vector<Monomial> monomials);  // folds duplicates mod 2

    bool is_zero() const { return monomials_.empty(); }
    std::span<const Monomial> monomials() const { return monomials_; }
    int max_var() const;
    /// True when every exponent is in {0, 1}.
    bool is_multilinear() const;

    Poly operator+(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly pow(int k) const;

    /// Replace variable x_j by replacements[j-1] and expand.
    Poly substitute(std::span<const Poly> replacements) const;
    /// x^k -> x for every k >= 1; collapsing duplicates cancel in pairs.
    Poly multilinear() const;
    Poly shift_vars(int offset) const;

    bool eval(const BitVec& point) const;  // XOR over monomial values

    std::string str() const;  // "x1 + x1*x3 + x2*x3", "x1^2", "1", "0"

    bool operator==(const Poly& other) const = default;

private:
    std::vector<Monomial> monomials_;  // strictly ascending (graded lex)
};

/// A tuple of polynomials in a fixed number of variables: the denotation of
/// a circuit with arity_in inputs and components.size() outputs.
struct PolyTuple {
    int arity_in = 0;
    std::vector<Poly> components;

    PolyTuple multilinear() const;
    BitVec eval(const BitVec& point) const;
    std::string str() const;  // components joined by "; "

    bool operator==(const PolyTuple& other) const = default;
};

/// Composition q(p1, ..., pb): each component of q with x_j replaced by
/// p.components[j-1]. Throws ArityMismatch unless q.arity_in ==
/// p.components.size().
PolyTuple substitute(const PolyTuple& q, const PolyTuple& p);

}  // namespace rdcirc
