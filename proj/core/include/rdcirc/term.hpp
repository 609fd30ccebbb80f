#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace rdcirc {

/// The six circuit generators. Fixed arities:
///   discard 1->0, copy 1->2, zero 0->1, add 2->1, one 0->1, and 2->1.
/// add is XOR and and is AND under the boolean reading.
enum class Gen : std::uint8_t { Discard, Copy, Zero, Add, One, And };

struct Arity {
    int inputs = 0;
    int outputs = 0;
    bool operator==(const Arity&) const = default;
};

/// A circuit term: generators, identities, the adjacent wire crossing, and
/// the two composition operators. Terms are immutable trees with structural
/// equality; semantic equivalence lives in semantics.hpp. Subterms are
/// shared, so copies are cheap and terms are safe to hand between threads.
class Term {
public:
    enum class Kind : std::uint8_t { Gen, Id, Swap, Seq, Tensor };

    Term() : Term(id(0)) {}

    static Term gen(Gen g);
    static Term id(int n);
    static Term swap();
    /// Diagrammatic composition f ; g. Throws TypeMismatch unless
    /// arity(f).outputs == arity(g).inputs.
    static Term seq(Term f, Term g);
    static Term tensor(Term f, Term g);

    Kind kind() const;
    Gen gen_kind() const;  // pre: kind() == Kind::Gen
    int id_width() const;  // pre: kind() == Kind::Id
    Term left() const;     // pre: Seq or Tensor
    Term right() const;    // pre: Seq or Tensor

    Arity arity() const;
    int inputs() const { return arity().inputs; }
    int outputs() const { return arity().outputs; }

    /// Number of Gen leaves (generator occurrences).
    int gen_count() const;

    bool operator==(const Term& other) const;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

Arity gen_arity(Gen g);
std::string gen_name(Gen g);

}  // namespace rdcirc
