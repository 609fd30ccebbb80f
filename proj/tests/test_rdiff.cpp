#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <memory>

#include "rdcirc/compile.hpp"
#include "rdcirc/errors.hpp"
#include "rdcirc/rdiff.hpp"
#include "rdcirc/semantics.hpp"
#include "rdcirc/text.hpp"
#include "samples.hpp"

using namespace rdcirc;

namespace {

/// Exhaustive agreement between the syntactic and the brute-force reverse
/// derivative of a term, the independent oracle for rdiff's generator
/// table and composition rules. Only meaningful for safe terms.
bool agrees_with_brute(const Term& t) {
    int a = t.inputs(), b = t.outputs();
    CompiledCircuit syntactic(rdiff(t));
    BlackBoxFn brute = rdiff_brute(as_black_box(t));
    std::vector<std::uint8_t> scratch;
    BitVec got;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << (a + b)); ++k) {
        BitVec in = BitVec::from_index(a + b, k);
        syntactic.run(in, got, scratch);
        if (got != brute(in)) return false;
    }
    return true;
}

Term gen_term(Gen g) { return Term::gen(g); }

}  // namespace

TEST_CASE("partial differences of the basic gates") {
    BlackBoxFn f_and = as_black_box(gen_term(Gen::And));
    CHECK(partial_diff(f_and, 1, {0, 1}) == BitVec{1});
    CHECK(partial_diff(f_and, 1, {0, 0}) == BitVec{0});
    CHECK(partial_diff(f_and, 2, {1, 0}) == BitVec{1});

    BlackBoxFn ident = as_black_box(Term::id(1));
    CHECK(partial_diff(ident, 1, {0}) == BitVec{1});
    CHECK(partial_diff(ident, 1, {1}) == BitVec{1});

    CHECK_THROWS_AS(partial_diff(f_and, 0, {0, 0}), IndexOutOfRange);
    CHECK_THROWS_AS(partial_diff(f_and, 3, {0, 0}), IndexOutOfRange);
}

TEST_CASE("brute-force reverse derivative of AND and XOR") {
    BlackBoxFn r_and = rdiff_brute(as_black_box(gen_term(Gen::And)));
    CHECK(r_and.in_arity == 3);
    CHECK(r_and.out_arity == 2);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int d = 0; d < 2; ++d) {
                BitVec expected{x2 & d, x1 & d};
                CHECK(r_and(BitVec{x1, x2, d}) == expected);
            }

    BlackBoxFn r_xor = rdiff_brute(as_black_box(gen_term(Gen::Add)));
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            for (int d = 0; d < 2; ++d)
                CHECK(r_xor(BitVec{x1, x2, d}) == BitVec{d, d});
}

TEST_CASE("zero output change means zero input change") {
    samples::TermGen gen(3);
    for (int i = 0; i < 50; ++i) {
        Term t = gen.term(4, 3);
        BlackBoxFn r = rdiff_brute(as_black_box(t));
        BitVec x = BitVec::from_index(t.inputs(), gen.raw() & ((1u << t.inputs()) - 1));
        BitVec in = x.concat(BitVec(t.outputs()));
        CHECK(r(in).is_zero());
    }
}

TEST_CASE("brute-force costs in_arity + 1 evaluations per call") {
    auto calls = std::make_shared<std::atomic<int>>(0);
    BlackBoxFn counted{3, 1, [calls](const BitVec& x) {
                           ++*calls;
                           BitVec out(1);
                           out.set(0, x.popcount() % 2);
                           return out;
                       }};
    BlackBoxFn r = rdiff_brute(counted);
    r(BitVec(4));
    CHECK(*calls == 4);
}

TEST_CASE("rdiff generator table") {
    // R[id](x, d) = d
    CHECK(equiv_poly(rdiff(Term::id(1)), parse("discard | id 1")));
    // R[and](x1, x2, d) = (x2 d, x1 d)
    PolyTuple r_and = to_poly(rdiff(gen_term(Gen::And)));
    CHECK(r_and.components ==
          std::vector<Poly>{Poly::var(2) * Poly::var(3), Poly::var(1) * Poly::var(3)});
    // R[add](x1, x2, d) = (d, d)
    CHECK(to_poly(rdiff(gen_term(Gen::Add))).components ==
          std::vector<Poly>{Poly::var(3), Poly::var(3)});
    // R[copy](x, d1, d2) = d1 + d2
    CHECK(to_poly(rdiff(gen_term(Gen::Copy))).components ==
          std::vector<Poly>{Poly::var(2) + Poly::var(3)});
    // R[discard](x) = 0
    CHECK(to_poly(rdiff(gen_term(Gen::Discard))).components ==
          std::vector<Poly>{Poly::zero()});
    // R[swap](x1, x2, d1, d2) = (d2, d1)
    CHECK(to_poly(rdiff(Term::swap())).components ==
          std::vector<Poly>{Poly::var(4), Poly::var(3)});
    // R[zero] and R[one] discard the change
    CHECK(to_poly(rdiff(gen_term(Gen::Zero))).components.empty());
    CHECK(to_poly(rdiff(gen_term(Gen::One))).components.empty());
}

TEST_CASE("rdiff arity law on random terms") {
    samples::TermGen gen(5);
    for (int i = 0; i < 200; ++i) {
        Term t = gen.term(4, 4);
        Arity r = rdiff(t).arity();
        CHECK(r.inputs == t.inputs() + t.outputs());
        CHECK(r.outputs == t.inputs());
    }
}

TEST_CASE("rdiff of generators and small compositions matches the brute force") {
    for (Gen g : {Gen::Discard, Gen::Copy, Gen::Zero, Gen::Add, Gen::One, Gen::And})
        CHECK(agrees_with_brute(gen_term(g)));
    CHECK(agrees_with_brute(Term::swap()));
    CHECK(agrees_with_brute(Term::id(3)));
    CHECK(agrees_with_brute(samples::eval_circuit_2_1()));
    CHECK(agrees_with_brute(parse("(add | one) ; and")));
    CHECK(agrees_with_brute(parse("copy ; (discard | copy)")));
}

TEST_CASE("rdiff on random safe terms matches the brute force") {
    samples::TermGen gen(9);
    int checked = 0;
    while (checked < 150) {
        Term t = gen.term(4, 4);
        if (t.inputs() + t.outputs() > 8) continue;
        if (!is_safe(t).safe) continue;
        CHECK(agrees_with_brute(t));
        ++checked;
    }
}

TEST_CASE("rdiff matches the brute force on wide safe terms, sampled inputs") {
    samples::TermGen gen(77);
    int checked = 0;
    while (checked < 10) {
        Term t = gen.term(8, 4);
        int width = t.inputs() + t.outputs();
        if (width <= 10 || width > 16) continue;
        if (!is_safe(t).safe) continue;
        ++checked;
        CompiledCircuit syntactic(rdiff(t));
        BlackBoxFn brute = rdiff_brute(as_black_box(t));
        for (int s = 0; s < 500; ++s) {
            BitVec in = BitVec::from_index(width, gen.raw() & ((1ull << width) - 1));
            CHECK(syntactic(in) == brute(in));
        }
    }
}

TEST_CASE("rdiff disagrees with the brute force on the unsafe circuit") {
    // R[copy;and] collapses to 0 in the polynomial reading, while the
    // boolean partial of x*x = x is the constant 1.
    Term t = parse("copy ; and");
    CHECK(to_poly(rdiff(t)).components == std::vector<Poly>{Poly::zero()});
    CHECK_FALSE(equiv_poly(rdiff(t), rdiff(Term::id(1))));
    CHECK_FALSE(agrees_with_brute(t));
}

TEST_CASE("axiom invariance of rdiff") {
    for (const auto& axiom : samples::axioms_a()) {
        CAPTURE(axiom.name);
        CHECK(equiv_poly(rdiff(axiom.lhs), rdiff(axiom.rhs)));
    }
    auto excluded = samples::boolean_only_axiom();
    CHECK_FALSE(equiv_poly(rdiff(excluded.lhs), rdiff(excluded.rhs)));
}

TEST_CASE("safety analysis of the characteristic circuits") {
    SafetyReport copy_and = is_safe(parse("copy ; and"));
    CHECK_FALSE(copy_and.safe);
    REQUIRE(copy_and.violations.size() == 1);
    CHECK(copy_and.violations[0] == SafetyViolation{0, 1});
    CHECK(copy_and.str() == "and@0 reachable-from input 1");

    CHECK(is_safe(samples::eval_circuit_2_1()).safe);

    SafetyReport unsafe = is_safe(samples::unsafe_eval_variant());
    CHECK_FALSE(unsafe.safe);
    // Both inputs of the rightmost AND are reachable from theta1 and theta2.
    REQUIRE(unsafe.violations.size() == 2);
    CHECK(unsafe.violations[0] == SafetyViolation{1, 1});
    CHECK(unsafe.violations[1] == SafetyViolation{1, 2});

    CHECK(is_safe(Term::id(4)).safe);
    CHECK(is_safe(gen_term(Gen::And)).safe);
}

TEST_CASE("safe terms have multilinear polynomials") {
    samples::TermGen gen(13);
    int safe_seen = 0;
    for (int i = 0; i < 300; ++i) {
        Term t = gen.term(4, 4);
        if (!is_safe(t).safe) continue;
        ++safe_seen;
        CHECK(to_poly(t).multilinear() == to_poly(t));
    }
    CHECK(safe_seen > 50);
}

TEST_CASE("canonical form") {
    Term square = parse("copy ; and");
    Term canon = canonical_form(square);
    CHECK(to_poly(canon).components == std::vector<Poly>{Poly::var(1) * Poly::var(1)});
    CHECK(equiv_poly(square, canon));

    CHECK(equiv_poly(canonical_form(gen_term(Gen::Add)), gen_term(Gen::Add)));

    Term eval = samples::eval_circuit_2_1();
    CHECK(equiv_poly(canonical_form(eval), eval));

    samples::TermGen gen(17);
    for (int i = 0; i < 100; ++i) {
        Term t = gen.term(4, 4);
        CHECK(equiv_poly(canonical_form(t), t));
    }
}

TEST_CASE("pow towers") {
    CHECK(to_poly(pow_tower(1)).components == std::vector<Poly>{Poly::var(1)});
    CHECK(to_poly(pow_tower(3)).components == std::vector<Poly>{Poly::var(1).pow(3)});
}

TEST_CASE("safe form of the characteristic circuits") {
    Term square = parse("copy ; and");
    CHECK(equiv_poly(safe_form(square), Term::id(1)));

    Term unsafe = samples::unsafe_eval_variant();
    Term safe = safe_form(unsafe);
    CHECK(is_safe(safe).safe);
    CHECK(to_poly(safe).str() == "x1 + x1*x3 + x2*x3");
}

TEST_CASE("safe form contract on random terms") {
    samples::TermGen gen(19);
    for (int i = 0; i < 150; ++i) {
        Term t = gen.term(4, 4);
        Term safe = safe_form(t);
        CHECK(is_safe(safe).safe);
        CHECK(equiv_bool(t, safe));
        if (is_safe(t).safe)
            // already-safe inputs keep their polynomial exactly
            CHECK(equiv_poly(safe, t));
    }
}

TEST_CASE("boolean reverse derivative") {
    CHECK(equiv_bool(rdiff_bool(Term::id(1)), rdiff(Term::id(1))));

    Term square = parse("copy ; and");
    CHECK(equiv_bool(rdiff_bool(square), rdiff(Term::id(1))));
    CHECK_FALSE(equiv_bool(rdiff_bool(square), rdiff(square)));
}

TEST_CASE("boolean reverse derivative matches the brute force on safe terms") {
    samples::TermGen gen(21);
    int checked = 0;
    while (checked < 60) {
        Term t = gen.term(3, 3);
        if (t.inputs() + t.outputs() > 6) continue;
        if (!is_safe(t).safe) continue;
        ++checked;
        CompiledCircuit r(rdiff_bool(t));
        BlackBoxFn brute = rdiff_brute(as_black_box(t));
        int width = t.inputs() + t.outputs();
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << width); ++k) {
            BitVec in = BitVec::from_index(width, k);
            CHECK(r(in) == brute(in));
        }
    }
}

TEST_CASE("representation independence on safe circuits") {
    samples::TermGen gen(25);
    int checked = 0;
    while (checked < 80) {
        Term c = gen.term(3, 3);
        if (c.inputs() + c.outputs() > 7) continue;
        if (!is_safe(c).safe) continue;
        ++checked;

        // safe_form(c) is a safe circuit boolean-equal to c; R must send the
        // pair to boolean-equal results.
        Term d = safe_form(c);
        CHECK(equiv_bool(rdiff(c), rdiff(d)));

        // Structural rewrites that preserve the polynomial (identity
        // padding) must preserve rdiff up to the polynomial theory.
        Term padded = Term::seq(Term::seq(Term::id(c.inputs()), c), Term::id(c.outputs()));
        CHECK(equiv_poly(rdiff(padded), rdiff(c)));

        // Random commutativity-axiom rewrites keep the circuit safe and
        // A-equal; rdiff must not notice them either.
        std::mt19937_64 rewrite_rng(gen.raw());
        Term rewritten = samples::comm_rewrite(c, rewrite_rng);
        REQUIRE(is_safe(rewritten).safe);
        REQUIRE(equiv_poly(c, rewritten));
        CHECK(equiv_poly(rdiff(c), rdiff(rewritten)));
    }
}
