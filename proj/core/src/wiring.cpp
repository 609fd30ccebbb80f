#include "rdcirc/wiring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rdcirc {

Term tensor_all(std::span<const Term> parts) {
    if (parts.empty()) return Term::id(0);
    Term t = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) t = Term::tensor(t, parts[i]);
    return t;
}

Term seq_all(std::span<const Term> stages) {
    assert(!stages.empty());
    Term t = stages[0];
    for (std::size_t i = 1; i < stages.size(); ++i) t = Term::seq(t, stages[i]);
    return t;
}

Term permutation(std::span<const int> sources) {
    int n = static_cast<int>(sources.size());
    Term t = Term::id(n);
    bool layered = false;
    // Bubble-sort sources ascending, recording the adjacent transpositions.
    // sources = t_m ∘ ... ∘ t_1, and stage order composes index permutations
    // first-stage-outermost, so the circuit layers are the sort swaps in
    // reverse order.
    std::vector<std::pair<int, int>> swaps;  // positions (k, k+1), in sort order
    std::vector<int> work(sources.begin(), sources.end());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k + 1 < n; ++k)
            if (work[k] > work[k + 1]) {
                std::swap(work[k], work[k + 1]);
                swaps.emplace_back(k, k + 1);
            }
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
        int k = it->first;
        Term layer = Term::swap();
        if (k > 0) layer = Term::tensor(Term::id(k), layer);
        if (n - k - 2 > 0) layer = Term::tensor(layer, Term::id(n - k - 2));
        t = layered ? Term::seq(t, layer) : layer;
        layered = true;
    }
    return layered ? t : Term::id(n);
}

Term wiring(int n, std::span<const int> sources) {
    std::vector<int> uses(n, 0);
    for (int s : sources) {
        assert(s >= 0 && s < n);
        ++uses[s];
    }

    if (static_cast<int>(sources.size()) == n) {
        bool pure_perm = true;
        for (int i = 0; i < n; ++i)
            if (uses[i] != 1) pure_perm = false;
        if (pure_perm) return permutation(sources);
    }

    // Fanout layer: input i becomes uses[i] parallel copies, grouped by
    // input in order.
    std::vector<Term> fans;
    fans.reserve(n);
    for (int i = 0; i < n; ++i) fans.push_back(copy_tree(uses[i]));
    Term fanout = tensor_all(fans);

    // Route each grouped copy to the output slot that asked for it.
    std::vector<int> offset(n, 0);
    int acc = 0;
    for (int i = 0; i < n; ++i) {
        offset[i] = acc;
        acc += uses[i];
    }
    std::vector<int> next = offset;
    std::vector<int> perm(sources.size());
    for (std::size_t j = 0; j < sources.size(); ++j) perm[j] = next[sources[j]]++;

    bool ident = true;
    for (std::size_t j = 0; j < perm.size(); ++j)
        if (perm[j] != static_cast<int>(j)) ident = false;
    return ident ? fanout : Term::seq(fanout, permutation(perm));
}

Term copy_tree(int k) {
    if (k == 0) return Term::gen(Gen::Discard);
    if (k == 1) return Term::id(1);
    if (k == 2) return Term::gen(Gen::Copy);
    return Term::seq(Term::gen(Gen::Copy), Term::tensor(Term::id(1), copy_tree(k - 1)));
}

Term discard_all(int n) {
    std::vector<Term> d(n, Term::gen(Gen::Discard));
    return tensor_all(d);
}

namespace {

Term fold_tree(int k, Gen op, Gen unit) {
    if (k == 0) return Term::gen(unit);
    if (k == 1) return Term::id(1);
    Term t = Term::gen(op);
    for (int taken = 2; taken < k; ++taken)
        t = Term::seq(Term::tensor(t, Term::id(1)), Term::gen(op));
    return t;
}

}  // namespace

Term add_tree(int k) { return fold_tree(k, Gen::Add, Gen::Zero); }

Term and_tree(int k) { return fold_tree(k, Gen::And, Gen::One); }

Term pow_tower(int k) {
    assert(k >= 1);
    if (k == 1) return Term::id(1);
    return Term::seq(Term::seq(Term::gen(Gen::Copy), Term::tensor(Term::id(1), pow_tower(k - 1))),
                     Term::gen(Gen::And));
}

}  // namespace rdcirc
