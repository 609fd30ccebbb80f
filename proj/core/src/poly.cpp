#include "rdcirc/poly.hpp"

#include <algorithm>
#include <cassert>

#include "rdcirc/errors.hpp"

namespace rdcirc {

Monomial Monomial::var(int index, int exponent) {
    assert(index >= 1 && exponent >= 1);
    Monomial m;
    m.factors_.emplace_back(index, exponent);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (auto [v, e] : factors_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
            out.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

Monomial Monomial::multilinear() const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (auto [v, e] : factors_) out.factors_.emplace_back(v, 1);
    return out;
}

Monomial Monomial::shift_vars(int offset) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (auto [v, e] : factors_) out.factors_.emplace_back(v + offset, e);
    return out;
}

bool Monomial::eval(const BitVec& point) const {
    for (auto [v, e] : factors_)
        if (!point.get(v - 1)) return false;
    return true;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    // Same degree: lexicographic on the exponent vector, x1 weighing most.
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first != b->first)
            // The smaller variable index has a positive exponent where the
            // other monomial has zero, making it lexicographically larger;
            // grlex with ascending output wants it first.
            return a->first < b->first ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
        if (a->second != b->second)
            return a->second > b->second ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
        ++a, ++b;
    }
    if (a != factors_.end()) return std::strong_ordering::less;
    if (b != other.factors_.end()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Poly Poly::one() { return of({Monomial{}}); }

Poly Poly::var(int index) { return of({Monomial::var(index)}); }

Poly Poly::of(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    Poly p;
    p.monomials_.reserve(monomials.size());
    for (auto& m : monomials) {
        if (!p.monomials_.empty() && p.monomials_.back() == m)
            p.monomials_.pop_back();  // coefficients live in Z2
        else
            p.monomials_.push_back(std::move(m));
    }
    return p;
}

int Poly::max_var() const {
    int v = 0;
    for (const auto& m : monomials_) v = std::max(v, m.max_var());
    return v;
}

bool Poly::is_multilinear() const {
    for (const auto& m : monomials_)
        for (auto [v, e] : m.factors())
            if (e > 1) return false;
    return true;
}

Poly Poly::operator+(const Poly& other) const {
    // Symmetric difference of two sorted monomial sets.
    Poly out;
    out.monomials_.reserve(monomials_.size() + other.monomials_.size());
    auto a = monomials_.begin(), b = other.monomials_.begin();
    while (a != monomials_.end() || b != other.monomials_.end()) {
        if (b == other.monomials_.end())
            out.monomials_.push_back(*a++);
        else if (a == monomials_.end())
            out.monomials_.push_back(*b++);
        else if (*a < *b)
            out.monomials_.push_back(*a++);
        else if (*b < *a)
            out.monomials_.push_back(*b++);
        else
            ++a, ++b;
    }
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    std::vector<Monomial> products;
    products.reserve(monomials_.size() * other.monomials_.size());
    for (const auto& m : monomials_)
        for (const auto& n : other.monomials_) products.push_back(m.times(n));
    return of(std::move(products));
}

Poly Poly::pow(int k) const {
    assert(k >= 0);
    Poly acc = Poly::one();
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Poly Poly::substitute(std::span<const Poly> replacements) const {
    Poly out;
    for (const auto& m : monomials_) {
        Poly term = Poly::one();
        for (auto [v, e] : m.factors()) {
            assert(v - 1 < static_cast<int>(replacements.size()));
            term = term * replacements[v - 1].pow(e);
        }
        out = out + term;
    }
    return out;
}

Poly Poly::multilinear() const {
    std::vector<Monomial> reduced;
    reduced.reserve(monomials_.size());
    for (const auto& m : monomials_) reduced.push_back(m.multilinear());
    return of(std::move(reduced));
}

Poly Poly::shift_vars(int offset) const {
    Poly out;
    out.monomials_.reserve(monomials_.size());
    for (const auto& m : monomials_) out.monomials_.push_back(m.shift_vars(offset));
    // A uniform shift preserves the graded lex order.
    return out;
}

bool Poly::eval(const BitVec& point) const {
    bool acc = false;
    for (const auto& m : monomials_) acc ^= m.eval(point);
    return acc;
}

std::string Poly::str() const {
    if (monomials_.empty()) return "0";
    std::string s;
    for (const auto& m : monomials_) {
        if (!s.empty()) s += " + ";
        if (m.is_constant()) {
            s += "1";
            continue;
        }
        bool first = true;
        for (auto [v, e] : m.factors()) {
            if (!first) s += "*";
            first = false;
            s += "x" + std::to_string(v);
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

PolyTuple PolyTuple::multilinear() const {
    PolyTuple out{arity_in, {}};
    out.components.reserve(components.size());
    for (const auto& p : components) out.components.push_back(p.multilinear());
    return out;
}

BitVec PolyTuple::eval(const BitVec& point) const {
    BitVec out(static_cast<int>(components.size()));
    for (std::size_t i = 0; i < components.size(); ++i) out.set(static_cast<int>(i), components[i].eval(point));
    return out;
}

std::string PolyTuple::str() const {
    std::string s;
    for (const auto& p : components) {
        if (!s.empty()) s += "; ";
        s += p.str();
    }
    return s;
}

PolyTuple substitute(const PolyTuple& q, const PolyTuple& p) {
    if (q.arity_in != static_cast<int>(p.components.size()))
        throw ArityMismatch("substituting " + std::to_string(p.components.size()) +
                            " polynomials into " + std::to_string(q.arity_in) + " variables");
    PolyTuple out{p.arity_in, {}};
    out.components.reserve(q.components.size());
    for (const auto& component : q.components)
        out.components.push_back(component.substitute(p.components));
    return out;
}

}  // namespace rdcirc
