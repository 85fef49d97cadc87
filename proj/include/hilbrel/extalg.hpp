#pragma once

// Sparse exterior algebra over a free Z-module of rank 2q and over its dual.
//
// A basis monomial v_S (primal) or w_S (dual) is keyed by the index set S,
// packed as a bitmask with bit i-1 standing for generator i. Terms are kept
// in canonical order: by degree, then lexicographically by index list.
// <w_S, v_T> = delta_{S,T}.

#include "hilbrel/numeric.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hilbrel {

using Subset = std::uint32_t;

/// Largest supported half-rank; index sets must fit in a 32-bit mask.
inline constexpr int max_half_rank = 15;

enum class Side { primal, dual };

inline const char* to_string(Side s) { return s == Side::primal ? "primal" : "dual"; }

inline int degree_of(Subset s) { return std::popcount(s); }

/// 1-based, strictly increasing generator indices.
std::vector<int> indices_of(Subset s);

/// Throws DimensionError unless indices are strictly increasing within 1..2q.
Subset subset_from_indices(const std::vector<int>& indices, int q);

/// Sign of w_S ^ w_T = sign * w_{S u T}; 0 when S and T meet.
inline int wedge_sign(Subset s, Subset t)
{
    if (s & t)
        return 0;
    int inversions = 0;
    Subset rest = t;
    while (rest) {
        const int bit = std::countr_zero(rest);
        rest &= rest - 1;
        // elements of s strictly above this element of t
        const Subset above = bit >= 31 ? 0u : (s >> (bit + 1));
        inversions += std::popcount(above);
    }
    return (inversions & 1) ? -1 : 1;
}

struct SubsetOrder {
    bool operator()(Subset a, Subset b) const
    {
        const int da = degree_of(a), db = degree_of(b);
        if (da != db)
            return da < db;
        // lexicographic on increasing index lists: the first differing
        // index decides, the set holding the smaller index comes first
        const Subset diff = a ^ b;
        if (!diff)
            return false;
        const Subset lowest = diff & (~diff + 1);
        return (a & lowest) != 0;
    }
};

template <class Coeff>
class BasicExtForm {
public:
    using Terms = std::map<Subset, Coeff, SubsetOrder>;

    BasicExtForm() = default;
    BasicExtForm(int q, Side side) : q_(q), side_(side)
    {
        if (q < 0 || q > max_half_rank)
            throw DimensionError("exterior algebra half-rank " + std::to_string(q) +
                                 " outside 0.." + std::to_string(max_half_rank));
    }

    static BasicExtForm scalar(int q, Side side, const Coeff& c)
    {
        BasicExtForm f(q, side);
        f.add_term(0, c);
        return f;
    }
    static BasicExtForm one(int q, Side side) { return scalar(q, side, Coeff(1)); }
    static BasicExtForm monomial(int q, Side side, const std::vector<int>& indices,
                                 const Coeff& c = Coeff(1))
    {
        BasicExtForm f(q, side);
        f.add_term(subset_from_indices(indices, q), c);
        return f;
    }

    int q() const { return q_; }
    int rank() const { return 2 * q_; }
    Side side() const { return side_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coefficient(Subset s) const
    {
        auto it = terms_.find(s);
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    Coeff coefficient(const std::vector<int>& indices) const
    {
        return coefficient(subset_from_indices(indices, q_));
    }

    void add_term(Subset s, const Coeff& c)
    {
        if (c == 0)
            return;
        if ((s >> rank()) != 0)
            throw DimensionError("index set outside 1.." + std::to_string(rank()));
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Highest degree carrying a term, -1 for the zero form.
    int max_degree() const
    {
        return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first);
    }
    int min_degree() const { return terms_.empty() ? -1 : degree_of(terms_.begin()->first); }

    bool is_homogeneous(int d) const
    {
        return terms_.empty() || (min_degree() == d && max_degree() == d);
    }

    BasicExtForm part(int d) const
    {
        BasicExtForm out(q_, side_);
        for (const auto& [s, c] : terms_)
            if (degree_of(s) == d)
                out.terms_.emplace_hint(out.terms_.end(), s, c);
        return out;
    }

    BasicExtForm& operator+=(const BasicExtForm& other)
    {
        require_compatible(other, "addition");
        for (const auto& [s, c] : other.terms_)
            add_term(s, c);
        return *this;
    }
    BasicExtForm& operator-=(const BasicExtForm& other)
    {
        require_compatible(other, "subtraction");
        for (const auto& [s, c] : other.terms_)
            add_term(s, -c);
        return *this;
    }
    BasicExtForm& operator*=(const Coeff& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend BasicExtForm operator+(BasicExtForm a, const BasicExtForm& b) { return a += b; }
    friend BasicExtForm operator-(BasicExtForm a, const BasicExtForm& b) { return a -= b; }
    friend BasicExtForm operator-(BasicExtForm a)
    {
        for (auto& [k, c] : a.terms_)
            c = -c;
        return a;
    }
    friend BasicExtForm operator*(const Coeff& s, BasicExtForm a) { return a *= s; }

    friend bool operator==(const BasicExtForm& a, const BasicExtForm& b)
    {
        return a.q_ == b.q_ && a.side_ == b.side_ && a.terms_ == b.terms_;
    }

    void require_compatible(const BasicExtForm& other, const char* what) const
    {
        if (other.q_ != q_)
            throw DimensionError(std::string(what) + ": half-rank mismatch (" + std::to_string(q_) +
                                 " vs " + std::to_string(other.q_) + ")");
        if (other.side_ != side_)
            throw DimensionError(std::string(what) + ": cannot mix primal and dual forms");
    }

private:
    int q_ = 0;
    Side side_ = Side::dual;
    Terms terms_;
};

using ExtForm = BasicExtForm<Integer>;
using RationalExtForm = BasicExtForm<Rational>;

template <class Coeff>
BasicExtForm<Coeff> wedge(const BasicExtForm<Coeff>& x, const BasicExtForm<Coeff>& y)
{
    x.require_compatible(y, "wedge");
    BasicExtForm<Coeff> out(x.q(), x.side());
    for (const auto& [s, a] : x.terms())
        for (const auto& [t, b] : y.terms()) {
            const int sign = wedge_sign(s, t);
            if (sign == 0)
                continue;
            Coeff c = a * b;
            if (sign < 0)
                c = -c;
            out.add_term(s | t, c);
        }
    return out;
}

/// Keep homogeneous components of degree <= n; n < 0 gives 0.
template <class Coeff>
BasicExtForm<Coeff> truncate(const BasicExtForm<Coeff>& x, long n)
{
    BasicExtForm<Coeff> out(x.q(), x.side());
    for (const auto& [s, c] : x.terms())
        if (degree_of(s) <= n)
            out.add_term(s, c);
    return out;
}

/// Interior product of a dual form into a primal one, fixed by
/// <psi ^ phi, x> = <psi, phi _| x> for every dual psi. On monomials,
/// w_A _| v_T = sign(T\A, A) v_{T\A} when A is a subset of T, else 0.
template <class Coeff>
BasicExtForm<Coeff> contract(const BasicExtForm<Coeff>& phi, const BasicExtForm<Coeff>& x)
{
    if (phi.side() != Side::dual || x.side() != Side::primal)
        throw DimensionError("contract: expects a dual form acting on a primal form");
    if (phi.q() != x.q())
        throw DimensionError("contract: half-rank mismatch");
    BasicExtForm<Coeff> out(x.q(), Side::primal);
    for (const auto& [a, p] : phi.terms())
        for (const auto& [t, c] : x.terms()) {
            if ((a & t) != a)
                continue;
            const Subset rest = t & ~a;
            Coeff v = p * c;
            if (wedge_sign(rest, a) < 0)
                v = -v;
            out.add_term(rest, v);
        }
    return out;
}

/// <phi, x> = sum over S of phi_S x_S.
template <class Coeff>
Coeff pairing(const BasicExtForm<Coeff>& phi, const BasicExtForm<Coeff>& x)
{
    if (phi.side() != Side::dual || x.side() != Side::primal || phi.q() != x.q())
        throw DimensionError("pairing: expects a dual and a primal form of equal half-rank");
    Coeff sum = 0;
    for (const auto& [s, c] : phi.terms())
        sum += c * x.coefficient(s);
    return sum;
}

/// exp of a degree-2 dual form truncated to degree <= max_deg, computed with
/// integer Pfaffians: the coefficient of w_S with |S| = 2n is Pf(kappa|_S).
/// Throws DegreeError unless kappa is homogeneous of degree 2.
ExtForm exp2(const ExtForm& kappa, int max_deg);

/// exp2 with max_deg = 2q.
inline ExtForm exp2(const ExtForm& kappa) { return exp2(kappa, kappa.rank()); }

RationalExtForm to_rational(const ExtForm& x);

/// Throws IntegralityError if any coefficient has a denominator.
ExtForm to_integral(const RationalExtForm& x, const std::string& what);

/// Canonical text: one "i j k: coeff" line per term, degree then lex order.
/// The empty index set prints as ": coeff". The zero form prints nothing.
template <class Coeff>
std::string format_terms(const BasicExtForm<Coeff>& x, const std::string& indent = "")
{
    std::string out;
    for (const auto& [s, c] : x.terms()) {
        out += indent;
        bool first = true;
        for (int i : indices_of(s)) {
            if (!first)
                out += ' ';
            out += std::to_string(i);
            first = false;
        }
        out += ": ";
        out += to_string(c);
        out += '\n';
    }
    return out;
}

/// Compact one-line rendering, e.g. "w1^w2 - 3 w3^w4" or "0".
template <class Coeff>
std::string to_display(const BasicExtForm<Coeff>& x)
{
    if (x.is_zero())
        return "0";
    const char letter = x.side() == Side::dual ? 'w' : 'v';
    std::string out;
    bool first = true;
    for (const auto& [s, c] : x.terms()) {
        const bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const auto idx = indices_of(s);
        if (idx.empty() || mag != 1) {
            out += to_string(mag);
            if (!idx.empty())
                out += ' ';
        }
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i)
                out += '^';
            out += letter;
            out += std::to_string(idx[i]);
        }
    }
    return out;
}

}  // namespace hilbrel
