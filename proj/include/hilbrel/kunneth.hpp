#pragma once

// The bigraded ring H*(Pic x V, Q) = Lambda* H^1(V)^dual (x) H*(V, Q).
//
// H*(V) uses a flat basis: 1, then v_1..v_2q (H^1), then the lattice basis
// (H^2), then h_1..h_2q (H^3, where h_a is the class with <v_b u h_a, [V]> =
// delta_ab), then PD[pt] (H^4). Products of H^1 and H^2 classes land in H^3
// through the stored cup table, so no second table is needed.

#include "hilbrel/extalg.hpp"
#include "hilbrel/surface.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace hilbrel {

/// The cup product structure of H*(V) on the flat basis.
class CohomologyRing {
public:
    explicit CohomologyRing(SurfaceTopology surface);

    const SurfaceTopology& surface() const { return surface_; }
    int q() const { return surface_.q; }
    std::size_t dim() const { return degree_.size(); }
    int degree(std::size_t basis) const { return degree_[basis]; }

    std::size_t unit() const { return 0; }
    std::size_t h1(int i) const;           // v_i, 1-based
    std::size_t h2(std::size_t r) const;   // r-th lattice basis vector, 0-based
    std::size_t h3(int a) const;           // h_a, 1-based
    std::size_t point() const { return dim() - 1; }

    using Sparse = std::vector<std::pair<std::size_t, Integer>>;
    /// basis_x u basis_y in the flat basis.
    const Sparse& product(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }

private:
    SurfaceTopology surface_;
    std::vector<int> degree_;
    std::vector<Sparse> table_;
};

using RingPtr = std::shared_ptr<const CohomologyRing>;

RingPtr make_ring(const SurfaceTopology& surface);

/// Element of Lambda* H^1 dual (x) H*(V) with rational coefficients.
class BigradedClass {
public:
    /// (Pic index set, flat H*(V) basis index)
    using Key = std::pair<Subset, std::size_t>;

    explicit BigradedClass(RingPtr ring) : ring_(std::move(ring)) {}

    static BigradedClass one(RingPtr ring);
    /// coeff * w_S (x) basis
    static BigradedClass term(RingPtr ring, Subset s, std::size_t basis, const Rational& coeff);
    /// 1 (x) c for c in H^2.
    static BigradedClass from_h2(RingPtr ring, const LatticeClass& c, const Rational& scale = 1);

    const RingPtr& ring() const { return ring_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(Subset s, std::size_t basis) const;

    void add_term(Subset s, std::size_t basis, const Rational& coeff);

    /// The (p, d) Kuenneth component (negative p or d means "any").
    BigradedClass component(int p, int d) const;

    BigradedClass& operator+=(const BigradedClass& other);
    BigradedClass& operator-=(const BigradedClass& other);
    BigradedClass& operator*=(const Rational& s);
    friend BigradedClass operator+(BigradedClass a, const BigradedClass& b) { return a += b; }
    friend BigradedClass operator-(BigradedClass a, const BigradedClass& b) { return a -= b; }
    friend BigradedClass operator*(const Rational& s, BigradedClass a) { return a *= s; }
    friend bool operator==(const BigradedClass& a, const BigradedClass& b);

    void require_same_ring(const BigradedClass& other, const char* what) const;

private:
    RingPtr ring_;
    std::map<Key, Rational> terms_;
};

/// (a (x) x)(b (x) y) = (-1)^{deg x * deg b} (a ^ b) (x) (x u y).
BigradedClass mul(const BigradedClass& x, const BigradedClass& y);

/// sum f^n / n!; f must have no (0,0) component. Throws DegreeError otherwise.
BigradedClass exp(const BigradedClass& f);

/// Evaluate the H^4 factor against [V]: the Lambda* part of the (*, 4) terms.
RationalExtForm slant(const BigradedClass& x);

/// pr_V^* td(V) = 1 - k/2 + chi PD[pt] (td of the torus factor is 1).
BigradedClass todd_factor(const RingPtr& ring);

/// Total Chern class from a Chern character living in even degrees of
/// Lambda* H^1 dual, through Newton's identities. The rank part must be
/// integral and the result must be integral (IntegralityError otherwise).
ExtForm chern_from_ch(const RationalExtForm& ch);

}  // namespace hilbrel
