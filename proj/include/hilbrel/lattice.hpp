#pragma once

// Exact arithmetic on a finitely generated sublattice of H^2(V, Z) carrying
// the intersection form. Torsion is not modeled.

#include "hilbrel/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace hilbrel {

/// A class in H^2 written in the lattice basis.
class LatticeClass {
public:
    LatticeClass() = default;
    explicit LatticeClass(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    LatticeClass(std::initializer_list<long> coords);

    static LatticeClass zero(std::size_t rank) { return LatticeClass(std::vector<Integer>(rank, 0)); }
    static LatticeClass basis(std::size_t rank, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const { return coords_; }
    bool is_zero() const;

    LatticeClass& operator+=(const LatticeClass& other);
    LatticeClass& operator-=(const LatticeClass& other);
    friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
    friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
    friend LatticeClass operator-(LatticeClass a);
    friend LatticeClass operator*(const Integer& s, LatticeClass a);
    friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Integer> coords_;
};

/// The intersection form <x u y, [V]> on a chosen basis.
class Lattice {
public:
    Lattice() = default;
    /// Throws DimensionError unless gram is square and symmetric.
    explicit Lattice(std::vector<std::vector<Integer>> gram);
    static Lattice from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rank() const { return gram_.size(); }
    const Integer& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
    const std::vector<std::vector<Integer>>& gram() const { return gram_; }

    /// gram * x
    LatticeClass apply(const LatticeClass& x) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
    std::vector<std::vector<Integer>> gram_;
};

Integer dot(const Lattice& lattice, const LatticeClass& x, const LatticeClass& y);

/// True iff gram_ii == (gram k)_i mod 2 for every basis index, i.e.
/// x.x == x.k mod 2 for all x.
bool is_characteristic(const Lattice& lattice, const LatticeClass& k);

/// m(m-k)/2; ParityError if m(m-k) is odd.
Integer expected_dimension(const Lattice& lattice, const LatticeClass& m, const LatticeClass& k);

/// Adjunction formula (c^2 + c.k)/2 + 1; ParityError if c^2 + c.k is odd.
Integer arithmetic_genus(const Lattice& lattice, const LatticeClass& c, const LatticeClass& k);

/// (m-c)(m-c-k)/2 == m(m-k)/2 + p_a - 1 - m.c, with both sides evaluated
/// separately. Returns false (never throws) on odd intermediates.
bool genus_identity_check(const Lattice& lattice, const LatticeClass& m, const LatticeClass& c,
                          const LatticeClass& k);

/// The twin identity (m+c)(m+c-k)/2 == m(m-k)/2 + p_a - 1 - (k-m).c.
bool genus_identity_check_plus(const Lattice& lattice, const LatticeClass& m, const LatticeClass& c,
                               const LatticeClass& k);

}  // namespace hilbrel
