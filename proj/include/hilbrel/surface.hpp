#pragma once

// Topological data of a surface V: irregularity, chi(O_V), a modeled H^2
// lattice, the canonical class and the cup product H^1 x H^1 -> H^2.

#include "hilbrel/extalg.hpp"
#include "hilbrel/lattice.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hilbrel {

struct SurfaceTopology {
    int q = 0;
    Integer chi = 0;
    Lattice h2;
    LatticeClass k;
    /// v_i u v_j for 1 <= i < j <= 2q; absent pairs are zero.
    std::map<std::pair<int, int>, LatticeClass> cup11;
    bool pg_positive = false;

    int h1_rank() const { return 2 * q; }

    /// W(i, j) = v_i u v_j for any 1-based i, j (antisymmetric, W(i,i) = 0).
    LatticeClass cup(int i, int j) const;

    /// Sets W(i, j) (and implicitly W(j, i) = -W(i, j)).
    void set_cup(int i, int j, LatticeClass value);

    /// <v_a u v_b u v_c u v_d, [V]> read off the stored table.
    Integer quadruple(int a, int b, int c, int d) const;

    friend bool operator==(const SurfaceTopology&, const SurfaceTopology&) = default;
};

/// Every violated invariant as a message; empty iff the data is consistent.
std::vector<std::string> validate(const SurfaceTopology& surface);

/// Throws Error listing the diagnostics if validate() is not empty.
void require_valid(const SurfaceTopology& surface);

/// kappa_c : a ^ b -> <a u b u c, [V]>.
ExtForm kappa(const SurfaceTopology& surface, const LatticeClass& c);

/// theta_c = kappa_c / 2 for characteristic c. ParityError if c is not
/// characteristic or a coefficient of kappa_c is odd.
ExtForm theta(const SurfaceTopology& surface, const LatticeClass& c);

/// xi_V : a ^ b ^ c ^ d -> <a u b u c u d, [V]>.
ExtForm xi(const SurfaceTopology& surface);

/// Abelian surface: q = 2, chi = 0, k = 0, H^2 = Lambda^2 H^1 with basis
/// e12, e13, e14, e23, e24, e34 and <e1 u e2 u e3 u e4, [V]> = 1.
SurfaceTopology abelian_surface();

/// A regular surface (q = 0) on the given lattice. Throws unless valid.
SurfaceTopology q0_surface(Lattice lattice, LatticeClass k, Integer chi, bool pg_positive = false);

/// Index of the abelian-surface H^2 basis vector e_i ^ e_j (i < j).
std::size_t abelian_pair_index(int i, int j);

}  // namespace hilbrel
