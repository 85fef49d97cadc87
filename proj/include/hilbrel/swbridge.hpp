#pragma once

// Spin^c bookkeeping and the dictionary between an embedded surface and the
// 2-form kappa_c: theta(Sigma) from symplectic pullback data, and the
// arithmetic of the Ozsvath-Szabo hypothesis |<c_1, [Sigma]>| >= 2g + n.

#include "hilbrel/extalg.hpp"
#include "hilbrel/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbrel {

/// The spin^c structure c_m, twisted from the canonical one by m.
struct SpincClass {
    LatticeClass m;
};

/// c_1(c_m) = 2m - k.
LatticeClass spinc_chern(const SurfaceTopology& s, const LatticeClass& m);

struct EmbeddedSurfaceData {
    int genus = 0;
    /// 2q x 2g matrix; row a is j^* v_a evaluated on alpha_1..alpha_g,
    /// beta_1..beta_g.
    std::vector<std::vector<Integer>> pullback;
    LatticeClass c;  // Poincare dual of [Sigma]
};

/// Throws DimensionError unless the pullback matrix is 2q x 2g.
void require_shape(const EmbeddedSurfaceData& e, int q);

/// theta(Sigma) = sum_i A_i ^ B_i; its value on v_a ^ v_b is
/// sum_i det [[j*v_a(alpha_i), j*v_a(beta_i)], [j*v_b(alpha_i), j*v_b(beta_i)]].
ExtForm theta_sigma(const EmbeddedSurfaceData& e, int q);

struct Lemma4Result {
    bool equal = false;
    ExtForm theta;
    ExtForm kappa;
    /// Basis pairs (a, b) where the two forms differ.
    std::vector<std::pair<int, int>> mismatches;
};

/// theta(Sigma) == kappa_c for c = PD[Sigma].
Lemma4Result lemma4_check(const SurfaceTopology& s, const EmbeddedSurfaceData& e);

struct OsEquivalence {
    bool lhs = false;  // |(2m-k).c| >= c.k + 2
    bool rhs = false;  // m.c <= -1 or (k-m).c <= -1
    /// -1 when only m.c <= -1 holds, +1 when only (k-m).c <= -1 holds;
    /// when both hold, the sign of (2m-k).c (none if that is 0).
    std::optional<int> epsilon;
    bool both_cases = false;
};

OsEquivalence os_condition_equiv(const Integer& mc, const Integer& kc);
OsEquivalence os_condition_equiv(const SurfaceTopology& s, const LatticeClass& m,
                                 const LatticeClass& c);

struct GenusTranslation {
    Integer genus;             // p_a = (c^2 + c.k)/2 + 1
    Integer n;                 // -c^2
    bool identity_holds = false;  // 2g + n == c.k + 2
    std::vector<std::string> warnings;
};

GenusTranslation genus_selfintersection_translate(const SurfaceTopology& s, const LatticeClass& c);

}  // namespace hilbrel
