#pragma once

// Relations between moment sequences a_i = rho_*(u^i cap [[Hilb^m]]) for
// classes m and m -/+ c, the Poincare invariant assembled from them, and the
// adjunction-inequality checker.
//
// A virtual class is represented only by its moments. Translations of the
// Picard torus act trivially on Lambda* H^1 and iota^* u = u, so the relation
// [[Hilb^m]] = sum_j kappa^j/j! u^{N-j} cap iota_*[[Hilb^{m-c}]] becomes
//   a_i(m) = sum_j (kappa^j / j!) _| a'_{i+N-j}.

#include "hilbrel/extalg.hpp"
#include "hilbrel/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hilbrel {

enum class Direction {
    down,  // relate m to m - c (needs m.c < 0)
    up,    // relate m to m + c (needs (k-m).c < 0)
};

inline const char* to_string(Direction d) { return d == Direction::down ? "down" : "up"; }

/// Which u-exponent to use for the downward relation. `corrected` is
/// (c^2 + c.k)/2 - m.c, the only value for which degrees close;
/// `as_printed` is (c^2 + c.m)/2 - m.c, kept for regression checks.
enum class ExponentConvention { corrected, as_printed };

struct MomentSequence {
    LatticeClass m;
    std::vector<ExtForm> moments;  // primal forms, a_0, a_1, ...

    friend bool operator==(const MomentSequence&, const MomentSequence&) = default;
};

/// Degree a_i must have: m(m-k) - 2i.
Integer moment_degree(const SurfaceTopology& s, const LatticeClass& m, std::size_t i);

/// Degree-invariant violations of a moment sequence; empty iff valid.
std::vector<std::string> check_moments(const SurfaceTopology& s, const MomentSequence& ms);

struct CoefficientTerm {
    Integer exponent;  // power of u
    ExtForm coeff;     // dual form of degree 2i

    friend bool operator==(const CoefficientTerm&, const CoefficientTerm&) = default;
};

/// sum_i (+-kappa_c)^i/i! u^{N-i}; terms with N - i < 0 or zero coefficient
/// are dropped. Ordered by decreasing exponent.
using CoefficientPolynomial = std::vector<CoefficientTerm>;

/// N_down = (c^2 + c.k)/2 - m.c (or the as-printed variant),
/// N_up = (c^2 + c.k)/2 - (k-m).c.
Integer u_exponent(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                   Direction direction,
                   ExponentConvention convention = ExponentConvention::corrected);

CoefficientPolynomial coefficient_class(const SurfaceTopology& s, const LatticeClass& m,
                                        const LatticeClass& c, Direction direction,
                                        ExponentConvention convention = ExponentConvention::corrected);

/// Whether deg(a'_{i+N-j}) - 2j == m(m-k) - 2i holds identically for the
/// chosen exponent.
bool degree_bookkeeping_closes(const SurfaceTopology& s, const LatticeClass& m,
                               const LatticeClass& c, Direction direction,
                               ExponentConvention convention = ExponentConvention::corrected);

/// The source class a moment sequence must describe: m - c (down), m + c (up).
LatticeClass source_class(const LatticeClass& m, const LatticeClass& c, Direction direction);

struct PushResult {
    MomentSequence result;
    std::vector<std::string> warnings;  // hypothesis m.c < 0 / (k-m).c < 0 not met
};

/// Moments of m from moments of m - c. Throws DegreeError if the bookkeeping
/// does not close or a produced moment has the wrong degree; throws
/// DimensionError if src describes the wrong class.
PushResult push_down(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                     const MomentSequence& src,
                     ExponentConvention convention = ExponentConvention::corrected);

/// Moments of m from moments of m + c.
PushResult push_up(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                   const MomentSequence& src);

PushResult push(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                Direction direction, const MomentSequence& src);

/// P+(m) = sum_i a_i.
ExtForm assemble_plus(const MomentSequence& ms, int q);

/// P-(m) = (-1)^{chi + m(m-k)/2} sum_i (-1)^i b_i, with b the moments of k - m.
ExtForm assemble_minus(const MomentSequence& ms_k_minus_m, const Integer& chi,
                       const Integer& expected_dim, int q);

struct PoincarePair {
    LatticeClass m;
    ExtForm plus;
    ExtForm minus;

    bool is_basic() const { return !plus.is_zero() || !minus.is_zero(); }
};

/// tau_{<= m(m-k)}(exp(+-kappa_c) _| P_src): + for down, - for up.
ExtForm relation_thm6(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                      Direction direction, const ExtForm& p_src);

/// N >= 0 and kappa_c^{N+1} = 0, with N the u-exponent of the direction.
/// This holds for the class of a curve with m.c < 0 (resp. (k-m).c < 0); the
/// two routes of thm6_consistency can only agree when it does.
bool relation_applies(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                      Direction direction);

struct ConsistencyResult {
    bool applies = false;  // relation_applies(...)
    bool plus_ok = false;
    bool minus_ok = false;
    ExtForm plus_from_moments;
    ExtForm plus_from_relation;
    ExtForm minus_from_moments;
    ExtForm minus_from_relation;
    std::string diff;

    bool ok() const { return plus_ok && minus_ok; }
};

/// Both routes to P+(m) and P-(m):
///  - push the moments, then assemble;
///  - assemble the source invariant, then apply relation_thm6.
/// src_plus describes m -/+ c; src_minus describes k - (m -/+ c), i.e. the
/// moments defining P-(m -/+ c).
ConsistencyResult thm6_consistency(const SurfaceTopology& s, const LatticeClass& m,
                                   const LatticeClass& c, Direction direction,
                                   const MomentSequence& src_plus,
                                   const MomentSequence& src_minus);

struct AdjunctionVerdict {
    LatticeClass m;
    Integer mc;            // m.c
    Integer kc;            // k.c
    bool allowed = true;
    std::string reason;
    /// For m.c < 0 (resp. (k-m).c < 0): p_a - 1 - m.c (resp. p_a - 1 - (k-m).c),
    /// which is the shift of m(m-k)/2 to the neighbouring basic class and must
    /// vanish under simple type.
    std::optional<Integer> forced_shift;
    bool genus_identity_holds = true;
    bool simple_type_consistent = true;  // m(m-k) == 0
};

/// Per-class verdicts of the adjunction inequality for a curve of class c
/// with arithmetic genus pa. Throws Error if the surface does not have
/// p_g > 0, if pa disagrees with the adjunction formula, or if a listed pair
/// is not basic.
std::vector<AdjunctionVerdict> adjunction_check(const SurfaceTopology& s,
                                                const std::vector<PoincarePair>& basics,
                                                const LatticeClass& c, const Integer& pa);

/// Same, for classes the caller declares basic.
std::vector<AdjunctionVerdict> adjunction_check(const SurfaceTopology& s,
                                                const std::vector<LatticeClass>& basic_classes,
                                                const LatticeClass& c, const Integer& pa);

}  // namespace hilbrel
