#pragma once

// Chern character of the pushforward of a normalized Poincare bundle along
// Pic^m x V -> Pic^m, computed two ways: through Grothendieck-Riemann-Roch in
// the Kuenneth ring, and from the closed form
//   chi(O_V) + m(m-k)/2 - theta_{2m-k} + xi_V.

#include "hilbrel/kunneth.hpp"

#include <string>

namespace hilbrel {

struct PushforwardCharacter {
    Integer rank;
    ExtForm d2;  // dual, degree 2
    ExtForm d4;  // dual, degree 4

    friend bool operator==(const PushforwardCharacter&, const PushforwardCharacter&) = default;
};

PushforwardCharacter operator-(const PushforwardCharacter& a, const PushforwardCharacter& b);

/// Human-readable listing of the differing components; empty when equal.
std::string describe_difference(const PushforwardCharacter& a, const PushforwardCharacter& b,
                                const std::string& left = "pipeline",
                                const std::string& right = "closed form");

std::string to_display(const PushforwardCharacter& ch);

/// c_1 of the normalized Poincare bundle: f^{2,0} = 0, f^{1,1} = sum w_i (x) v_i,
/// f^{0,2} = m.
BigradedClass poincare_first_chern(const RingPtr& ring, const LatticeClass& m);

/// slant(exp(f) * td) through the Kuenneth ring. Throws DegreeError if the
/// character has odd or out-of-range components and IntegralityError if a
/// coefficient is not integral.
PushforwardCharacter ch_pushforward(const RingPtr& ring, const LatticeClass& m);
PushforwardCharacter ch_pushforward(const SurfaceTopology& surface, const LatticeClass& m);

/// chi + m(m-k)/2 - theta_{2m-k} + xi_V.
PushforwardCharacter closed_form_ch(const SurfaceTopology& surface, const LatticeClass& m);

struct Lemma1Result {
    bool equal = false;
    PushforwardCharacter pipeline;
    PushforwardCharacter closed;
    std::string diff;
};

Lemma1Result verify_lemma1(const SurfaceTopology& surface, const LatticeClass& m);
Lemma1Result verify_lemma1(const RingPtr& ring, const LatticeClass& m);

/// ch(pi_! L) - ch(pi_! (L (x) L_c^dual)) from the pipeline, checked against
/// m.c - (c^2 + c.k)/2 - kappa_c. Throws MismatchError with a diff otherwise.
PushforwardCharacter difference_character(const RingPtr& ring, const LatticeClass& m,
                                          const LatticeClass& c);
PushforwardCharacter difference_character(const SurfaceTopology& surface, const LatticeClass& m,
                                          const LatticeClass& c);

/// m.c - (c^2 + c.k)/2 - kappa_c, assembled from surface primitives.
PushforwardCharacter difference_closed_form(const SurfaceTopology& surface, const LatticeClass& m,
                                            const LatticeClass& c);

/// Total Chern class of the difference, checked against exp2(-kappa_c).
/// Throws MismatchError otherwise.
ExtForm difference_chern(const RingPtr& ring, const LatticeClass& m, const LatticeClass& c);
ExtForm difference_chern(const SurfaceTopology& surface, const LatticeClass& m,
                         const LatticeClass& c);

/// The character as one graded rational form (rank + d2 + d4).
RationalExtForm as_graded_form(const PushforwardCharacter& ch, int q);

}  // namespace hilbrel
