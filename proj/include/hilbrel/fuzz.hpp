#pragma once

// Seeded generators for valid surfaces, classes, forms and moment sequences.
// Surfaces are assembled from blocks that satisfy the quadruple-product
// constraints by construction (abelian-type blocks, isotropic q=1 blocks,
// blocks with trivial cup product) and then mixed by random unimodular
// changes of basis, so no rejection sampling on cup tables is needed.

#include "hilbrel/relations.hpp"
#include "hilbrel/surface.hpp"
#include "hilbrel/swbridge.hpp"

#include <cstdint>
#include <random>

namespace hilbrel::fuzz {

/// mt19937_64 with a portable bounded draw, so reports are identical across
/// standard libraries for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

struct SurfaceOptions {
    int min_q = 0;
    int max_q = 3;
    std::size_t max_rank = 8;
    long max_entry = 3;  // bound on |gram| entries
};

SurfaceTopology random_surface(Rng& rng, const SurfaceOptions& options = {});

LatticeClass random_class(Rng& rng, std::size_t rank, long bound);

/// Random integer form of the given side with terms only in degree `degree`
/// (or any degree if negative).
ExtForm random_form(Rng& rng, int q, Side side, int degree, long bound, int max_terms);

/// Random valid moment sequence for class m.
MomentSequence random_moments(Rng& rng, const SurfaceTopology& s, const LatticeClass& m, long bound);

/// Embedded-surface data consistent with kappa_c: kappa_c is decomposed as a
/// sum of A ^ B terms and the symplectic basis is scrambled by random
/// Sp(2g, Z) moves.
EmbeddedSurfaceData consistent_embedding(Rng& rng, const SurfaceTopology& s, const LatticeClass& c);

}  // namespace hilbrel::fuzz
