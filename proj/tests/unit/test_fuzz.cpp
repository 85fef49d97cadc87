#include "hilbrel/fuzz.hpp"

#include <doctest.h>

using namespace hilbrel;

TEST_CASE("rng is deterministic and stays in range")
{
    fuzz::Rng a(5), b(5);
    for (int i = 0; i < 1000; ++i) {
        const long x = a.uniform(-3, 7);
        CHECK(x == b.uniform(-3, 7));
        CHECK(x >= -3);
        CHECK(x <= 7);
    }
    fuzz::Rng c(9);
    CHECK(c.uniform(4, 4) == 4);
}

TEST_CASE("random surfaces are valid and respect the options")
{
    fuzz::Rng rng(71);
    fuzz::SurfaceOptions opts;
    int seen_q[4] = {0, 0, 0, 0};
    for (int n = 0; n < 200; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng, opts);
        CHECK(validate(s).empty());
        CHECK(s.q >= opts.min_q);
        CHECK(s.q <= opts.max_q);
        CHECK(s.h2.rank() <= opts.max_rank);
        CHECK(s.h2.rank() >= 1);
        for (std::size_t i = 0; i < s.h2.rank(); ++i)
            for (std::size_t j = 0; j < s.h2.rank(); ++j)
                CHECK(abs(s.h2.gram(i, j)) <= opts.max_entry);
        ++seen_q[s.q];
    }
    for (int q = 0; q < 4; ++q)
        CHECK(seen_q[q] > 0);
}

TEST_CASE("the corpus has nontrivial cup products")
{
    fuzz::Rng rng(72);
    int nonzero_xi = 0, nonzero_cup = 0;
    for (int n = 0; n < 100; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        nonzero_xi += !xi(s).is_zero();
        for (const auto& [key, w] : s.cup11)
            if (!w.is_zero()) {
                ++nonzero_cup;
                break;
            }
    }
    CHECK(nonzero_xi > 10);
    CHECK(nonzero_cup > 30);
}

TEST_CASE("random moments satisfy the degree invariant")
{
    fuzz::Rng rng(73);
    for (int n = 0; n < 50; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        const LatticeClass m = fuzz::random_class(rng, s.h2.rank(), 2);
        CHECK(check_moments(s, fuzz::random_moments(rng, s, m, 3)).empty());
    }
}

TEST_CASE("random forms have the requested degree")
{
    fuzz::Rng rng(74);
    for (int n = 0; n < 50; ++n) {
        const ExtForm f = fuzz::random_form(rng, 3, Side::primal, 4, 5, 6);
        CHECK(f.is_homogeneous(4));
        CHECK(f.side() == Side::primal);
    }
    CHECK(fuzz::random_form(rng, 1, Side::dual, 3, 5, 6).is_zero());
}
