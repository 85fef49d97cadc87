#include "hilbrel/fuzz.hpp"
#include "hilbrel/grr.hpp"
#include "hilbrel/relations.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hilbrel;

TEST_CASE("abelian surface, m = 0")
{
    const SurfaceTopology a = abelian_surface();
    const PushforwardCharacter ch = ch_pushforward(a, LatticeClass::zero(6));
    CHECK(ch.rank == 0);
    CHECK(ch.d2.is_zero());
    CHECK(ch.d4 == ExtForm::monomial(2, Side::dual, {1, 2, 3, 4}));
    CHECK(ch == closed_form_ch(a, LatticeClass::zero(6)));
}

TEST_CASE("abelian surface, generic m: m^2/2 - kappa_m + xi")
{
    const SurfaceTopology a = abelian_surface();
    fuzz::Rng rng(41);
    for (int n = 0; n < 50; ++n) {
        const LatticeClass m = fuzz::random_class(rng, 6, 4);
        const PushforwardCharacter ch = ch_pushforward(a, m);
        CHECK(ch.rank == dot(a.h2, m, m) / 2);
        CHECK(ch.d2 == -oracle::kappa(a, m));
        CHECK(ch.d4 == ExtForm::monomial(2, Side::dual, {1, 2, 3, 4}));
        CHECK(verify_lemma1(a, m).equal);
    }
}

TEST_CASE("q = 0 surfaces carry only the rank")
{
    const SurfaceTopology s = q0_surface(Lattice::from_rows({{1, 0}, {0, -1}}), {3, 1}, 1);
    const LatticeClass m{2, -1};
    const PushforwardCharacter ch = ch_pushforward(s, m);
    // chi + m(m-k)/2 = 1 + (3 - 7)/2
    CHECK(ch.rank == -1);
    CHECK(ch.d2.is_zero());
    CHECK(ch.d4.is_zero());
    CHECK(verify_lemma1(s, m).equal);
}

TEST_CASE("pipeline character matches the closed form on fuzzed surfaces")
{
    fuzz::Rng rng(42);
    for (int n = 0; n < 40; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        const LatticeClass m = fuzz::random_class(rng, s.h2.rank(), 3);
        const Lemma1Result r = verify_lemma1(s, m);
        CHECK_MESSAGE(r.equal, r.diff);
        CHECK(r.diff.empty());
    }
}

TEST_CASE("a tampered character produces a structured diff")
{
    const SurfaceTopology a = abelian_surface();
    PushforwardCharacter x = closed_form_ch(a, LatticeClass{1, 0, 0, 0, 0, 1});
    PushforwardCharacter y = x;
    y.rank += 1;
    y.d2 += ExtForm::monomial(2, Side::dual, {1, 2});
    const std::string diff = describe_difference(x, y);
    CHECK(diff.find("rank") != std::string::npos);
    CHECK(diff.find("degree 2") != std::string::npos);
    CHECK(describe_difference(x, x).empty());
}

TEST_CASE("difference character")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass m{1, 2, 0, -1, 0, 3};
    const LatticeClass zero = LatticeClass::zero(6);
    const PushforwardCharacter d0 = difference_character(a, m, zero);
    CHECK(d0.rank == 0);
    CHECK(d0.d2.is_zero());
    CHECK(d0.d4.is_zero());

    const LatticeClass c{0, 1, 1, 0, -2, 1};
    const PushforwardCharacter d = difference_character(a, m, c);
    CHECK(d.rank == dot(a.h2, m, c) - dot(a.h2, c, c) / 2);
    CHECK(d.d2 == -oracle::kappa(a, c));
    CHECK(d.d4.is_zero());
    CHECK(d == difference_closed_form(a, m, c));
}

TEST_CASE("difference rank is minus the u-exponent")
{
    fuzz::Rng rng(43);
    for (int n = 0; n < 30; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        const LatticeClass m = fuzz::random_class(rng, s.h2.rank(), 3);
        const LatticeClass c = fuzz::random_class(rng, s.h2.rank(), 3);
        CHECK(difference_character(s, m, c).rank == -u_exponent(s, m, c, Direction::down));
    }
}

TEST_CASE("difference chern class")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass m{1, 0, 0, 0, 0, -1};
    CHECK(difference_chern(a, m, LatticeClass::zero(6)) == ExtForm::one(2, Side::dual));

    // a surface whose cup product vanishes has kappa = 0 for every class
    SurfaceTopology flat = a;
    flat.cup11.clear();
    CHECK(validate(flat).empty());
    CHECK(difference_chern(flat, m, LatticeClass{3, 1, 0, 0, 2, 1}) == ExtForm::one(2, Side::dual));

    const LatticeClass c{2, 1, 0, 1, -1, 1};
    CHECK(difference_chern(a, m, c) == exp2(-oracle::kappa(a, c)));
}

TEST_CASE("graded form of a character")
{
    const SurfaceTopology a = abelian_surface();
    const PushforwardCharacter ch = closed_form_ch(a, LatticeClass{1, 0, 0, 0, 0, 1});
    const RationalExtForm g = as_graded_form(ch, 2);
    CHECK(g.part(0) == RationalExtForm::scalar(2, Side::dual, Rational(ch.rank)));
    CHECK(g.part(2) == to_rational(ch.d2));
    CHECK(g.part(4) == to_rational(ch.d4));
}
