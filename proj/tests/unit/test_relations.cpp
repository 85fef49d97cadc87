#include "hilbrel/fuzz.hpp"
#include "hilbrel/relations.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hilbrel;

namespace {

LatticeClass ab(std::initializer_list<std::pair<std::pair<int, int>, long>> terms)
{
    LatticeClass c = LatticeClass::zero(6);
    for (const auto& [pair, coeff] : terms)
        c[abelian_pair_index(pair.first, pair.second)] = coeff;
    return c;
}

ExtForm v(int q, std::vector<int> idx, long c = 1)
{
    return ExtForm::monomial(q, Side::primal, idx, c);
}

SurfaceTopology flat_abelian()
{
    SurfaceTopology s = abelian_surface();
    s.cup11.clear();
    return s;
}

}  // namespace

TEST_CASE("u-exponent")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass m = ab({{{1, 2}, -1}, {{3, 4}, -1}});
    const LatticeClass c = ab({{{1, 2}, 1}});
    // k = 0: N_down = c^2/2 - m.c
    CHECK(u_exponent(a, m, c, Direction::down) == dot(a.h2, c, c) / 2 - dot(a.h2, m, c));
    CHECK(u_exponent(a, m, c, Direction::down) == 1);
    // N_up = c^2/2 - (k-m).c
    CHECK(u_exponent(a, m, c, Direction::up) == -1);

    const SurfaceTopology s = q0_surface(Lattice::from_rows({{1, 0}, {0, -1}}), {3, 1}, 1);
    const LatticeClass e{0, 1};
    const LatticeClass x{1, 1};
    // c^2 = -1, c.k = -1 so (c^2 + c.k)/2 = -1; m.c = -1
    CHECK(u_exponent(s, x, e, Direction::down) == 0);
    CHECK(u_exponent(s, x, e, Direction::down, ExponentConvention::as_printed) ==
          Integer(-1 - 1) / 2 + 1);
}

TEST_CASE("coefficient class")
{
    const SurfaceTopology s = flat_abelian();
    const LatticeClass c = ab({{{1, 2}, 1}, {{3, 4}, 1}});
    const LatticeClass m = ab({{{1, 2}, -1}});
    REQUIRE(u_exponent(s, m, c, Direction::down) == 2);
    const CoefficientPolynomial p = coefficient_class(s, m, c, Direction::down);
    REQUIRE(p.size() == 1);
    CHECK(p[0].exponent == 2);
    CHECK(p[0].coeff == ExtForm::one(2, Side::dual));

    const SurfaceTopology a = abelian_surface();
    const LatticeClass big = ab({{{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{3, 4}, 1}});
    const LatticeClass mm = ab({{{1, 2}, -2}, {{3, 4}, -3}});
    const CoefficientPolynomial q = coefficient_class(a, mm, big, Direction::down);
    const Integer n = u_exponent(a, mm, big, Direction::down);
    REQUIRE(n >= 2);
    for (const auto& term : q) {
        const Integer i = n - term.exponent;
        CHECK(term.coeff.is_homogeneous(static_cast<int>(2 * i.get_si())));
    }
    const ExtForm e = exp2(kappa(a, big));
    CHECK(q[1].coeff == e.part(2));
    const CoefficientPolynomial up = coefficient_class(a, mm, big, Direction::up);
    for (const auto& term : up)
        CHECK(term.exponent >= 0);
}

TEST_CASE("push_down with kappa = 0")
{
    const SurfaceTopology s = flat_abelian();
    const LatticeClass c = ab({{{1, 2}, 1}, {{3, 4}, 1}});

    // N = 0: identity on moments
    const LatticeClass m0 = ab({{{1, 2}, 1}});
    REQUIRE(u_exponent(s, m0, c, Direction::down) == 0);
    const LatticeClass src0 = m0 - c;
    REQUIRE(dot(s.h2, src0, src0) == 0);
    const MomentSequence ms{src0, {ExtForm::scalar(2, Side::primal, 5)}};
    CHECK(push_down(s, m0, c, ms).result.moments == ms.moments);

    // N = 2: shift a_i = a'_{i+2}
    const LatticeClass m = ab({{{1, 2}, -1}});
    REQUIRE(u_exponent(s, m, c, Direction::down) == 2);
    const LatticeClass src = m - c;  // (-2 e12 - e34)^2 = 4
    MomentSequence in{src, {v(2, {1, 2, 3, 4}, 3), v(2, {1, 3}, 2) + v(2, {2, 4}, -1),
                            ExtForm::scalar(2, Side::primal, 7)}};
    REQUIRE(check_moments(s, in).empty());
    const PushResult out = push_down(s, m, c, in);
    REQUIRE(out.result.moments.size() == 1);
    CHECK(out.result.moments[0] == ExtForm::scalar(2, Side::primal, 7));
    CHECK(out.warnings.empty());
}

TEST_CASE("push_down on the abelian surface agrees with term-by-term expansion")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass c = ab({{{1, 2}, 1}});
    REQUIRE(kappa(a, c) == ExtForm::monomial(2, Side::dual, {3, 4}));
    const LatticeClass m = ab({{{1, 2}, -1}, {{3, 4}, -1}});
    REQUIRE(u_exponent(a, m, c, Direction::down) == 1);
    const MomentSequence src{m - c,
                             {v(2, {1, 2, 3, 4}, 5), v(2, {1, 2}, 2) + v(2, {3, 4}, -3) + v(2, {1, 4}),
                              ExtForm::scalar(2, Side::primal, 4)}};
    REQUIRE(check_moments(a, src).empty());
    const PushResult r = push_down(a, m, c, src);
    const auto expected = oracle::push(kappa(a, c), 1, 2, src.moments, +1);
    REQUIRE(r.result.moments.size() == 2);
    CHECK(r.result.moments[0] == expected[0]);
    CHECK(r.result.moments[1] == expected[1]);
    // a_0 = w34 _| a'_0 + a'_1 = 5 v12 + (2 v12 - 3 v34 + v14)
    CHECK(r.result.moments[0] == v(2, {1, 2}, 7) + v(2, {3, 4}, -3) + v(2, {1, 4}));
    // a_1 = w34 _| a'_1 + a'_2 = -3 + 4
    CHECK(r.result.moments[1] == ExtForm::scalar(2, Side::primal, 1));
    CHECK(check_moments(a, r.result).empty());
}

TEST_CASE("push_up mirrors push_down with -kappa")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass c = ab({{{1, 2}, 1}});
    // (k - m).c = -1 means m.c = 1: m = e12 + e34
    const LatticeClass m = ab({{{1, 2}, 1}, {{3, 4}, 1}});
    REQUIRE(u_exponent(a, m, c, Direction::up) == 1);
    const LatticeClass src_class = m + c;
    REQUIRE(dot(a.h2, src_class, src_class) == 4);
    const MomentSequence src{src_class,
                             {v(2, {1, 2, 3, 4}, -2), v(2, {1, 2}, 1) + v(2, {2, 3}, 4),
                              ExtForm::scalar(2, Side::primal, 3)}};
    const PushResult r = push_up(a, m, c, src);
    const auto expected = oracle::push(kappa(a, c), 1, 2, src.moments, -1);
    REQUIRE(r.result.moments.size() == 2);
    CHECK(r.result.moments[0] == expected[0]);
    CHECK(r.result.moments[1] == expected[1]);
    CHECK(r.result.moments[0] == v(2, {1, 2}, 3) + v(2, {2, 3}, 4));
    CHECK(push(a, m, c, Direction::up, src).result == r.result);
}

TEST_CASE("push warns outside the hypothesis and rejects bad inputs")
{
    const SurfaceTopology a = abelian_surface();
    const LatticeClass c = ab({{{1, 2}, 1}});
    const LatticeClass m = ab({{{1, 2}, 1}, {{3, 4}, 2}});
    const PushResult r = push_down(a, m, c, MomentSequence{m - c, {}});
    CHECK_FALSE(r.warnings.empty());
    // wrong source class
    CHECK_THROWS_AS(push_down(a, m, c, MomentSequence{m, {}}), DimensionError);
    // source moment in the wrong degree
    const LatticeClass m2 = ab({{{1, 2}, -1}, {{3, 4}, -1}});
    CHECK_THROWS_AS(push_down(a, m2, c, MomentSequence{m2 - c, {v(2, {1})}}), DegreeError);
}

TEST_CASE("degree bookkeeping regression")
{
    fuzz::Rng rng(51);
    int detected = 0;
    for (int n = 0; n < 200; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        const LatticeClass m = fuzz::random_class(rng, s.h2.rank(), 3);
        const LatticeClass c = fuzz::random_class(rng, s.h2.rank(), 3);
        CHECK(degree_bookkeeping_closes(s, m, c, Direction::down));
        CHECK(degree_bookkeeping_closes(s, m, c, Direction::up));
        const bool differs = dot(s.h2, c, m - s.k) != 0;
        if (is_odd(dot(s.h2, c, c) + dot(s.h2, c, m)))
            continue;
        const bool printed = degree_bookkeeping_closes(s, m, c, Direction::down, ExponentConvention::as_printed);
        CHECK(printed == !differs);
        if (differs) {
            ++detected;
            const MomentSequence src = fuzz::random_moments(rng, s, m - c, 3);
            CHECK_THROWS_AS(push_down(s, m, c, src, ExponentConvention::as_printed), DegreeError);
        }
    }
    CHECK(detected > 20);
}

TEST_CASE("assemble")
{
    const MomentSequence empty{LatticeClass{0}, {}};
    CHECK(assemble_plus(empty, 1).is_zero());
    const ExtForm a0 = ExtForm::monomial(1, Side::primal, {1, 2}, 3);
    const ExtForm a1 = ExtForm::scalar(1, Side::primal, 5);
    CHECK(assemble_plus(MomentSequence{LatticeClass{0}, {a0}}, 1) == a0);
    CHECK(assemble_plus(MomentSequence{LatticeClass{0}, {a0, a1}}, 1) == a0 + a1);

    const MomentSequence ms{LatticeClass{0}, {a0, a1}};
    // epsilon = (-1)^{chi + d}
    CHECK(assemble_minus(ms, 0, 0, 1) == a0 - a1);
    CHECK(assemble_minus(ms, 1, 0, 1) == a1 - a0);
    CHECK(assemble_minus(ms, 2, 1, 1) == a1 - a0);
    CHECK(assemble_minus(empty, 3, 1, 1).is_zero());

    // applying the epsilon and (-u) signs twice returns the plain sum
    MomentSequence signed_back{LatticeClass{0}, {}};
    for (std::size_t i = 0; i < ms.moments.size(); ++i)
        signed_back.moments.push_back(i % 2 ? -ms.moments[i] : ms.moments[i]);
    CHECK(assemble_minus(signed_back, 1, 2, 1) == -assemble_plus(ms, 1));
    CHECK(assemble_minus(signed_back, 0, 2, 1) == assemble_plus(ms, 1));
}

TEST_CASE("relation_thm6 examples")
{
    const SurfaceTopology q0 = q0_surface(Lattice::from_rows({{0, 1}, {1, 0}}), {0, 0}, 2);
    const ExtForm p = ExtForm::scalar(0, Side::primal, 9);
    CHECK(relation_thm6(q0, {1, 1}, {1, 0}, Direction::down, p) == p);

    const SurfaceTopology flat = flat_abelian();
    const ExtForm big = v(2, {1, 2, 3, 4}, 2) + v(2, {1, 3}, -1) + ExtForm::scalar(2, Side::primal, 4);
    const LatticeClass m = ab({{{1, 2}, 3}, {{3, 4}, 3}});
    REQUIRE(dot(flat.h2, m, m) >= 4);
    CHECK(relation_thm6(flat, m, ab({{{1, 3}, 1}}), Direction::down, big) == big);
    const LatticeClass small = ab({{{1, 2}, 1}, {{3, 4}, 1}});
    REQUIRE(dot(flat.h2, small, small) == 2);
    CHECK(relation_thm6(flat, small, ab({{{1, 3}, 1}}), Direction::down, big) == truncate(big, 2));

    // kappa = w34, m(m-k) = 2: tau_2(v1234 + w34 _| v1234) = v12
    const SurfaceTopology a = abelian_surface();
    const LatticeClass c = ab({{{1, 2}, 1}});
    CHECK(relation_thm6(a, small, c, Direction::down, v(2, {1, 2, 3, 4})) == v(2, {1, 2}));
    CHECK(oracle::contract(kappa(a, c), v(2, {1, 2, 3, 4})) == v(2, {1, 2}));
    // negative bound annihilates
    const LatticeClass neg = ab({{{1, 3}, 1}, {{2, 4}, 1}});
    REQUIRE(dot(a.h2, neg, neg) < 0);
    CHECK(relation_thm6(a, neg, c, Direction::down, v(2, {1, 2, 3, 4})).is_zero());
}

TEST_CASE("relation consistency on random abelian instances")
{
    const SurfaceTopology a = abelian_surface();
    fuzz::Rng rng(52);
    int checked = 0;
    for (int n = 0; n < 400 && checked < 30; ++n) {
        const LatticeClass m = fuzz::random_class(rng, 6, 2);
        const LatticeClass c = fuzz::random_class(rng, 6, 2);
        for (Direction dir : {Direction::down, Direction::up}) {
            if (!relation_applies(a, m, c, dir))
                continue;
            const LatticeClass src = source_class(m, c, dir);
            const ConsistencyResult r = thm6_consistency(
                a, m, c, dir, fuzz::random_moments(rng, a, src, 4), fuzz::random_moments(rng, a, a.k - src, 4));
            CHECK_MESSAGE(r.ok(), r.diff);
            CHECK(r.applies);
            ++checked;
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("relation consistency, kappa = 0 shift and q = 0 scalar cases")
{
    const SurfaceTopology flat = flat_abelian();
    const LatticeClass c = ab({{{1, 2}, 1}, {{3, 4}, 1}});
    const LatticeClass m = ab({{{1, 2}, -1}});
    const MomentSequence src{m - c, {v(2, {1, 2, 3, 4}, 3), v(2, {1, 3}, 2), ExtForm::scalar(2, Side::primal, 7)}};
    const MomentSequence src_minus{flat.k - (m - c),
                                   {v(2, {1, 2, 3, 4}, -1), v(2, {2, 4}, 5), ExtForm::scalar(2, Side::primal, 2)}};
    const ConsistencyResult r = thm6_consistency(flat, m, c, Direction::down, src, src_minus);
    CHECK_MESSAGE(r.ok(), r.diff);

    const SurfaceTopology q0 = q0_surface(Lattice::from_rows({{-1}}), {1}, 1);
    // c = e: c^2 = -1, c.k = -1, m = e: m.c = -1, N = -1 + 1 = 0
    const LatticeClass e{1};
    const LatticeClass mm{1};
    REQUIRE(u_exponent(q0, mm, e, Direction::down) == 0);
    const MomentSequence s0{LatticeClass{0}, {ExtForm::scalar(0, Side::primal, 5)}};
    const MomentSequence s1{LatticeClass{1}, {ExtForm::scalar(0, Side::primal, -2)}};
    const ConsistencyResult r0 = thm6_consistency(q0, mm, e, Direction::down, s0, s1);
    CHECK_MESSAGE(r0.ok(), r0.diff);
    CHECK(r0.plus_from_moments == ExtForm::scalar(0, Side::primal, 5));
}

TEST_CASE("adjunction check")
{
    // U + <-1>, k = (0, 0, 1); pg flag set
    SurfaceTopology s = q0_surface(Lattice::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), {0, 0, 1}, 2, true);
    const LatticeClass e{0, 0, 1};  // c^2 = -1, c.k = -1, p_a = 0
    REQUIRE(arithmetic_genus(s.h2, e, s.k) == 0);

    // m.c = -1 with p_a = 0 is allowed
    const auto ok = adjunction_check(s, std::vector<LatticeClass>{LatticeClass{0, 0, 1}}, e, 0);
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].mc == -1);
    CHECK(ok[0].allowed);
    REQUIRE(ok[0].forced_shift);
    CHECK(*ok[0].forced_shift == 0);
    CHECK(ok[0].genus_identity_holds);

    // m.c = -2 is a violation
    const auto bad = adjunction_check(s, std::vector<LatticeClass>{LatticeClass{0, 0, 2}}, e, 0);
    CHECK_FALSE(bad[0].allowed);
    CHECK(*bad[0].forced_shift != 0);

    // c with p_a > 0 and 0 <= m.c <= k.c
    const LatticeClass f{1, 1, 0};  // c^2 = 2, k.c = 0, p_a = 2
    REQUIRE(arithmetic_genus(s.h2, f, s.k) == 2);
    const auto fine = adjunction_check(s, std::vector<LatticeClass>{LatticeClass{0, 0, 0}, LatticeClass{1, -1, 0}}, f, 2);
    CHECK(fine[0].allowed);
    CHECK(fine[1].allowed);
    CHECK_FALSE(fine[0].forced_shift);
    const auto off = adjunction_check(s, std::vector<LatticeClass>{LatticeClass{0, -1, 0}}, f, 2);
    CHECK_FALSE(off[0].allowed);
    CHECK(*off[0].forced_shift == 2);

    // m(m-k) != 0 is flagged against simple type
    const auto st = adjunction_check(s, std::vector<LatticeClass>{LatticeClass{1, 1, 0}}, f, 2);
    CHECK_FALSE(st[0].simple_type_consistent);

    CHECK_THROWS_AS(adjunction_check(s, std::vector<LatticeClass>{}, f, 1), Error);
    SurfaceTopology nopg = s;
    nopg.pg_positive = false;
    CHECK_THROWS_AS(adjunction_check(nopg, std::vector<LatticeClass>{}, f, 2), Error);

    // pairs must be basic
    PoincarePair zero{LatticeClass{0, 0, 0}, ExtForm(0, Side::primal), ExtForm(0, Side::primal)};
    CHECK_THROWS_AS(adjunction_check(s, std::vector<PoincarePair>{zero}, f, 2), Error);
    PoincarePair basic{LatticeClass{0, 0, 1}, ExtForm::scalar(0, Side::primal, 1), ExtForm(0, Side::primal)};
    CHECK(adjunction_check(s, std::vector<PoincarePair>{basic}, e, 0)[0].allowed);
}

TEST_CASE("forced conclusion over a box")
{
    SurfaceTopology s = q0_surface(Lattice::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), {0, 0, 1}, 2, true);
    oracle::for_each_box(3, 2, [&](const LatticeClass& c) {
        if (c.is_zero())
            return;
        const Integer pa = arithmetic_genus(s.h2, c, s.k);
        if (pa < 0)
            return;
        oracle::for_each_box(3, 2, [&](const LatticeClass& m) {
            const auto v = adjunction_check(s, std::vector<LatticeClass>{m}, c, pa)[0];
            if (v.mc < 0 && v.simple_type_consistent) {
                // with m - c also of simple type, the shift vanishes exactly when p_a = 0, m.c = -1
                const bool forced = pa == 0 && v.mc == -1;
                CHECK((*v.forced_shift == 0) == forced);
                CHECK(v.allowed == forced);
            }
            CHECK(v.genus_identity_holds);
        });
    });
}
