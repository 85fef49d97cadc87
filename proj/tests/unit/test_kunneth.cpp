#include "hilbrel/fuzz.hpp"
#include "hilbrel/grr.hpp"
#include "hilbrel/kunneth.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hilbrel;

namespace {

SurfaceTopology elliptic_like()
{
    // q = 1, v1 u v2 = f with f isotropic in U
    SurfaceTopology s;
    s.q = 1;
    s.chi = 0;
    s.h2 = Lattice::from_rows({{0, 1}, {1, 0}});
    s.k = LatticeClass{0, 0};
    s.set_cup(1, 2, LatticeClass{1, 0});
    require_valid(s);
    return s;
}

BigradedClass f11(const RingPtr& ring)
{
    BigradedClass f(ring);
    for (int i = 1; i <= 2 * ring->q(); ++i)
        f.add_term(Subset{1} << (i - 1), ring->h1(i), 1);
    return f;
}

}  // namespace

TEST_CASE("square of the (1,1) component")
{
    const RingPtr ring = make_ring(elliptic_like());
    const BigradedClass g = mul(f11(ring), f11(ring));
    // -2 (w1 ^ w2) (x) (v1 u v2), and v1 u v2 = f = lattice basis vector 0
    BigradedClass expected(ring);
    expected.add_term(0b11, ring->h2(0), -2);
    CHECK(g == expected);
}

TEST_CASE("fourth power on the abelian surface")
{
    const RingPtr ring = make_ring(abelian_surface());
    const BigradedClass f = f11(ring);
    const BigradedClass f4 = mul(mul(f, f), mul(f, f));
    BigradedClass expected(ring);
    expected.add_term(0b1111, ring->point(), 24);
    CHECK(f4 == expected);
    CHECK(slant(f4) == RationalExtForm::monomial(2, Side::dual, {1, 2, 3, 4}, 24));
}

TEST_CASE("cube: (2,4) part is 3 (f11)^2 u m = -6 kappa_m")
{
    const SurfaceTopology a = abelian_surface();
    const RingPtr ring = make_ring(a);
    const LatticeClass m{2, -1, 0, 3, 1, -2};
    const BigradedClass f = poincare_first_chern(ring, m);
    const BigradedClass f3 = mul(mul(f, f), f);
    const BigradedClass part = f3.component(2, 4);
    const BigradedClass f11sq = mul(f11(ring), f11(ring));
    CHECK(part == Rational(3) * mul(f11sq, BigradedClass::from_h2(ring, m)));
    CHECK(slant(part) == Rational(-6) * to_rational(kappa(a, m)));
}

TEST_CASE("(1 (x) m)^2 has point coefficient m^2")
{
    const SurfaceTopology a = abelian_surface();
    const RingPtr ring = make_ring(a);
    const LatticeClass m{1, 0, 2, 0, 0, 3};
    const BigradedClass x = BigradedClass::from_h2(ring, m);
    BigradedClass expected(ring);
    expected.add_term(0, ring->point(), Rational(dot(a.h2, m, m)));
    CHECK(mul(x, x) == expected);
    const BigradedClass e = exp(x);
    CHECK(e.coefficient(0, ring->unit()) == 1);
    CHECK(e.coefficient(0, ring->point()) == Rational(dot(a.h2, m, m)) / 2);
}

TEST_CASE("exp")
{
    const RingPtr ring = make_ring(abelian_surface());
    CHECK(exp(BigradedClass(ring)) == BigradedClass::one(ring));
    const BigradedClass f = f11(ring);
    BigradedClass series = BigradedClass::one(ring);
    BigradedClass power = BigradedClass::one(ring);
    for (int n = 1; n <= 4; ++n) {
        power = mul(power, f);
        series += Rational(1) / Rational(factorial(n)) * power;
    }
    CHECK(exp(f) == series);
    CHECK_THROWS_AS(exp(BigradedClass::one(ring)), DegreeError);
}

TEST_CASE("slant")
{
    const RingPtr ring = make_ring(abelian_surface());
    CHECK(slant(BigradedClass::term(ring, 0, ring->point(), 1)) == RationalExtForm::one(2, Side::dual));
    CHECK(slant(BigradedClass::term(ring, 0b11, ring->point(), 7)) ==
          RationalExtForm::monomial(2, Side::dual, {1, 2}, 7));
    CHECK(slant(f11(ring)).is_zero());
    CHECK(slant(BigradedClass::one(ring)).is_zero());
}

TEST_CASE("todd factor")
{
    const RingPtr a = make_ring(abelian_surface());
    CHECK(todd_factor(a) == BigradedClass::one(a));
    const RingPtr b = make_ring(q0_surface(Lattice::from_rows({{2}}), {0}, 2));
    BigradedClass expected = BigradedClass::one(b);
    expected.add_term(0, b->point(), 2);
    CHECK(todd_factor(b) == expected);
    const RingPtr c = make_ring(q0_surface(Lattice::from_rows({{1, 0}, {0, -1}}), {3, 1}, 1));
    const BigradedClass t = todd_factor(c);
    CHECK(t.coefficient(0, c->h2(0)) == Rational(-3, 2));
    CHECK(t.coefficient(0, c->h2(1)) == Rational(-1, 2));
}

TEST_CASE("multiplication is associative, unital and graded commutative")
{
    fuzz::Rng rng(31);
    for (int n = 0; n < 25; ++n) {
        const SurfaceTopology s = fuzz::random_surface(rng);
        const RingPtr ring = make_ring(s);
        auto random_class = [&](int& parity) {
            BigradedClass x(ring);
            parity = -1;
            for (int t = 0; t < 3; ++t) {
                const std::size_t b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(ring->dim()) - 1));
                const int p = static_cast<int>(rng.uniform(0, s.h1_rank()));
                const ExtForm e = fuzz::random_form(rng, s.q, Side::dual, p, 3, 1);
                for (const auto& [sub, c] : e.terms()) {
                    const int total = (degree_of(sub) + ring->degree(b)) % 2;
                    if (parity >= 0 && total != parity)
                        continue;
                    parity = total;
                    x.add_term(sub, b, Rational(c));
                }
            }
            if (parity < 0)
                parity = 0;
            return x;
        };
        int px, py, pz;
        const BigradedClass x = random_class(px);
        const BigradedClass y = random_class(py);
        const BigradedClass z = random_class(pz);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(BigradedClass::one(ring), x) == x);
        CHECK(mul(x, BigradedClass::one(ring)) == x);
        const Rational sign = (px * py) % 2 ? -1 : 1;
        CHECK(mul(x, y) == sign * mul(y, x));
    }
}

TEST_CASE("chern_from_ch")
{
    const int q = 2;
    RationalExtForm rank(q, Side::dual);
    rank.add_term(0, 3);
    CHECK(chern_from_ch(rank) == ExtForm::one(q, Side::dual));

    const ExtForm k = ExtForm::monomial(q, Side::dual, {1, 2}, 2) + ExtForm::monomial(q, Side::dual, {3, 4}, -3) +
                      ExtForm::monomial(q, Side::dual, {1, 3}, 1);
    // ch = r - kappa has c = exp(-kappa)
    CHECK(chern_from_ch(rank - to_rational(k)) == exp2(-k));
    // c_1 = ch_1
    CHECK(chern_from_ch(rank + to_rational(k)).part(2) == k);

    // Whitney: ch adds, c multiplies
    const ExtForm l = ExtForm::monomial(q, Side::dual, {2, 4}, 5);
    RationalExtForm ch_sum = rank + rank - to_rational(k) - to_rational(l);
    CHECK(chern_from_ch(ch_sum) == wedge(exp2(-k), exp2(-l)));

    RationalExtForm bad(q, Side::dual);
    bad.add_term(0, Rational(1, 2));
    CHECK_THROWS_AS(chern_from_ch(bad), IntegralityError);
    RationalExtForm odd = rank;
    odd.add_term(0b1, 1);
    CHECK_THROWS_AS(chern_from_ch(odd), DegreeError);
    RationalExtForm frac = rank;
    frac.add_term(0b11, Rational(1, 2));
    CHECK_THROWS_AS(chern_from_ch(frac), IntegralityError);
}
