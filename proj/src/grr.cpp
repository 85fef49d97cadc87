#include "hilbrel/grr.hpp"

namespace hilbrel {

PushforwardCharacter operator-(const PushforwardCharacter& a, const PushforwardCharacter& b)
{
    return {a.rank - b.rank, a.d2 - b.d2, a.d4 - b.d4};
}

std::string describe_difference(const PushforwardCharacter& a, const PushforwardCharacter& b,
                                const std::string& left, const std::string& right)
{
    std::string out;
    if (a.rank != b.rank)
        out += "rank: " + left + " " + a.rank.get_str() + ", " + right + " " + b.rank.get_str() + "\n";
    if (a.d2 != b.d2)
        out += "degree 2: " + left + " " + to_display(a.d2) + ", " + right + " " + to_display(b.d2) + "\n";
    if (a.d4 != b.d4)
        out += "degree 4: " + left + " " + to_display(a.d4) + ", " + right + " " + to_display(b.d4) + "\n";
    return out;
}

std::string to_display(const PushforwardCharacter& ch)
{
    return ch.rank.get_str() + " + [" + to_display(ch.d2) + "] + [" + to_display(ch.d4) + "]";
}

BigradedClass poincare_first_chern(const RingPtr& ring, const LatticeClass& m)
{
    BigradedClass f = BigradedClass::from_h2(ring, m);
    for (int i = 1; i <= ring->surface().h1_rank(); ++i)
        f.add_term(Subset{1} << (i - 1), ring->h1(i), 1);
    return f;
}

PushforwardCharacter ch_pushforward(const RingPtr& ring, const LatticeClass& m)
{
    const int q = ring->q();
    const BigradedClass f = poincare_first_chern(ring, m);
    if (!f.component(2, 0).is_zero())
        throw DegreeError("Poincare bundle is not normalized: f^{2,0} != 0");
    const RationalExtForm ch = slant(mul(exp(f), todd_factor(ring)));

    PushforwardCharacter out{to_integer(ch.coefficient(0), "ch_0"), ExtForm(q, Side::dual),
                             ExtForm(q, Side::dual)};
    for (const auto& [s, c] : ch.terms()) {
        const int d = degree_of(s);
        if (d == 0)
            continue;
        if (d != 2 && d != 4)
            throw DegreeError("pushforward character has a component in degree " +
                              std::to_string(d) + " (only 0, 2, 4 are allowed)");
        (d == 2 ? out.d2 : out.d4).add_term(s, to_integer(c, "pushforward character"));
    }
    return out;
}

PushforwardCharacter ch_pushforward(const SurfaceTopology& surface, const LatticeClass& m)
{
    return ch_pushforward(make_ring(surface), m);
}

PushforwardCharacter closed_form_ch(const SurfaceTopology& s, const LatticeClass& m)
{
    const Integer rank = s.chi + expected_dimension(s.h2, m, s.k);
    const LatticeClass c = Integer(2) * m - s.k;
    return {rank, -theta(s, c), xi(s)};
}

Lemma1Result verify_lemma1(const RingPtr& ring, const LatticeClass& m)
{
    Lemma1Result r;
    r.pipeline = ch_pushforward(ring, m);
    r.closed = closed_form_ch(ring->surface(), m);
    r.equal = r.pipeline == r.closed;
    if (!r.equal)
        r.diff = describe_difference(r.pipeline, r.closed);
    return r;
}

Lemma1Result verify_lemma1(const SurfaceTopology& surface, const LatticeClass& m)
{
    return verify_lemma1(make_ring(surface), m);
}

PushforwardCharacter difference_closed_form(const SurfaceTopology& s, const LatticeClass& m,
                                            const LatticeClass& c)
{
    const Integer euler = dot(s.h2, m, c) -
                          exact_half(dot(s.h2, c, c) + dot(s.h2, c, s.k), "(c^2+c.k)/2");
    return {euler, -kappa(s, c), ExtForm(s.q, Side::dual)};
}

PushforwardCharacter difference_character(const RingPtr& ring, const LatticeClass& m,
                                          const LatticeClass& c)
{
    const PushforwardCharacter diff = ch_pushforward(ring, m) - ch_pushforward(ring, m - c);
    const PushforwardCharacter expected = difference_closed_form(ring->surface(), m, c);
    if (!(diff == expected))
        throw MismatchError("difference character disagrees with m.c - (c^2+c.k)/2 - kappa_c:\n" +
                            describe_difference(diff, expected));
    return diff;
}

PushforwardCharacter difference_character(const SurfaceTopology& surface, const LatticeClass& m,
                                          const LatticeClass& c)
{
    return difference_character(make_ring(surface), m, c);
}

RationalExtForm as_graded_form(const PushforwardCharacter& ch, int q)
{
    RationalExtForm out = RationalExtForm::scalar(q, Side::dual, Rational(ch.rank));
    out += to_rational(ch.d2);
    out += to_rational(ch.d4);
    return out;
}

ExtForm difference_chern(const RingPtr& ring, const LatticeClass& m, const LatticeClass& c)
{
    const SurfaceTopology& s = ring->surface();
    const ExtForm total = chern_from_ch(as_graded_form(difference_character(ring, m, c), s.q));
    const ExtForm expected = exp2(-kappa(s, c));
    if (!(total == expected))
        throw MismatchError("total Chern class " + to_display(total) + " differs from exp(-kappa_c) = " +
                            to_display(expected));
    return total;
}

ExtForm difference_chern(const SurfaceTopology& surface, const LatticeClass& m,
                         const LatticeClass& c)
{
    return difference_chern(make_ring(surface), m, c);
}

}  // namespace hilbrel
