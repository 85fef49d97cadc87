#include "hilbrel/swbridge.hpp"

namespace hilbrel {

LatticeClass spinc_chern(const SurfaceTopology& s, const LatticeClass& m)
{
    return Integer(2) * m - s.k;
}

void require_shape(const EmbeddedSurfaceData& e, int q)
{
    if (e.genus < 0)
        throw DimensionError("embedded surface genus must be nonnegative");
    if (e.pullback.size() != static_cast<std::size_t>(2 * q))
        throw DimensionError("pullback matrix has " + std::to_string(e.pullback.size()) +
                             " rows, expected 2q = " + std::to_string(2 * q));
    for (const auto& row : e.pullback)
        if (row.size() != static_cast<std::size_t>(2 * e.genus))
            throw DimensionError("pullback matrix row has " + std::to_string(row.size()) +
                                 " entries, expected 2g = " + std::to_string(2 * e.genus));
}

ExtForm theta_sigma(const EmbeddedSurfaceData& e, int q)
{
    require_shape(e, q);
    ExtForm out(q, Side::dual);
    const int n = 2 * q;
    const int g = e.genus;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Integer value = 0;
            for (int i = 0; i < g; ++i)
                value += e.pullback[a][i] * e.pullback[b][g + i] - e.pullback[a][g + i] * e.pullback[b][i];
            out.add_term((Subset{1} << a) | (Subset{1} << b), value);
        }
    return out;
}

Lemma4Result lemma4_check(const SurfaceTopology& s, const EmbeddedSurfaceData& e)
{
    Lemma4Result r;
    r.theta = theta_sigma(e, s.q);
    r.kappa = kappa(s, e.c);
    const ExtForm diff = r.theta - r.kappa;
    for (const auto& [sub, value] : diff.terms()) {
        const auto idx = indices_of(sub);
        r.mismatches.emplace_back(idx[0], idx[1]);
    }
    r.equal = r.mismatches.empty();
    return r;
}

OsEquivalence os_condition_equiv(const Integer& mc, const Integer& kc)
{
    OsEquivalence r;
    const Integer pairing = 2 * mc - kc;  // <c_1(c_m), [Sigma]>
    r.lhs = abs(pairing) >= kc + 2;
    const bool first = mc <= -1;
    const bool second = kc - mc <= -1;
    r.rhs = first || second;
    r.both_cases = first && second;
    if (first && !second)
        r.epsilon = -1;
    else if (second && !first)
        r.epsilon = 1;
    else if (r.both_cases && pairing != 0)
        r.epsilon = pairing < 0 ? -1 : 1;
    if (r.lhs != r.rhs)
        throw MismatchError("Ozsvath-Szabo condition equivalence failed for m.c = " + mc.get_str() +
                            ", k.c = " + kc.get_str());
    return r;
}

OsEquivalence os_condition_equiv(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c)
{
    return os_condition_equiv(dot(s.h2, m, c), dot(s.h2, s.k, c));
}

GenusTranslation genus_selfintersection_translate(const SurfaceTopology& s, const LatticeClass& c)
{
    GenusTranslation t;
    const Integer cc = dot(s.h2, c, c);
    const Integer kc = dot(s.h2, s.k, c);
    t.genus = arithmetic_genus(s.h2, c, s.k);
    t.n = -cc;
    t.identity_holds = 2 * t.genus + t.n == kc + 2;
    if (c.is_zero())
        t.warnings.push_back("c = 0: degenerate embedded surface");
    else if (cc >= 0)
        t.warnings.push_back("c^2 = " + cc.get_str() + " is not negative; n = -c^2 is not positive");
    return t;
}

}  // namespace hilbrel
