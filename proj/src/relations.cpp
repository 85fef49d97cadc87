#include "hilbrel/relations.hpp"

namespace hilbrel {

namespace {

Integer twice_expected_dim(const SurfaceTopology& s, const LatticeClass& m)
{
    return dot(s.h2, m, m - s.k);
}

void trim(std::vector<ExtForm>& moments)
{
    while (!moments.empty() && moments.back().is_zero())
        moments.pop_back();
}

std::string class_text(const LatticeClass& x)
{
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            out += ",";
        out += x[i].get_str();
    }
    return out + ")";
}

}  // namespace

Integer moment_degree(const SurfaceTopology& s, const LatticeClass& m, std::size_t i)
{
    return twice_expected_dim(s, m) - Integer(2) * Integer(static_cast<unsigned long>(i));
}

std::vector<std::string> check_moments(const SurfaceTopology& s, const MomentSequence& ms)
{
    std::vector<std::string> issues;
    if (ms.m.size() != s.h2.rank()) {
        issues.push_back("moment sequence class has the wrong number of coordinates");
        return issues;
    }
    for (std::size_t i = 0; i < ms.moments.size(); ++i) {
        const ExtForm& a = ms.moments[i];
        if (a.is_zero())
            continue;
        if (a.side() != Side::primal || a.q() != s.q) {
            issues.push_back("a_" + std::to_string(i) + " is not a primal form over H^1 of rank " +
                             std::to_string(s.h1_rank()));
            continue;
        }
        const Integer d = moment_degree(s, ms.m, i);
        if (d < 0 || d > s.h1_rank() || !a.is_homogeneous(static_cast<int>(d.get_si())))
            issues.push_back("a_" + std::to_string(i) + " must be homogeneous of degree " + d.get_str() +
                             " (zero if that is negative or above " + std::to_string(s.h1_rank()) + ")");
    }
    return issues;
}

LatticeClass source_class(const LatticeClass& m, const LatticeClass& c, Direction direction)
{
    return direction == Direction::down ? m - c : m + c;
}

Integer u_exponent(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                   Direction direction, ExponentConvention convention)
{
    const Integer cc = dot(s.h2, c, c);
    if (direction == Direction::down) {
        const Integer mc = dot(s.h2, m, c);
        if (convention == ExponentConvention::as_printed)
            return exact_half(cc + mc, "(c^2+c.m)/2") - mc;
        return exact_half(cc + dot(s.h2, c, s.k), "(c^2+c.k)/2") - mc;
    }
    return exact_half(cc + dot(s.h2, c, s.k), "(c^2+c.k)/2") - dot(s.h2, s.k - m, c);
}

CoefficientPolynomial coefficient_class(const SurfaceTopology& s, const LatticeClass& m,
                                        const LatticeClass& c, Direction direction,
                                        ExponentConvention convention)
{
    if (!is_characteristic(s.h2, s.k))
        throw ParityError("coefficient_class: canonical class is not characteristic");
    const Integer n = u_exponent(s, m, c, direction, convention);
    const ExtForm k = kappa(s, c);
    const ExtForm e = exp2(direction == Direction::down ? k : ExtForm(-k));
    CoefficientPolynomial out;
    for (int j = 0; j <= s.q; ++j) {
        const Integer exponent = n - j;
        if (exponent < 0)
            break;
        ExtForm coeff = e.part(2 * j);
        if (coeff.is_zero())
            continue;
        out.push_back({exponent, std::move(coeff)});
    }
    return out;
}

bool degree_bookkeeping_closes(const SurfaceTopology& s, const LatticeClass& m,
                               const LatticeClass& c, Direction direction,
                               ExponentConvention convention)
{
    const Integer n = u_exponent(s, m, c, direction, convention);
    const LatticeClass src = source_class(m, c, direction);
    return twice_expected_dim(s, src) - Integer(2) * n == twice_expected_dim(s, m);
}

namespace {

PushResult push_impl(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                     Direction direction, const MomentSequence& src, ExponentConvention convention)
{
    const LatticeClass expected_src = source_class(m, c, direction);
    if (!(src.m == expected_src))
        throw DimensionError(std::string("push_") + to_string(direction) +
                             ": source moments describe " + class_text(src.m) + ", expected " +
                             class_text(expected_src));
    if (auto issues = check_moments(s, src); !issues.empty())
        throw DegreeError("source moment sequence is invalid: " + issues.front());
    if (!degree_bookkeeping_closes(s, m, c, direction, convention))
        throw DegreeError(std::string("push_") + to_string(direction) + ": u-exponent " +
                          u_exponent(s, m, c, direction, convention).get_str() +
                          " does not close the degree bookkeeping");

    PushResult out;
    out.result.m = m;
    const Integer hyp = direction == Direction::down ? dot(s.h2, m, c) : dot(s.h2, s.k - m, c);
    if (hyp >= 0)
        out.warnings.push_back(std::string(direction == Direction::down ? "m.c" : "(k-m).c") +
                               " = " + hyp.get_str() + " is not negative; relation applied as stated");

    const Integer top = twice_expected_dim(s, m);
    if (top < 0)
        return out;
    const CoefficientPolynomial poly = coefficient_class(s, m, c, direction, convention);
    const Integer last_index = top / 2;
    const std::size_t count = last_index < Integer(static_cast<unsigned long>(src.moments.size()))
                                  ? static_cast<std::size_t>(last_index.get_ui()) + 1
                                  : src.moments.size();
    for (std::size_t i = 0; i < count; ++i) {
        ExtForm a(s.q, Side::primal);
        for (const auto& term : poly) {
            const Integer l = term.exponent + static_cast<unsigned long>(i);
            if (l >= Integer(static_cast<unsigned long>(src.moments.size())))
                continue;
            const ExtForm& source = src.moments[l.get_ui()];
            if (source.is_zero())
                continue;
            a += contract(term.coeff, source);
        }
        const Integer d = moment_degree(s, m, i);
        if (!a.is_zero() && !(d <= s.h1_rank() && a.is_homogeneous(static_cast<int>(d.get_si()))))
            throw DegreeError("pushed moment a_" + std::to_string(i) + " is not of degree " + d.get_str());
        out.result.moments.push_back(std::move(a));
    }
    trim(out.result.moments);
    return out;
}

}  // namespace

PushResult push_down(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                     const MomentSequence& src, ExponentConvention convention)
{
    return push_impl(s, m, c, Direction::down, src, convention);
}

PushResult push_up(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                   const MomentSequence& src)
{
    return push_impl(s, m, c, Direction::up, src, ExponentConvention::corrected);
}

PushResult push(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                Direction direction, const MomentSequence& src)
{
    return push_impl(s, m, c, direction, src, ExponentConvention::corrected);
}

ExtForm assemble_plus(const MomentSequence& ms, int q)
{
    ExtForm out(q, Side::primal);
    for (const auto& a : ms.moments)
        if (!a.is_zero())
            out += a;
    return out;
}

ExtForm assemble_minus(const MomentSequence& ms, const Integer& chi, const Integer& expected_dim, int q)
{
    ExtForm out(q, Side::primal);
    for (std::size_t i = 0; i < ms.moments.size(); ++i) {
        if (ms.moments[i].is_zero())
            continue;
        if (i % 2 == 0)
            out += ms.moments[i];
        else
            out -= ms.moments[i];
    }
    if (sign_power(chi + expected_dim) < 0)
        out = -out;
    return out;
}

ExtForm relation_thm6(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                      Direction direction, const ExtForm& p_src)
{
    if (!is_characteristic(s.h2, s.k))
        throw ParityError("relation_thm6: canonical class is not characteristic");
    const ExtForm k = kappa(s, c);
    const ExtForm e = exp2(direction == Direction::down ? k : ExtForm(-k));
    const Integer bound = twice_expected_dim(s, m);
    const long n = bound < 0 ? -1 : (bound > s.h1_rank() ? s.h1_rank() : bound.get_si());
    return truncate(contract(e, p_src), n);
}

bool relation_applies(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                      Direction direction)
{
    const Integer n = u_exponent(s, m, c, direction);
    if (n < 0)
        return false;
    if (2 * n >= s.h1_rank())
        return true;
    const long next = 2 * (n.get_si() + 1);
    return exp2(kappa(s, c), static_cast<int>(next)).part(static_cast<int>(next)).is_zero();
}

ConsistencyResult thm6_consistency(const SurfaceTopology& s, const LatticeClass& m,
                                   const LatticeClass& c, Direction direction,
                                   const MomentSequence& src_plus, const MomentSequence& src_minus)
{
    ConsistencyResult r;
    const int q = s.q;
    r.applies = relation_applies(s, m, c, direction);

    const MomentSequence pushed = push(s, m, c, direction, src_plus).result;
    r.plus_from_moments = assemble_plus(pushed, q);
    r.plus_from_relation = relation_thm6(s, m, c, direction, assemble_plus(src_plus, q));
    r.plus_ok = r.plus_from_moments == r.plus_from_relation;

    // P-(m) is built from Hilb^{k-m}; the relation for k-m runs the other way.
    const LatticeClass dual_m = s.k - m;
    const Direction dual_direction = direction == Direction::down ? Direction::up : Direction::down;
    const MomentSequence pushed_minus = push(s, dual_m, c, dual_direction, src_minus).result;
    const LatticeClass m_src = source_class(m, c, direction);
    r.minus_from_moments = assemble_minus(pushed_minus, s.chi, expected_dimension(s.h2, m, s.k), q);
    const ExtForm p_minus_src =
        assemble_minus(src_minus, s.chi, expected_dimension(s.h2, m_src, s.k), q);
    r.minus_from_relation = relation_thm6(s, m, c, direction, p_minus_src);
    r.minus_ok = r.minus_from_moments == r.minus_from_relation;

    if (!r.plus_ok)
        r.diff += "P+: moments give " + to_display(r.plus_from_moments) + ", relation gives " +
                  to_display(r.plus_from_relation) + "\n";
    if (!r.minus_ok)
        r.diff += "P-: moments give " + to_display(r.minus_from_moments) + ", relation gives " +
                  to_display(r.minus_from_relation) + "\n";
    if (!r.ok() && !r.applies)
        r.diff += "note: N < 0 or kappa_c^{N+1} != 0, so the relation is not expected to hold\n";
    return r;
}

namespace {

AdjunctionVerdict judge(const SurfaceTopology& s, const LatticeClass& m, const LatticeClass& c,
                        const Integer& pa)
{
    AdjunctionVerdict v;
    v.m = m;
    v.mc = dot(s.h2, m, c);
    v.kc = dot(s.h2, s.k, c);
    v.simple_type_consistent = twice_expected_dim(s, m) == 0;

    if (pa > 0)
        v.allowed = v.mc >= 0 && v.mc <= v.kc;
    else
        v.allowed = v.mc >= -1 && v.mc <= v.kc + 1;

    if (v.mc < 0) {
        v.forced_shift = pa - 1 - v.mc;
        v.genus_identity_holds = genus_identity_check(s.h2, m, c, s.k);
        v.reason = "m.c = " + v.mc.get_str() + " < 0: m-c is basic, so p_a - 1 - m.c = " +
                   v.forced_shift->get_str() + " must vanish (needs p_a = 0 and m.c = -1)";
    } else if (v.mc > v.kc) {
        const Integer kmc = v.kc - v.mc;
        v.forced_shift = pa - 1 - kmc;
        v.genus_identity_holds = genus_identity_check_plus(s.h2, m, c, s.k);
        v.reason = "(k-m).c = " + kmc.get_str() + " < 0: m+c is basic, so p_a - 1 - (k-m).c = " +
                   v.forced_shift->get_str() + " must vanish (needs p_a = 0 and (k-m).c = -1)";
    } else {
        v.reason = "0 <= m.c <= k.c";
    }
    if (v.forced_shift && (*v.forced_shift == 0) != v.allowed)
        throw Error("adjunction_check: inequality and forced-shift arithmetic disagree");
    if (!v.simple_type_consistent)
        v.reason += "; m(m-k) != 0 contradicts simple type";
    return v;
}

void require_applicable(const SurfaceTopology& s, const LatticeClass& c, const Integer& pa)
{
    if (!s.pg_positive)
        throw Error("adjunction_check needs p_g(V) > 0 (simple type); pg_positive is false");
    const Integer genus = arithmetic_genus(s.h2, c, s.k);
    if (genus != pa)
        throw Error("p_a = " + pa.get_str() + " disagrees with the adjunction formula (c^2+c.k)/2+1 = " +
                    genus.get_str());
    if (pa < 0)
        throw Error("p_a = " + pa.get_str() + " is negative; c is not the class of an integral curve");
}

}  // namespace

std::vector<AdjunctionVerdict> adjunction_check(const SurfaceTopology& s,
                                                const std::vector<PoincarePair>& basics,
                                                const LatticeClass& c, const Integer& pa)
{
    require_applicable(s, c, pa);
    std::vector<AdjunctionVerdict> out;
    for (const auto& pair : basics) {
        if (!pair.is_basic())
            throw Error("class " + class_text(pair.m) + " is not basic: (P+, P-) = (0, 0)");
        out.push_back(judge(s, pair.m, c, pa));
    }
    return out;
}

std::vector<AdjunctionVerdict> adjunction_check(const SurfaceTopology& s,
                                                const std::vector<LatticeClass>& basic_classes,
                                                const LatticeClass& c, const Integer& pa)
{
    require_applicable(s, c, pa);
    std::vector<AdjunctionVerdict> out;
    for (const auto& m : basic_classes)
        out.push_back(judge(s, m, c, pa));
    return out;
}

}  // namespace hilbrel
