#include "hilbrel/extalg.hpp"

#include <unordered_map>

namespace hilbrel {

std::vector<int> indices_of(Subset s)
{
    std::vector<int> out;
    out.reserve(degree_of(s));
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

Subset subset_from_indices(const std::vector<int>& indices, int q)
{
    Subset s = 0;
    int prev = 0;
    for (int i : indices) {
        if (i < 1 || i > 2 * q)
            throw DimensionError("generator index " + std::to_string(i) + " outside 1.." +
                                 std::to_string(2 * q));
        if (i <= prev)
            throw DimensionError("generator indices must be strictly increasing");
        prev = i;
        s |= Subset{1} << (i - 1);
    }
    return s;
}

ExtForm exp2(const ExtForm& kappa, int max_deg)
{
    if (kappa.side() != Side::dual)
        throw DimensionError("exp2: expects a dual form");
    if (!kappa.is_homogeneous(2))
        throw DegreeError("exp2: argument must be homogeneous of degree 2");

    const int q = kappa.q();
    ExtForm out(q, Side::dual);
    if (max_deg < 0)
        return out;
    out.add_term(0, 1);

    Subset support = 0;
    for (const auto& [s, c] : kappa.terms())
        support |= s;

    // Pf(S) = sum_{j} (-1)^{pos(j)+1} a_{s1 j} Pf(S \ {s1, j}), s1 = min S,
    // where pos(j) is the 0-based position of j in S. Subsets are filled in
    // order of size so every smaller Pfaffian is already available.
    std::unordered_map<Subset, Integer> pf;
    pf.emplace(0, 1);
    std::vector<Subset> layer{0};
    const int top = std::min<int>(max_deg, degree_of(support));
    for (int size = 2; size <= top; size += 2) {
        std::vector<Subset> next;
        for (Subset base : layer) {
            // extend each set by a pair of indices below its minimum; every
            // subset of the support arises exactly once this way
            const Subset below = base ? ((Subset{1} << std::countr_zero(base)) - 1) : ~Subset{0};
            Subset cand = support & below;
            std::vector<int> bits;
            while (cand) {
                bits.push_back(std::countr_zero(cand));
                cand &= cand - 1;
            }
            for (std::size_t x = 0; x < bits.size(); ++x)
                for (std::size_t y = x + 1; y < bits.size(); ++y) {
                    const Subset s = base | (Subset{1} << bits[x]) | (Subset{1} << bits[y]);
                    if (pf.count(s))
                        continue;
                    const int first = std::countr_zero(s);
                    Integer value = 0;
                    Subset rest = s & (s - 1);
                    int pos = 1;
                    while (rest) {
                        const int j = std::countr_zero(rest);
                        rest &= rest - 1;
                        const Integer& a = kappa.coefficient((Subset{1} << first) | (Subset{1} << j));
                        if (a != 0) {
                            auto it = pf.find(s & ~(Subset{1} << first) & ~(Subset{1} << j));
                            if (it != pf.end() && it->second != 0) {
                                if (pos % 2 == 1)
                                    value += a * it->second;
                                else
                                    value -= a * it->second;
                            }
                        }
                        ++pos;
                    }
                    pf.emplace(s, value);
                    next.push_back(s);
                    out.add_term(s, value);
                }
        }
        layer = std::move(next);
    }
    return out;
}

RationalExtForm to_rational(const ExtForm& x)
{
    RationalExtForm out(x.q(), x.side());
    for (const auto& [s, c] : x.terms())
        out.add_term(s, Rational(c));
    return out;
}

ExtForm to_integral(const RationalExtForm& x, const std::string& what)
{
    ExtForm out(x.q(), x.side());
    for (const auto& [s, c] : x.terms())
        out.add_term(s, to_integer(c, what));
    return out;
}

}  // namespace hilbrel
