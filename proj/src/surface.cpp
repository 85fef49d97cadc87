#include "hilbrel/surface.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hilbrel {

namespace {

// Sign of the permutation sorting four distinct indices.
int sort_sign(std::array<int, 4> v)
{
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j + 1 < 4 - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                sign = -sign;
            }
    return sign;
}

std::string pair_name(int i, int j)
{
    return "W(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

LatticeClass SurfaceTopology::cup(int i, int j) const
{
    if (i < 1 || j < 1 || i > h1_rank() || j > h1_rank())
        throw DimensionError("cup index outside 1.." + std::to_string(h1_rank()));
    if (i == j)
        return LatticeClass::zero(h2.rank());
    const bool swapped = i > j;
    auto it = cup11.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == cup11.end())
        return LatticeClass::zero(h2.rank());
    return swapped ? -it->second : it->second;
}

void SurfaceTopology::set_cup(int i, int j, LatticeClass value)
{
    if (i == j)
        throw DimensionError("set_cup: v_i u v_i is always zero");
    if (i > j) {
        std::swap(i, j);
        value = -value;
    }
    if (value.is_zero())
        cup11.erase({i, j});
    else
        cup11[{i, j}] = std::move(value);
}

Integer SurfaceTopology::quadruple(int a, int b, int c, int d) const
{
    return dot(h2, cup(a, b), cup(c, d));
}

std::vector<std::string> validate(const SurfaceTopology& s)
{
    std::vector<std::string> issues;
    if (s.q < 0 || s.q > max_half_rank) {
        issues.push_back("irregularity q=" + std::to_string(s.q) + " outside 0.." +
                         std::to_string(max_half_rank));
        return issues;
    }
    const std::size_t rank = s.h2.rank();
    if (s.k.size() != rank) {
        issues.push_back("canonical class has " + std::to_string(s.k.size()) +
                         " coordinates, lattice rank is " + std::to_string(rank));
        return issues;
    }
    bool shapes_ok = true;
    for (const auto& [key, value] : s.cup11) {
        const auto [i, j] = key;
        if (i < 1 || j > s.h1_rank() || i >= j) {
            issues.push_back("cup entry " + pair_name(i, j) + " must satisfy 1 <= i < j <= " +
                             std::to_string(s.h1_rank()));
            shapes_ok = false;
        } else if (value.size() != rank) {
            issues.push_back("cup entry " + pair_name(i, j) + " has " +
                             std::to_string(value.size()) + " coordinates, lattice rank is " +
                             std::to_string(rank));
            shapes_ok = false;
        }
    }
    if (!is_characteristic(s.h2, s.k))
        issues.push_back("canonical class k is not characteristic (x.x != x.k mod 2 for some basis x)");
    if (!shapes_ok)
        return issues;

    // The quadruple product must be alternating in all four arguments:
    // vanish on repeated indices and follow the sorting sign otherwise.
    const int n = s.h1_rank();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    const Integer value = s.quadruple(a, b, c, d);
                    if (a == c || a == d || b == c || b == d) {
                        if (value != 0)
                            issues.push_back(pair_name(a, b) + "." + pair_name(c, d) + " = " +
                                             value.get_str() +
                                             " but must vanish (repeated H^1 index)");
                        continue;
                    }
                    std::array<int, 4> sorted{a, b, c, d};
                    const int sign = sort_sign(sorted);
                    std::sort(sorted.begin(), sorted.end());
                    if (sorted == std::array<int, 4>{a, b, c, d})
                        continue;
                    const Integer reference =
                        s.quadruple(sorted[0], sorted[1], sorted[2], sorted[3]);
                    const Integer expected = sign > 0 ? reference : Integer(-reference);
                    if (value != expected) {
                        std::ostringstream msg;
                        msg << "Pluecker violation: " << pair_name(a, b) << "." << pair_name(c, d)
                            << " = " << value.get_str() << ", expected " << expected.get_str()
                            << " from " << pair_name(sorted[0], sorted[1]) << "."
                            << pair_name(sorted[2], sorted[3]);
                        issues.push_back(msg.str());
                    }
                }
    return issues;
}

void require_valid(const SurfaceTopology& surface)
{
    const auto issues = validate(surface);
    if (issues.empty())
        return;
    std::string msg = "invalid surface data:";
    for (const auto& issue : issues)
        msg += "\n  " + issue;
    throw Error(msg);
}

ExtForm kappa(const SurfaceTopology& s, const LatticeClass& c)
{
    if (c.size() != s.h2.rank())
        throw DimensionError("kappa: class length does not match the lattice rank");
    ExtForm out(s.q, Side::dual);
    const LatticeClass gc = s.h2.apply(c);
    for (const auto& [key, w] : s.cup11) {
        Integer value = 0;
        for (std::size_t r = 0; r < w.size(); ++r)
            value += w[r] * gc[r];
        out.add_term(subset_from_indices({key.first, key.second}, s.q), value);
    }
    return out;
}

ExtForm theta(const SurfaceTopology& s, const LatticeClass& c)
{
    if (!is_characteristic(s.h2, c))
        throw ParityError("theta: class is not characteristic");
    const ExtForm twice = kappa(s, c);
    ExtForm out(s.q, Side::dual);
    for (const auto& [sub, value] : twice.terms())
        out.add_term(sub, exact_half(value, "theta coefficient (inconsistent surface data)"));
    return out;
}

ExtForm xi(const SurfaceTopology& s)
{
    ExtForm out(s.q, Side::dual);
    const int n = s.h1_rank();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    out.add_term(subset_from_indices({a, b, c, d}, s.q), s.quadruple(a, b, c, d));
    return out;
}

std::size_t abelian_pair_index(int i, int j)
{
    static constexpr std::array<std::pair<int, int>, 6> pairs{
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (pairs[p] == std::pair{i, j})
            return p;
    throw DimensionError("abelian_pair_index: expects 1 <= i < j <= 4");
}

SurfaceTopology abelian_surface()
{
    static constexpr std::array<std::pair<int, int>, 6> pairs{
        {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    std::vector<std::vector<Integer>> gram(6, std::vector<Integer>(6, 0));
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y) {
            const auto [a, b] = pairs[x];
            const auto [c, d] = pairs[y];
            if (a == c || a == d || b == c || b == d)
                continue;
            gram[x][y] = sort_sign({a, b, c, d});
        }
    SurfaceTopology s;
    s.q = 2;
    s.chi = 0;
    s.h2 = Lattice(std::move(gram));
    s.k = LatticeClass::zero(6);
    for (std::size_t p = 0; p < 6; ++p)
        s.set_cup(pairs[p].first, pairs[p].second, LatticeClass::basis(6, p));
    s.pg_positive = true;
    require_valid(s);
    return s;
}

SurfaceTopology q0_surface(Lattice lattice, LatticeClass k, Integer chi, bool pg_positive)
{
    SurfaceTopology s;
    s.q = 0;
    s.chi = std::move(chi);
    s.h2 = std::move(lattice);
    s.k = std::move(k);
    s.pg_positive = pg_positive;
    require_valid(s);
    return s;
}

}  // namespace hilbrel
