#include "hilbrel/lattice.hpp"

#include <string>

namespace hilbrel {

namespace {

void require_rank(const Lattice& lattice, const LatticeClass& x, const char* what)
{
    if (x.size() != lattice.rank())
        throw DimensionError(std::string(what) + ": class has " + std::to_string(x.size()) +
                             " coordinates, lattice rank is " + std::to_string(lattice.rank()));
}

}  // namespace

LatticeClass::LatticeClass(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
}

LatticeClass LatticeClass::basis(std::size_t rank, std::size_t i)
{
    LatticeClass x = zero(rank);
    x.coords_.at(i) = 1;
    return x;
}

bool LatticeClass::is_zero() const
{
    for (const auto& c : coords_)
        if (c != 0)
            return false;
    return true;
}

LatticeClass& LatticeClass::operator+=(const LatticeClass& other)
{
    if (other.size() != size())
        throw DimensionError("LatticeClass addition: length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] += other.coords_[i];
    return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& other)
{
    if (other.size() != size())
        throw DimensionError("LatticeClass subtraction: length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coords_[i] -= other.coords_[i];
    return *this;
}

LatticeClass operator-(LatticeClass a)
{
    for (auto& c : a.coords_)
        c = -c;
    return a;
}

LatticeClass operator*(const Integer& s, LatticeClass a)
{
    for (auto& c : a.coords_)
        c *= s;
    return a;
}

Lattice::Lattice(std::vector<std::vector<Integer>> gram) : gram_(std::move(gram))
{
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n)
            throw DimensionError("gram row " + std::to_string(i + 1) + " has " +
                                 std::to_string(gram_[i].size()) + " entries, expected " +
                                 std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw DimensionError("gram matrix is not symmetric at (" + std::to_string(i + 1) +
                                     "," + std::to_string(j + 1) + ")");
}

Lattice Lattice::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::vector<std::vector<Integer>> g;
    for (const auto& row : rows) {
        auto& r = g.emplace_back();
        for (long v : row)
            r.emplace_back(v);
    }
    return Lattice(std::move(g));
}

LatticeClass Lattice::apply(const LatticeClass& x) const
{
    require_rank(*this, x, "Lattice::apply");
    LatticeClass out = LatticeClass::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (x[j] != 0)
                out[i] += gram_[i][j] * x[j];
    return out;
}

Integer dot(const Lattice& lattice, const LatticeClass& x, const LatticeClass& y)
{
    require_rank(lattice, x, "dot");
    require_rank(lattice, y, "dot");
    Integer sum = 0;
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < lattice.rank(); ++j)
            if (y[j] != 0)
                sum += x[i] * lattice.gram(i, j) * y[j];
    }
    return sum;
}

bool is_characteristic(const Lattice& lattice, const LatticeClass& k)
{
    if (k.size() != lattice.rank())
        return false;
    const LatticeClass gk = lattice.apply(k);
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
        const Integer diff = lattice.gram(i, i) - gk[i];
        if (is_odd(diff))
            return false;
    }
    return true;
}

Integer expected_dimension(const Lattice& lattice, const LatticeClass& m, const LatticeClass& k)
{
    return exact_half(dot(lattice, m, m - k), "expected dimension m(m-k)/2");
}

Integer arithmetic_genus(const Lattice& lattice, const LatticeClass& c, const LatticeClass& k)
{
    const Integer twice = dot(lattice, c, c) + dot(lattice, c, k);
    return exact_half(twice, "arithmetic genus (c^2+c.k)/2") + 1;
}

bool genus_identity_check(const Lattice& lattice, const LatticeClass& m, const LatticeClass& c,
                          const LatticeClass& k)
{
    try {
        const LatticeClass mc = m - c;
        const Integer lhs = exact_half(dot(lattice, mc, mc - k), "lhs");
        const Integer rhs = expected_dimension(lattice, m, k) + arithmetic_genus(lattice, c, k) - 1 -
                            dot(lattice, m, c);
        return lhs == rhs;
    } catch (const ParityError&) {
        return false;
    }
}

bool genus_identity_check_plus(const Lattice& lattice, const LatticeClass& m, const LatticeClass& c,
                               const LatticeClass& k)
{
    try {
        const LatticeClass mc = m + c;
        const Integer lhs = exact_half(dot(lattice, mc, mc - k), "lhs");
        const Integer rhs = expected_dimension(lattice, m, k) + arithmetic_genus(lattice, c, k) - 1 -
                            dot(lattice, k - m, c);
        return lhs == rhs;
    } catch (const ParityError&) {
        return false;
    }
}

}  // namespace hilbrel
