#include "hilbrel/kunneth.hpp"

namespace hilbrel {

CohomologyRing::CohomologyRing(SurfaceTopology surface) : surface_(std::move(surface))
{
    require_valid(surface_);
    const int n = surface_.h1_rank();
    const std::size_t rank = surface_.h2.rank();

    degree_.push_back(0);
    for (int i = 0; i < n; ++i)
        degree_.push_back(1);
    for (std::size_t r = 0; r < rank; ++r)
        degree_.push_back(2);
    for (int i = 0; i < n; ++i)
        degree_.push_back(3);
    degree_.push_back(4);

    const std::size_t d = dim();
    table_.assign(d * d, {});
    auto put = [&](std::size_t x, std::size_t y, std::size_t z, const Integer& c) {
        if (c != 0)
            table_[x * d + y].emplace_back(z, c);
    };

    for (std::size_t x = 0; x < d; ++x) {
        put(0, x, x, 1);
        if (x != 0)
            put(x, 0, x, 1);
    }

    // gram * W(b, i), reused by H^1 x H^2
    std::vector<std::vector<LatticeClass>> gw(n + 1, std::vector<LatticeClass>(n + 1));
    for (int b = 1; b <= n; ++b)
        for (int i = 1; i <= n; ++i)
            gw[b][i] = surface_.h2.apply(surface_.cup(b, i));

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const LatticeClass w = surface_.cup(i, j);
            for (std::size_t r = 0; r < rank; ++r)
                put(h1(i), h1(j), h2(r), w[r]);
        }
        for (std::size_t r = 0; r < rank; ++r)
            for (int b = 1; b <= n; ++b) {
                // <v_b u v_i u e_r, [V]> = W(b, i) . e_r
                put(h1(i), h2(r), h3(b), gw[b][i][r]);
                put(h2(r), h1(i), h3(b), gw[b][i][r]);
            }
        put(h1(i), h3(i), point(), 1);
        put(h3(i), h1(i), point(), -1);
    }
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t s = 0; s < rank; ++s)
            put(h2(r), h2(s), point(), surface_.h2.gram(r, s));
}

std::size_t CohomologyRing::h1(int i) const
{
    if (i < 1 || i > surface_.h1_rank())
        throw DimensionError("H^1 index out of range");
    return static_cast<std::size_t>(i);
}

std::size_t CohomologyRing::h2(std::size_t r) const
{
    if (r >= surface_.h2.rank())
        throw DimensionError("H^2 index out of range");
    return 1 + static_cast<std::size_t>(surface_.h1_rank()) + r;
}

std::size_t CohomologyRing::h3(int a) const
{
    if (a < 1 || a > surface_.h1_rank())
        throw DimensionError("H^3 index out of range");
    return static_cast<std::size_t>(surface_.h1_rank()) + surface_.h2.rank() + static_cast<std::size_t>(a);
}

RingPtr make_ring(const SurfaceTopology& surface)
{
    return std::make_shared<const CohomologyRing>(surface);
}

BigradedClass BigradedClass::one(RingPtr ring)
{
    BigradedClass x(std::move(ring));
    x.add_term(0, 0, 1);
    return x;
}

BigradedClass BigradedClass::term(RingPtr ring, Subset s, std::size_t basis, const Rational& coeff)
{
    BigradedClass x(std::move(ring));
    x.add_term(s, basis, coeff);
    return x;
}

BigradedClass BigradedClass::from_h2(RingPtr ring, const LatticeClass& c, const Rational& scale)
{
    if (c.size() != ring->surface().h2.rank())
        throw DimensionError("from_h2: class length does not match the lattice rank");
    BigradedClass x(ring);
    for (std::size_t r = 0; r < c.size(); ++r)
        x.add_term(0, ring->h2(r), scale * Rational(c[r]));
    return x;
}

Rational BigradedClass::coefficient(Subset s, std::size_t basis) const
{
    auto it = terms_.find({s, basis});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BigradedClass::add_term(Subset s, std::size_t basis, const Rational& coeff)
{
    if (coeff == 0)
        return;
    if (basis >= ring_->dim() || (s >> (2 * ring_->q())) != 0)
        throw DimensionError("BigradedClass: term outside the ring");
    auto [it, inserted] = terms_.try_emplace({s, basis}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BigradedClass BigradedClass::component(int p, int d) const
{
    BigradedClass out(ring_);
    for (const auto& [key, c] : terms_)
        if ((p < 0 || degree_of(key.first) == p) && (d < 0 || ring_->degree(key.second) == d))
            out.terms_.emplace_hint(out.terms_.end(), key, c);
    return out;
}

void BigradedClass::require_same_ring(const BigradedClass& other, const char* what) const
{
    if (ring_ == other.ring_)
        return;
    if (ring_->surface() == other.ring_->surface())
        return;
    throw DimensionError(std::string(what) + ": classes live over different surfaces");
}

BigradedClass& BigradedClass::operator+=(const BigradedClass& other)
{
    require_same_ring(other, "BigradedClass addition");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

BigradedClass& BigradedClass::operator-=(const BigradedClass& other)
{
    require_same_ring(other, "BigradedClass subtraction");
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

BigradedClass& BigradedClass::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, c] : terms_)
        c *= s;
    return *this;
}

bool operator==(const BigradedClass& a, const BigradedClass& b)
{
    a.require_same_ring(b, "BigradedClass comparison");
    return a.terms_ == b.terms_;
}

BigradedClass mul(const BigradedClass& x, const BigradedClass& y)
{
    x.require_same_ring(y, "mul");
    const CohomologyRing& ring = *x.ring();
    BigradedClass out(x.ring());
    for (const auto& [kx, a] : x.terms()) {
        const int deg_v = ring.degree(kx.second);
        for (const auto& [ky, b] : y.terms()) {
            int sign = wedge_sign(kx.first, ky.first);
            if (sign == 0)
                continue;
            const auto& prod = ring.product(kx.second, ky.second);
            if (prod.empty())
                continue;
            if ((deg_v * degree_of(ky.first)) % 2 == 1)
                sign = -sign;
            Rational ab = a * b;
            if (sign < 0)
                ab = -ab;
            const Subset s = kx.first | ky.first;
            for (const auto& [z, c] : prod)
                out.add_term(s, z, ab * Rational(c));
        }
    }
    return out;
}

BigradedClass exp(const BigradedClass& f)
{
    for (const auto& [key, c] : f.terms())
        if (key.first == 0 && f.ring()->degree(key.second) == 0)
            throw DegreeError("exp: argument has a (0,0) component and is not nilpotent");
    BigradedClass sum = BigradedClass::one(f.ring());
    BigradedClass power = BigradedClass::one(f.ring());
    for (unsigned n = 1; ; ++n) {
        power = mul(power, f);
        if (power.is_zero())
            break;
        const Rational weight = Rational(1) / Rational(factorial(n));
        sum += weight * power;
    }
    return sum;
}

RationalExtForm slant(const BigradedClass& x)
{
    const CohomologyRing& ring = *x.ring();
    RationalExtForm out(ring.q(), Side::dual);
    for (const auto& [key, c] : x.terms())
        if (key.second == ring.point())
            out.add_term(key.first, c);
    return out;
}

BigradedClass todd_factor(const RingPtr& ring)
{
    const SurfaceTopology& s = ring->surface();
    BigradedClass td = BigradedClass::one(ring);
    td -= BigradedClass::from_h2(ring, s.k, Rational(1, 2));
    td.add_term(0, ring->point(), Rational(s.chi));
    return td;
}

ExtForm chern_from_ch(const RationalExtForm& ch)
{
    if (ch.side() != Side::dual)
        throw DimensionError("chern_from_ch: expects a dual form");
    for (const auto& [s, c] : ch.terms())
        if (degree_of(s) % 2 != 0)
            throw DegreeError("chern_from_ch: character has an odd-degree component");
    to_integer(ch.coefficient(0), "chern_from_ch rank");

    const int q = ch.q();
    const int top = q;  // c_n lives in degree 2n <= 2q
    // power sums p_n = n! ch_n
    std::vector<RationalExtForm> p(top + 1, RationalExtForm(q, Side::dual));
    for (int n = 1; n <= top; ++n)
        p[n] = Rational(factorial(n)) * ch.part(2 * n);

    // n c_n = sum_{i=1}^{n} (-1)^{i-1} c_{n-i} p_i
    std::vector<RationalExtForm> c(top + 1, RationalExtForm(q, Side::dual));
    c[0] = RationalExtForm::one(q, Side::dual);
    RationalExtForm total = c[0];
    for (int n = 1; n <= top; ++n) {
        RationalExtForm acc(q, Side::dual);
        for (int i = 1; i <= n; ++i) {
            RationalExtForm t = wedge(c[n - i], p[i]);
            if (i % 2 == 0)
                acc -= t;
            else
                acc += t;
        }
        c[n] = Rational(1) / Rational(n) * acc;
        total += c[n];
    }
    return to_integral(total, "total Chern class");
}

}  // namespace hilbrel
