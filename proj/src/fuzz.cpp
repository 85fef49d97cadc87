#include "hilbrel/fuzz.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

namespace hilbrel::fuzz {

long Rng::uniform(long lo, long hi)
{
    if (hi < lo)
        std::swap(lo, hi);
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0)
        return static_cast<long>(engine_());
    // rejection sampling keeps the draw unbiased and independent of the
    // standard library's distribution implementation
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

namespace {

struct Builder {
    std::vector<std::vector<Integer>> gram;
    std::vector<Integer> k;
    std::vector<std::size_t> isotropic;  // first vectors of U pieces

    std::size_t rank() const { return gram.size(); }

    std::size_t add_piece(const std::vector<std::vector<long>>& block, const std::vector<long>& k_part)
    {
        const std::size_t base = rank();
        const std::size_t n = block.size();
        for (auto& row : gram)
            row.resize(base + n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Integer> row(base + n, 0);
            for (std::size_t j = 0; j < n; ++j)
                row[base + j] = block[i][j];
            gram.push_back(std::move(row));
            k.emplace_back(k_part[i]);
        }
        return base;
    }

    std::size_t add_hyperbolic()
    {
        const std::size_t base = add_piece({{0, 1}, {1, 0}}, {0, 0});
        isotropic.push_back(base);
        return base;
    }

    void add_small(Rng& rng, std::size_t room)
    {
        switch (rng.uniform(0, room >= 2 ? 4 : 3)) {
        case 0: add_piece({{-1}}, {rng.coin() ? 1 : -1}); break;
        case 1: add_piece({{1}}, {rng.coin() ? 1 : -1}); break;
        case 2: add_piece({{2}}, {rng.uniform(-1, 1)}); break;
        case 3: add_piece({{-2}}, {rng.uniform(-1, 1)}); break;
        default: add_hyperbolic(); break;
        }
    }
};

std::vector<std::vector<long>> abelian_gram()
{
    const SurfaceTopology a = abelian_surface();
    std::vector<std::vector<long>> g(6, std::vector<long>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            g[i][j] = a.h2.gram(i, j).get_si();
    return g;
}

}  // namespace

SurfaceTopology random_surface(Rng& rng, const SurfaceOptions& options)
{
    const int q = static_cast<int>(rng.uniform(options.min_q, options.max_q));
    Builder b;
    // cup images for each H^1 pair, filled once the lattice is final
    struct PairCup {
        int i, j;
        std::size_t lattice_index;
        long scale;
    };
    std::vector<PairCup> cups;
    int next = 1;
    int remaining = q;

    if (remaining >= 2 && options.max_rank >= 6 && rng.uniform(0, 2) != 0) {
        static const std::array<std::pair<int, int>, 6> pairs{
            {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
        const std::size_t base = b.add_piece(abelian_gram(), {0, 0, 0, 0, 0, 0});
        const long scale = rng.coin() ? 1 : -1;
        for (std::size_t p = 0; p < 6; ++p)
            cups.push_back({next - 1 + pairs[p].first, next - 1 + pairs[p].second, base + p, scale});
        next += 4;
        remaining -= 2;
    }
    while (remaining > 0) {
        const bool room = b.rank() + 2 <= options.max_rank;
        const bool isotropic = rng.uniform(0, 2) != 0 && (room || !b.isotropic.empty());
        if (isotropic) {
            std::size_t f;
            if (b.isotropic.empty() || (room && rng.coin()))
                f = b.add_hyperbolic();
            else
                f = b.isotropic[rng.uniform(0, static_cast<long>(b.isotropic.size()) - 1)];
            cups.push_back({next, next + 1, f, rng.uniform(1, 2) * (rng.coin() ? 1 : -1)});
        }
        next += 2;
        --remaining;
    }
    const std::size_t target = b.rank() + static_cast<std::size_t>(rng.uniform(
                                   b.rank() == 0 ? 1 : 0,
                                   static_cast<long>(options.max_rank) - static_cast<long>(b.rank())));
    while (b.rank() < target)
        b.add_small(rng, target - b.rank());

    const std::size_t rank = b.rank();
    std::vector<std::vector<Integer>> w_images;  // one per cup entry, lattice coordinates
    for (const auto& pc : cups) {
        std::vector<Integer> v(rank, 0);
        v[pc.lattice_index] = pc.scale;
        w_images.push_back(std::move(v));
    }
    for (auto& kk : b.k)
        kk += 2 * rng.uniform(-1, 1);

    // unimodular moves on H^2: e'_r = e_r + t e_s, so x'_s = x_s - t x_r and
    // gram' = E gram E^T; rejected when an entry leaves the allowed range
    if (rank >= 2) {
        const long moves = rng.uniform(0, 6);
        for (long mv = 0; mv < moves; ++mv) {
            const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rank) - 1));
            auto s = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(rank) - 2));
            if (s >= r)
                ++s;
            const long t = rng.coin() ? 1 : -1;
            auto g = b.gram;
            for (std::size_t j = 0; j < rank; ++j)
                g[r][j] += t * g[s][j];
            for (std::size_t i = 0; i < rank; ++i)
                g[i][r] += t * g[i][s];
            bool ok = true;
            for (const auto& row : g)
                for (const auto& x : row)
                    if (abs(x) > options.max_entry)
                        ok = false;
            if (!ok)
                continue;
            b.gram = std::move(g);
            b.k[s] -= t * b.k[r];
            for (auto& v : w_images)
                v[s] -= t * v[r];
        }
    }

    SurfaceTopology out;
    out.q = q;
    out.chi = rng.uniform(-2, 3);
    out.h2 = Lattice(b.gram);
    out.k = LatticeClass(b.k);
    out.pg_positive = rng.coin();
    for (std::size_t p = 0; p < cups.size(); ++p)
        out.set_cup(cups[p].i, cups[p].j, LatticeClass(w_images[p]));

    // unimodular moves on H^1: v'_i = v_i + t v_j, so
    // W'(i, x) = W(i, x) + t W(j, x) for x != i
    const int n = out.h1_rank();
    if (n >= 2) {
        const long moves = rng.uniform(0, 4);
        for (long mv = 0; mv < moves; ++mv) {
            const int i = static_cast<int>(rng.uniform(1, n));
            int j = static_cast<int>(rng.uniform(1, n - 1));
            if (j >= i)
                ++j;
            const long t = rng.coin() ? 1 : -1;
            SurfaceTopology next_s = out;
            for (int x = 1; x <= n; ++x) {
                if (x == i)
                    continue;
                next_s.set_cup(i, x, out.cup(i, x) + Integer(t) * out.cup(j, x));
            }
            out = std::move(next_s);
        }
    }
    require_valid(out);
    return out;
}

LatticeClass random_class(Rng& rng, std::size_t rank, long bound)
{
    std::vector<Integer> v(rank);
    for (auto& x : v)
        x = rng.uniform(-bound, bound);
    return LatticeClass(std::move(v));
}

ExtForm random_form(Rng& rng, int q, Side side, int degree, long bound, int max_terms)
{
    ExtForm f(q, side);
    const int n = 2 * q;
    if (degree > n)
        return f;
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        const int d = degree >= 0 ? degree : static_cast<int>(rng.uniform(0, n));
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        // partial Fisher-Yates for d distinct generators
        Subset s = 0;
        for (int p = 0; p < d; ++p) {
            const auto pick = static_cast<int>(rng.uniform(p, n - 1));
            std::swap(idx[p], idx[pick]);
            s |= Subset{1} << idx[p];
        }
        f.add_term(s, rng.uniform(-bound, bound));
    }
    return f;
}

MomentSequence random_moments(Rng& rng, const SurfaceTopology& s, const LatticeClass& m, long bound)
{
    MomentSequence ms{m, {}};
    const Integer top = dot(s.h2, m, m - s.k);
    if (top < 0)
        return ms;
    const long count = top.get_si() / 2 + 1;
    for (long i = 0; i < count; ++i) {
        const long d = top.get_si() - 2 * i;
        if (d > s.h1_rank())
            ms.moments.emplace_back(s.q, Side::primal);
        else
            ms.moments.push_back(random_form(rng, s.q, Side::primal, static_cast<int>(d), bound, 4));
    }
    while (!ms.moments.empty() && ms.moments.back().is_zero())
        ms.moments.pop_back();
    return ms;
}

EmbeddedSurfaceData consistent_embedding(Rng& rng, const SurfaceTopology& s, const LatticeClass& c)
{
    const ExtForm k = kappa(s, c);
    const int n = s.h1_rank();
    std::vector<std::vector<Integer>> alpha, beta;  // columns, each of length 2q
    for (const auto& [sub, value] : k.terms()) {
        const auto idx = indices_of(sub);
        std::vector<Integer> a(n, 0), bcol(n, 0);
        a[idx[0] - 1] = value;
        bcol[idx[1] - 1] = 1;
        alpha.push_back(std::move(a));
        beta.push_back(std::move(bcol));
    }
    // an extra handle mapping to zero
    if (rng.coin()) {
        alpha.emplace_back(n, 0);
        beta.emplace_back(n, 0);
    }
    const auto g = static_cast<long>(alpha.size());
    auto axpy = [](std::vector<Integer>& y, const std::vector<Integer>& x, long t) {
        for (std::size_t r = 0; r < y.size(); ++r)
            y[r] += t * x[r];
    };
    if (g > 0) {
        const long moves = rng.uniform(0, 8);
        for (long mv = 0; mv < moves; ++mv) {
            const auto i = static_cast<std::size_t>(rng.uniform(0, g - 1));
            const long t = rng.coin() ? 1 : -1;
            switch (rng.uniform(0, 3)) {
            case 0: axpy(alpha[i], beta[i], t); break;
            case 1: axpy(beta[i], alpha[i], t); break;
            case 2: {
                std::vector<Integer> neg = alpha[i];
                for (auto& x : neg)
                    x = -x;
                alpha[i] = beta[i];
                beta[i] = std::move(neg);
                break;
            }
            default: {
                if (g < 2)
                    break;
                auto j = static_cast<std::size_t>(rng.uniform(0, g - 2));
                if (j >= i)
                    ++j;
                // alpha_i += alpha_j, beta_j -= beta_i
                axpy(alpha[i], alpha[j], 1);
                axpy(beta[j], beta[i], -1);
                break;
            }
            }
        }
    }
    EmbeddedSurfaceData e;
    e.genus = static_cast<int>(g);
    e.c = c;
    e.pullback.assign(n, std::vector<Integer>(2 * g, 0));
    for (int a = 0; a < n; ++a)
        for (long i = 0; i < g; ++i) {
            e.pullback[a][i] = alpha[i][a];
            e.pullback[a][g + i] = beta[i][a];
        }
    return e;
}

}  // namespace hilbrel::fuzz
