#include "meetdet/instances.hpp"

#include <algorithm>
#include <set>

namespace meetdet {

Poset random_poset(Rng& rng, int n) {
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(0.4)) rel[i][j] = 1;
    for (int t = 0; t < n; ++t)
        for (int x = 0; x < n; ++x)
            if (rel[x][t])
                for (int y = 0; y < n; ++y)
                    if (rel[t][y]) rel[x][y] = 1;
    return Poset::from_relation(n, std::move(rel));
}

std::shared_ptr<const MeetSemilattice> random_meet_semilattice(Rng& rng, int n) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i) rel[i][i] = 1;
        for (int i = 1; i < n; ++i) rel[0][i] = 1; // global minimum
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.chance(0.4)) rel[i][j] = 1;
        for (int t = 0; t < n; ++t)
            for (int x = 0; x < n; ++x)
                if (rel[x][t])
                    for (int y = 0; y < n; ++y)
                        if (rel[t][y]) rel[x][y] = 1;
        try {
            return std::make_shared<MeetSemilattice>(
                MeetSemilattice::from_poset(Poset::from_relation(n, std::move(rel))));
        } catch (const NotAMeetSemilattice&) {
            // some pair had several maximal lower bounds; try again
        }
    }
    throw Error("failed to sample a meet semilattice after 10000 attempts");
}

Hypermatrix random_int_hypermatrix(Rng& rng, int n, int k, long lo, long hi) {
    Hypermatrix m(n, k);
    for (std::uint64_t off = 0; off < m.size(); ++off) m.flat(off) = Scalar(rng.range(lo, hi));
    return m;
}

ScalarMatrix random_rational_matrix(Rng& rng, int n, long num_lo, long num_hi, long den_max) {
    ScalarMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.at(i, j) = Scalar::rational(Int(rng.range(num_lo, num_hi)),
                                          Int(rng.range(1, den_max)));
    return g;
}

FMap random_table_fmap(Rng& rng, int n, int arity, long lo, long hi) {
    const std::uint64_t nf = factorial(n);
    std::uint64_t tuples = 1;
    bool small = true;
    for (int i = 0; i < arity; ++i) {
        if (tuples > 4096 / nf) {
            small = false;
            break;
        }
        tuples *= nf;
    }
    FMap::Table_t entries;
    if (small) {
        std::vector<Permutation> tup(static_cast<std::size_t>(arity), Permutation::identity(n));
        for (std::uint64_t r = 0; r < tuples; ++r) {
            std::uint64_t rest = r;
            for (int s = arity - 1; s >= 0; --s) {
                tup[static_cast<std::size_t>(s)] = Permutation::unrank(n, rest % nf);
                rest /= nf;
            }
            entries.emplace(tup, Scalar(rng.range(lo, hi)));
        }
        return FMap::table(arity, std::move(entries), Scalar(0));
    }
    for (int e = 0; e < 8; ++e) {
        std::vector<Permutation> tup;
        tup.reserve(static_cast<std::size_t>(arity));
        for (int s = 0; s < arity; ++s) tup.push_back(Permutation::unrank(n, rng.below(nf)));
        entries.emplace(std::move(tup), Scalar(rng.range(lo, hi)));
    }
    return FMap::table(arity, std::move(entries), Scalar(rng.range(lo, hi)));
}

GroundedFunction random_gf(Rng& rng, std::shared_ptr<const MeetSemilattice> lattice,
                           std::vector<int> X, bool grounded_at_x, long lo, long hi,
                           bool uniform_F) {
    const Poset& p = lattice->poset();
    std::vector<std::vector<Scalar>> F;
    std::vector<Scalar> shared(p.n(), Scalar(0));
    if (uniform_F)
        for (int z = 0; z < p.n(); ++z) shared[static_cast<std::size_t>(z)] = Scalar(rng.range(lo, hi));
    for (int x : X) {
        std::vector<Scalar> row(p.n(), Scalar(0));
        for (int z = 0; z < p.n(); ++z)
            if (uniform_F)
                row[static_cast<std::size_t>(z)] = shared[static_cast<std::size_t>(z)];
            else if (p.leq(z, x))
                row[static_cast<std::size_t>(z)] = Scalar(rng.range(lo, hi));
        F.push_back(std::move(row));
    }
    std::vector<int> z_of;
    for (int x : X) {
        if (grounded_at_x) {
            z_of.push_back(x);
            continue;
        }
        std::vector<int> down;
        for (int z = 0; z < p.n(); ++z)
            if (p.leq(z, x)) down.push_back(z);
        z_of.push_back(down[rng.below(down.size())]);
    }
    return GroundedFunction::make(std::move(lattice), std::move(X), std::move(z_of), std::move(F));
}

std::vector<int> random_subset(Rng& rng, int n, int max_size) {
    const int size = static_cast<int>(rng.range(1, std::min(n, max_size)));
    std::set<int> chosen;
    while (static_cast<int>(chosen.size()) < size)
        chosen.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    return {chosen.begin(), chosen.end()};
}

} // namespace meetdet
