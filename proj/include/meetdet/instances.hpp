#pragma once

/**
 * @file instances.hpp
 * @brief Seeded random instances for the verification suite, the benchmark
 *        harness and the tests.
 *
 * The generator is a fixed splitmix64 stream, so a seed identifies the same
 * instance on every platform and build.
 */

#include <cstdint>
#include <memory>

#include "meetdet/closedform.hpp"

namespace meetdet {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double p) { return static_cast<double>(next() >> 11) / 9007199254740992.0 < p; }

private:
    std::uint64_t state_;
};

/// Random DAG on index-increasing pairs (edge probability 0.4), closed
/// transitively.
Poset random_poset(Rng& rng, int n);

/// Random poset with an adjoined global minimum at index 0, regenerated until
/// every pair has a unique greatest lower bound.
std::shared_ptr<const MeetSemilattice> random_meet_semilattice(Rng& rng, int n);

Hypermatrix random_int_hypermatrix(Rng& rng, int n, int k, long lo, long hi);

ScalarMatrix random_rational_matrix(Rng& rng, int n, long num_lo, long num_hi, long den_max);

/// Full table for small shapes, sparse entries plus a default otherwise.
FMap random_table_fmap(Rng& rng, int n, int arity, long lo, long hi);

/// Random integer values on every z <= x; z_x = x when grounded_at_x, else a
/// uniform element of the down-set of x.
GroundedFunction random_gf(Rng& rng, std::shared_ptr<const MeetSemilattice> lattice,
                           std::vector<int> X, bool grounded_at_x, long lo, long hi,
                           bool uniform_F = false);

/// Nonempty random subset of {0..n-1} with at most max_size members.
std::vector<int> random_subset(Rng& rng, int n, int max_size);

} // namespace meetdet
