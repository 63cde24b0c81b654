#pragma once

/**
 * @file lattice.hpp
 * @brief Finite posets and meet-semilattices: construction and validation,
 *        meet tables, zeta/Moebius matrices, linear extensions, closures.
 *
 * Elements are dense indices 0..n-1 with optional display labels. All types
 * are immutable after construction and freely shareable across threads.
 */

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meetdet/matrix.hpp"

namespace meetdet {

class Poset {
public:
    /// Builds from an explicit relation; checks reflexivity, antisymmetry
    /// and transitivity.
    static Poset from_relation(int n, std::vector<std::vector<char>> leq,
                               std::vector<std::string> labels = {});

    /// Reflexive-transitive closure of a cover list. Throws CycleDetected
    /// when the covers contain a directed cycle, IndexOutOfRange for bad
    /// indices.
    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                             std::vector<std::string> labels = {});

    int n() const { return n_; }
    bool leq(int x, int y) const { return rel_[x][y] != 0; }
    bool less(int x, int y) const { return x != y && leq(x, y); }

    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of the element carrying this label, or -1.
    int index_of_label(const std::string& label) const;

    /// Covering pairs (a,b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> cover_pairs() const;

private:
    Poset(int n, std::vector<std::vector<char>> rel, std::vector<std::string> labels)
        : n_(n), rel_(std::move(rel)), labels_(std::move(labels)) {}

    int n_;
    std::vector<std::vector<char>> rel_;
    std::vector<std::string> labels_;
};

class MeetSemilattice {
public:
    /// Fills the meet table, or throws NotAMeetSemilattice(x, y) naming a
    /// witness pair with zero or several maximal common lower bounds.
    static MeetSemilattice from_poset(Poset p);

    const Poset& poset() const { return poset_; }
    int n() const { return poset_.n(); }
    int meet(int x, int y) const { return meet_[x][y]; }
    /// Meet of a nonempty element list.
    int meet_all(std::span<const int> xs) const;

private:
    MeetSemilattice(Poset p, std::vector<std::vector<int>> meet)
        : poset_(std::move(p)), meet_(std::move(meet)) {}

    Poset poset_;
    std::vector<std::vector<int>> meet_;
};

IncidenceMatrix zeta_matrix(const Poset& p);

/// Inverse of zeta, computed by the bottom-up recursion
/// mu(x,y) = -sum_{x<=z<y} mu(x,z); mobius_matrix(p) * zeta_matrix(p) == I.
IncidenceMatrix mobius_matrix(const Poset& p);

/// Kahn's algorithm, smallest element index dequeued first; deterministic.
std::vector<int> linear_extension(const Poset& p);

/// Does the sequence list each element of p exactly once, compatibly with leq?
bool is_linear_extension_order(const Poset& p, std::span<const int> order);

/// { y : y <= x for some x in subset }, ascending.
std::vector<int> order_ideal_closure(const Poset& p, std::span<const int> subset);

/// Is the subset an order ideal (factor closed) in p?
bool is_order_ideal(const Poset& p, std::span<const int> subset);

/// Smallest superset of subset closed under pairwise meet, ascending.
std::vector<int> meet_closure(const MeetSemilattice& sl, std::span<const int> subset);

bool is_meet_closed(const MeetSemilattice& sl, std::span<const int> subset);

/// Smallest 0-based i with x <= S[i]; throws NotBelowAny when none exists.
std::size_t triangle_index(const Poset& p, std::span<const int> S, int x);

/// Restriction of p to the listed elements (labels inherited, order kept).
Poset induced_subposet(const Poset& p, std::span<const int> elements);

} // namespace meetdet
