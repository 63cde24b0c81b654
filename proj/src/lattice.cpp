#include "meetdet/lattice.hpp"

#include <algorithm>
#include <set>

namespace meetdet {

static std::vector<std::string> default_labels(int n, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != n)
        throw PreconditionError("label list size does not match element count");
    return labels;
}

Poset Poset::from_relation(int n, std::vector<std::vector<char>> leq,
                           std::vector<std::string> labels) {
    if (n < 0) throw IndexOutOfRange("negative element count");
    if (static_cast<int>(leq.size()) != n)
        throw PreconditionError("relation size does not match element count");
    for (int x = 0; x < n; ++x)
        if (static_cast<int>(leq[x].size()) != n)
            throw PreconditionError("relation row size does not match element count");
    for (int x = 0; x < n; ++x)
        if (!leq[x][x]) throw PreconditionError("relation is not reflexive at " + std::to_string(x));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && leq[x][y] && leq[y][x])
                throw PreconditionError("relation is not antisymmetric at (" + std::to_string(x) +
                                        "," + std::to_string(y) + ")");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq[x][y])
                for (int z = 0; z < n; ++z)
                    if (leq[y][z] && !leq[x][z])
                        throw PreconditionError("relation is not transitive at (" +
                                                std::to_string(x) + "," + std::to_string(y) + "," +
                                                std::to_string(z) + ")");
    return Poset(n, std::move(leq), default_labels(n, std::move(labels)));
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> labels) {
    if (n < 0) throw IndexOutOfRange("negative element count");
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    for (const auto& [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IndexOutOfRange("cover (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside 0.." + std::to_string(n - 1));
        if (a == b) throw CycleDetected("self-cover at " + std::to_string(a));
        rel[a][b] = 1;
    }
    // Warshall closure.
    for (int t = 0; t < n; ++t)
        for (int x = 0; x < n; ++x)
            if (rel[x][t])
                for (int y = 0; y < n; ++y)
                    if (rel[t][y]) rel[x][y] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && rel[x][y] && rel[y][x])
                throw CycleDetected("elements " + std::to_string(x) + " and " + std::to_string(y) +
                                    " lie on a directed cycle");
    return Poset(n, std::move(rel), default_labels(n, std::move(labels)));
}

int Poset::index_of_label(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int z = 0; z < n_ && direct; ++z)
                if (less(a, z) && less(z, b)) direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    return covers;
}

MeetSemilattice MeetSemilattice::from_poset(Poset p) {
    const int n = p.n();
    std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            std::vector<int> lower;
            for (int z = 0; z < n; ++z)
                if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
            // Greatest lower bound = unique maximal common lower bound.
            std::vector<int> maximal;
            for (int z : lower) {
                bool is_max = true;
                for (int w : lower)
                    if (w != z && p.leq(z, w)) {
                        is_max = false;
                        break;
                    }
                if (is_max) maximal.push_back(z);
            }
            if (maximal.size() != 1)
                throw NotAMeetSemilattice(
                    x, y,
                    "pair (" + p.label(x) + "," + p.label(y) + ") has " +
                        std::to_string(maximal.size()) + " maximal common lower bounds");
            meet[x][y] = meet[y][x] = maximal.front();
        }
    return MeetSemilattice(std::move(p), std::move(meet));
}

int MeetSemilattice::meet_all(std::span<const int> xs) const {
    if (xs.empty()) throw PreconditionError("meet of an empty element list");
    int m = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) m = meet(m, xs[i]);
    return m;
}

IncidenceMatrix zeta_matrix(const Poset& p) {
    const int n = p.n();
    IncidenceMatrix z(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) z.at(x, y) = Scalar(p.leq(x, y) ? 1 : 0);
    return z;
}

IncidenceMatrix mobius_matrix(const Poset& p) {
    const int n = p.n();
    const std::vector<int> ext = linear_extension(p);
    std::vector<std::vector<Int>> mu(n, std::vector<Int>(n, 0));
    for (int x = 0; x < n; ++x) {
        // Walk upward in extension order so every mu(x, z) with z < y is ready.
        for (int yi = 0; yi < n; ++yi) {
            const int y = ext[yi];
            if (!p.leq(x, y)) continue;
            if (x == y) {
                mu[x][y] = 1;
                continue;
            }
            Int acc = 0;
            for (int z = 0; z < n; ++z)
                if (p.leq(x, z) && p.less(z, y)) acc += mu[x][z];
            mu[x][y] = -acc;
        }
    }
    IncidenceMatrix m(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) m.at(x, y) = Scalar(mu[x][y]);
    return m;
}

std::vector<int> linear_extension(const Poset& p) {
    const int n = p.n();
    std::vector<char> placed(n, 0);
    std::vector<int> out;
    out.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int x = 0; x < n && pick < 0; ++x) {
            if (placed[x]) continue;
            bool minimal = true;
            for (int y = 0; y < n; ++y)
                if (!placed[y] && p.less(y, x)) {
                    minimal = false;
                    break;
                }
            if (minimal) pick = x;
        }
        placed[pick] = 1;
        out.push_back(pick);
    }
    return out;
}

bool is_linear_extension_order(const Poset& p, std::span<const int> order) {
    if (static_cast<int>(order.size()) != p.n()) return false;
    std::vector<char> seen(p.n(), 0);
    for (int x : order) {
        if (x < 0 || x >= p.n() || seen[x]) return false;
        seen[x] = 1;
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (p.less(order[i], order[j])) return false;
    return true;
}

std::vector<int> order_ideal_closure(const Poset& p, std::span<const int> subset) {
    std::vector<char> in(p.n(), 0);
    for (int x : subset) {
        if (x < 0 || x >= p.n()) throw IndexOutOfRange("subset element " + std::to_string(x));
        for (int y = 0; y < p.n(); ++y)
            if (p.leq(y, x)) in[y] = 1;
    }
    std::vector<int> out;
    for (int y = 0; y < p.n(); ++y)
        if (in[y]) out.push_back(y);
    return out;
}

bool is_order_ideal(const Poset& p, std::span<const int> subset) {
    const auto closed = order_ideal_closure(p, subset);
    std::set<int> s(subset.begin(), subset.end());
    return std::equal(closed.begin(), closed.end(), s.begin(), s.end());
}

std::vector<int> meet_closure(const MeetSemilattice& sl, std::span<const int> subset) {
    std::vector<char> in(sl.n(), 0);
    std::vector<int> work(subset.begin(), subset.end());
    for (int x : work) {
        if (x < 0 || x >= sl.n()) throw IndexOutOfRange("subset element " + std::to_string(x));
        in[x] = 1;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < sl.n(); ++x)
            if (in[x])
                for (int y = 0; y < sl.n(); ++y)
                    if (in[y] && !in[sl.meet(x, y)]) {
                        in[sl.meet(x, y)] = 1;
                        changed = true;
                    }
    }
    std::vector<int> out;
    for (int x = 0; x < sl.n(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

bool is_meet_closed(const MeetSemilattice& sl, std::span<const int> subset) {
    std::vector<char> in(sl.n(), 0);
    for (int x : subset) in[x] = 1;
    for (int x : subset)
        for (int y : subset)
            if (!in[sl.meet(x, y)]) return false;
    return true;
}

std::size_t triangle_index(const Poset& p, std::span<const int> S, int x) {
    for (std::size_t i = 0; i < S.size(); ++i)
        if (p.leq(x, S[i])) return i;
    throw NotBelowAny("element " + p.label(x) + " is below no member of the subset");
}

Poset induced_subposet(const Poset& p, std::span<const int> elements) {
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    std::vector<std::string> labels;
    labels.reserve(m);
    for (int i = 0; i < m; ++i) {
        const int x = elements[i];
        if (x < 0 || x >= p.n()) throw IndexOutOfRange("subset element " + std::to_string(x));
        labels.push_back(p.label(x));
        for (int j = 0; j < m; ++j) rel[i][j] = p.leq(x, elements[j]) ? 1 : 0;
    }
    return Poset::from_relation(m, std::move(rel), std::move(labels));
}

} // namespace meetdet
