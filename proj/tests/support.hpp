#pragma once

// Shared test helpers: independent oracles and small fixture lattices.
// Oracles here must stay independent of the implementation paths they check
// (the cofactor determinant never touches Bareiss, the inversion oracle never
// touches the Moebius recursion).

#include <array>
#include <cstdio>
#include <memory>
#include <numeric>
#include <string>

#include "meetdet/closedform.hpp"
#include "meetdet/instances.hpp"
#include "meetdet/numth.hpp"

namespace testsupport {

using namespace meetdet;

// Determinant by cofactor expansion along the first row; n <= 4 scale.
inline Scalar cofactor_det(const ScalarMatrix& m) {
    const int n = m.rows();
    if (n == 0) return Scalar(1);
    if (n == 1) return m.at(0, 0);
    Scalar acc(0);
    for (int j = 0; j < n; ++j) {
        ScalarMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        const Scalar term = m.at(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// Inverse of the zeta matrix by unitriangular back-substitution along a
// linear extension; the oracle for the Moebius recursion.
inline ScalarMatrix mobius_by_inversion(const Poset& p) {
    const int n = p.n();
    const std::vector<int> ext = linear_extension(p);
    const IncidenceMatrix z = zeta_matrix(p);
    ScalarMatrix mu(n, n);
    // Solve mu * z = I column by column in extension order; zeta is
    // unitriangular in that order, so each entry falls out directly.
    for (int xi = 0; xi < n; ++xi) {
        const int x = ext[xi];
        for (int yi = 0; yi < n; ++yi) {
            const int y = ext[yi];
            Scalar rhs(x == y ? 1 : 0);
            for (int zi = 0; zi < yi; ++zi) {
                const int zz = ext[zi];
                rhs -= mu.at(x, zz) * z.at(zz, y);
            }
            mu.at(x, y) = rhs; // z.at(y, y) == 1
        }
    }
    return mu;
}

inline std::shared_ptr<const MeetSemilattice> chain_lattice(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return std::make_shared<MeetSemilattice>(
        MeetSemilattice::from_poset(Poset::from_covers(n, covers)));
}

// The five-element semilattice 1 < 2 < 4, 1 < 3 < 5, 2 < 5 with labels 1..5.
inline std::shared_ptr<const MeetSemilattice> fixture_m5() {
    const Poset p = Poset::from_covers(5, {{0, 1}, {1, 3}, {0, 2}, {2, 4}, {1, 4}},
                                       {"1", "2", "3", "4", "5"});
    return std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(p));
}

// The seven-element semilattice with minimum 0, atoms 1,2,3 and coatoms
// 4,5,6 (1,2 < 4; 2,3 < 5; 1,3 < 6), labels 0..6.
inline std::shared_ptr<const MeetSemilattice> fixture_m7() {
    const Poset p = Poset::from_covers(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {3, 6}});
    return std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(p));
}

inline std::shared_ptr<const MeetSemilattice> divisor_lattice(std::vector<long> values) {
    return divisor_semilattice(std::move(values)).lattice;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command, capturing stdout+stderr.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testsupport
