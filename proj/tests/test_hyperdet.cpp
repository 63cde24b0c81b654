#include <doctest.h>

#include "support.hpp"

using namespace meetdet;
using namespace testsupport;

namespace {

Scalar var(const std::string& name) { return Scalar::variable(name); }

ScalarMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
    ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = Scalar(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
}

} // namespace

TEST_SUITE("hyperdet") {

TEST_CASE("permutations enumerate lexicographically with correct signs") {
    Permutation p = Permutation::identity(3);
    std::vector<std::string> seen = {p.one_line()};
    std::vector<int> signs = {p.sign()};
    while (p.next_lex()) {
        seen.push_back(p.one_line());
        signs.push_back(p.sign());
    }
    CHECK(seen == std::vector<std::string>{"1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"});
    CHECK(signs == std::vector<int>{1, -1, -1, 1, 1, -1});
    for (std::uint64_t r = 0; r < 6; ++r)
        CHECK(Permutation::unrank(3, r).one_line() == seen[static_cast<std::size_t>(r)]);
    CHECK(Permutation::parse_one_line("2,1") == Permutation::unrank(2, 1));
    CHECK_THROWS_AS(Permutation::parse_one_line("2,2"), ParseError);
}

TEST_CASE("determinant examples") {
    CHECK(det(matrix_from({{1, 1}, {1, 2}})) == Scalar(1));
    CHECK(det(ScalarMatrix::identity(5)) == Scalar(1));
    // gcd table on {1,2,3}: totient product
    const ScalarMatrix g = matrix_from({{1, 1, 1}, {1, 2, 1}, {1, 1, 3}});
    CHECK(det(g) == Scalar(2));
    CHECK(cofactor_det(g) == Scalar(2));
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    Rng rng(2024);
    for (int t = 0; t < 100; ++t) {
        const int n = static_cast<int>(rng.range(1, 4));
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(rng.range(-5, 5));
        CHECK(det(m) == cofactor_det(m));
    }
    // rational and polynomial entries take the same elimination path
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.range(1, 4));
        ScalarMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = Scalar::rational(Int(rng.range(-5, 5)), Int(rng.range(1, 4)));
        CHECK(det(m) == cofactor_det(m));
    }
    ScalarMatrix sym(2, 2);
    sym.at(0, 0) = var("a");
    sym.at(0, 1) = var("b");
    sym.at(1, 0) = var("c");
    sym.at(1, 1) = var("d");
    CHECK(det(sym) == var("a") * var("d") - var("b") * var("c"));
    // zero column hits the early exit
    ScalarMatrix zc(2, 2);
    zc.at(0, 1) = Scalar(3);
    zc.at(1, 1) = Scalar(4);
    CHECK(det(zc).is_zero());
    // zero pivot forces a row swap
    ScalarMatrix sw = matrix_from({{0, 1}, {2, 5}});
    CHECK(det(sw) == Scalar(-2));
}

TEST_CASE("slices") {
    Rng rng(5);
    const Hypermatrix m2 = random_int_hypermatrix(rng, 3, 2, -5, 5);
    const ScalarMatrix whole = slice(m2, {});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const std::vector<int> idx = {i, j};
            CHECK(whole.at(i, j) == m2.at(idx));
        }

    const Hypermatrix m3 = random_int_hypermatrix(rng, 2, 3, -5, 5);
    const std::vector<Permutation> id = {Permutation::identity(2)};
    const ScalarMatrix diag = slice(m3, id);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const std::vector<int> idx = {i, j, i};
            CHECK(diag.at(i, j) == m3.at(idx));
        }

    const std::vector<Permutation> swap = {Permutation::unrank(2, 1)};
    const ScalarMatrix s = slice(m3, swap);
    CHECK(s.at(0, 0) == m3.at(std::vector<int>{0, 0, 1}));
    CHECK(s.at(0, 1) == m3.at(std::vector<int>{0, 1, 1}));
    CHECK(s.at(1, 0) == m3.at(std::vector<int>{1, 0, 0}));
    CHECK(s.at(1, 1) == m3.at(std::vector<int>{1, 1, 0}));

    CHECK_THROWS_AS(slice(m3, {}), ArityMismatch);
}

TEST_CASE("det1 matches a literal enumeration") {
    // n=2, k=3, M_iii = 1, everything else 0; the four (sigma_2, sigma_3)
    // pairs contribute sign(sigma_2) * M_{1,s2(1),s3(1)} * M_{2,s2(2),s3(2)}:
    // only (Id, Id) survives.
    Hypermatrix m(2, 3);
    m.at(std::vector<int>{0, 0, 0}) = Scalar(1);
    m.at(std::vector<int>{1, 1, 1}) = Scalar(1);
    CHECK(det1(m) == Scalar(1));

    Rng rng(9);
    const Hypermatrix m2 = random_int_hypermatrix(rng, 3, 2, -5, 5);
    CHECK(det1(m2) == det(slice(m2, {})));

    const Hypermatrix one = random_int_hypermatrix(rng, 1, 4, -5, 5);
    CHECK(det1(one) == one.flat(0));
}

TEST_CASE("cayley determinant") {
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const int n = static_cast<int>(rng.range(2, 4));
        const Hypermatrix m = random_int_hypermatrix(rng, n, 3, -5, 5);
        CHECK(cayley_det(m).is_zero());
    }
    for (int t = 0; t < 20; ++t) {
        const Hypermatrix m = random_int_hypermatrix(rng, static_cast<int>(rng.range(1, 3)), 2,
                                                     -5, 5);
        CHECK(cayley_det(m) == det(slice(m, {})));
    }
    for (int t = 0; t < 5; ++t) {
        const Hypermatrix m = random_int_hypermatrix(rng, 3, 4, -5, 5);
        CHECK(cayley_det(m) == det1(m));
    }
}

TEST_CASE("weighted determinants, definitions and expansion") {
    Rng rng(23);
    // k = 2 degenerates to the classical determinant
    const Hypermatrix m2 = random_int_hypermatrix(rng, 3, 2, -5, 5);
    CHECK(fdet_bruteforce(m2, FMap::constant_one(0)) == det(slice(m2, {})));
    CHECK(fdet_expansion(m2, FMap::sign_product(0)) == det(slice(m2, {})));

    // sign-product weights reproduce det1
    const Hypermatrix m3 = random_int_hypermatrix(rng, 3, 3, -5, 5);
    CHECK(fdet_bruteforce(m3, FMap::sign_product(1)) == det1(m3));

    // a single listed tuple with zero default picks out one weighted minor
    const std::vector<Permutation> tup = {Permutation::unrank(3, 4)};
    FMap::Table_t entries;
    entries.emplace(tup, Scalar(7));
    const FMap single = FMap::table(1, std::move(entries), Scalar(0));
    CHECK(fdet_expansion(m3, single) == Scalar(7) * det(slice(m3, tup)));
    CHECK(fdet_bruteforce(m3, single) == Scalar(7) * det(slice(m3, tup)));

    CHECK_THROWS_AS(fdet_bruteforce(m3, FMap::sign_product(2)), ArityMismatch);
    CHECK_THROWS_AS(fdet_expansion(m3, FMap::constant_one(0)), ArityMismatch);
}

TEST_CASE("expansion equals bruteforce on seeded instances") {
    Rng rng(20240101);
    for (int t = 0; t < 200; ++t) {
        const int n = static_cast<int>(rng.range(1, 4));
        const int k = static_cast<int>(rng.range(2, 4));
        const Hypermatrix m = random_int_hypermatrix(rng, n, k, -5, 5);
        const FMap f = t % 3 == 0   ? FMap::sign_product(k - 2)
                       : t % 3 == 1 ? FMap::constant_one(k - 2)
                                    : random_table_fmap(rng, n, k - 2, -3, 3);
        CHECK(fdet_expansion(m, f) == fdet_bruteforce(m, f));
    }
}

TEST_CASE("group action") {
    Rng rng(31);
    const Hypermatrix m = random_int_hypermatrix(rng, 2, 3, -5, 5);
    CHECK(group_action(ScalarMatrix::identity(2), m) == m);

    ScalarMatrix twice(2, 2);
    twice.at(0, 0) = twice.at(1, 1) = Scalar(2);
    const Hypermatrix doubled = group_action(twice, m);
    for (std::uint64_t off = 0; off < m.size(); ++off)
        CHECK(doubled.flat(off) == Scalar(2) * m.flat(off));
    CHECK(fdet_expansion(doubled, FMap::sign_product(1)) ==
          Scalar(4) * fdet_expansion(m, FMap::sign_product(1)));

    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        const Hypermatrix h = random_int_hypermatrix(rng, n, 3, -5, 5);
        const ScalarMatrix g = random_rational_matrix(rng, n, -4, 4, 3);
        const FMap f = t % 2 ? FMap::sign_product(1) : random_table_fmap(rng, n, 1, -3, 3);
        CHECK(fdet_expansion(group_action(g, h), f) == det(g) * fdet_expansion(h, f));
    }

    CHECK_THROWS_AS(group_action(ScalarMatrix::identity(3), m), DimensionMismatch);
}

TEST_CASE("multilinearity along the second axis") {
    Rng rng(37);
    const int n = 3;
    const Scalar alpha(3), beta(-2);
    Hypermatrix u = random_int_hypermatrix(rng, n, 3, -5, 5);
    Hypermatrix v = u;
    Hypermatrix w = u;
    const int row = 1;
    for (int i = 0; i < n; ++i)
        for (int a3 = 0; a3 < n; ++a3) {
            const std::vector<int> idx = {i, row, a3};
            const Scalar uv(rng.range(-5, 5));
            const Scalar vv(rng.range(-5, 5));
            v.at(idx) = uv;
            w.at(idx) = vv;
            u.at(idx) = alpha * uv + beta * vv;
        }
    const FMap f = random_table_fmap(rng, n, 1, -3, 3);
    CHECK(fdet_bruteforce(u, f) ==
          alpha * fdet_bruteforce(v, f) + beta * fdet_bruteforce(w, f));
}

TEST_CASE("enumeration guard") {
    CHECK(bruteforce_term_count(4, 3) == 576);
    CHECK(expansion_term_count(4, 3) == 24);
    const Hypermatrix big(8, 3); // (8!)^2 > 10^8
    CHECK_THROWS_AS(fdet_bruteforce(big, FMap::sign_product(1)), GuardExceeded);
    CHECK_THROWS_AS(cayley_det(Hypermatrix(8, 2)), GuardExceeded);
    CHECK_NOTHROW(guarded_tuple_count(4, 3, false));
}

TEST_CASE("parallel and serial sums are bit-identical") {
    // chunked summation crosses the threading threshold at 2048 terms;
    // n=4, k=3 gives 13824 tuples
    Rng rng(41);
    const Hypermatrix m = random_int_hypermatrix(rng, 4, 4, -5, 5);
    const Scalar threaded = fdet_bruteforce(m, FMap::sign_product(2));
    const Scalar expanded = fdet_expansion(m, FMap::sign_product(2));
    CHECK(threaded == expanded);
    CHECK(threaded.str() == expanded.str());
}

} // TEST_SUITE
