#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "meetdet/formats.hpp"
#include "support.hpp"

using namespace meetdet;
using namespace testsupport;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_SUITE("formats") {

TEST_CASE("poset files") {
    std::istringstream in("poset 3\nlabel 0 a\ncover 0 1\ncover 1 2\n");
    const Poset p = parse_poset(in);
    CHECK(p.n() == 3);
    CHECK(p.label(0) == "a");
    CHECK(p.leq(0, 2));

    std::istringstream again(poset_text(p));
    const Poset q = parse_poset(again);
    CHECK(q.label(0) == "a");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p.leq(i, j) == q.leq(i, j));

    std::istringstream comments("# heading\nposet 2\n\ncover 0 1 # chain\n");
    CHECK(parse_poset(comments).leq(0, 1));

    std::istringstream bad_head("poset\n");
    CHECK_THROWS_AS(parse_poset(bad_head), ParseError);
    std::istringstream bad_line("poset 2\nedge 0 1\n");
    try {
        parse_poset(bad_line);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream cyclic("poset 2\ncover 0 1\ncover 1 0\n");
    CHECK_THROWS_AS(parse_poset(cyclic), ParseError);
    std::istringstream dup("poset 2\nlabel 0 x\nlabel 1 x\n");
    CHECK_THROWS_AS(parse_poset(dup), ParseError);
}

TEST_CASE("hypermatrix files") {
    Rng rng(3);
    const Hypermatrix m = random_int_hypermatrix(rng, 2, 3, -5, 5);
    std::istringstream in(hypermatrix_text(m));
    CHECK(parse_hypermatrix(in) == m);

    std::istringstream with_poly("hypermatrix 1 2\nx^2 - 1/2\n");
    const Hypermatrix sym = parse_hypermatrix(with_poly);
    CHECK(sym.flat(0) ==
          Scalar::variable("x") * Scalar::variable("x") - Scalar::rational(1, 2));

    std::istringstream short_file("hypermatrix 2 2\n1\n2\n3\n");
    CHECK_THROWS_AS(parse_hypermatrix(short_file), ParseError);
    std::istringstream bad_entry("hypermatrix 1 2\n@\n");
    CHECK_THROWS_AS(parse_hypermatrix(bad_entry), ParseError);
}

TEST_CASE("fmap table files") {
    std::istringstream in("2,1;1,2 -> 3\ndefault -> -1/2\n");
    const FMap f = parse_fmap_table(in, 2, 2);
    const std::vector<Permutation> key = {Permutation::parse_one_line("2,1"),
                                          Permutation::parse_one_line("1,2")};
    CHECK(f(key) == Scalar(3));
    const std::vector<Permutation> other = {Permutation::identity(2), Permutation::identity(2)};
    CHECK(f(other) == Scalar::rational(-1, 2));

    std::istringstream round(fmap_table_text(f));
    const FMap g = parse_fmap_table(round, 2, 2);
    CHECK(g(key) == Scalar(3));
    CHECK(g(other) == Scalar::rational(-1, 2));

    std::istringstream wrong_arity("2,1 -> 3\n");
    CHECK_THROWS_AS(parse_fmap_table(wrong_arity, 2, 2), ParseError);
    std::istringstream wrong_n("2,1,3;1,2,3 -> 3\n");
    CHECK_THROWS_AS(parse_fmap_table(wrong_n, 2, 2), ParseError);
    std::istringstream dup("1,2;1,2 -> 3\n1,2;1,2 -> 4\n");
    CHECK_THROWS_AS(parse_fmap_table(dup, 2, 2), ParseError);
}

TEST_CASE("grounded-function files") {
    const std::string poset_path = write_temp(
        "m5.poset", "poset 5\nlabel 0 1\nlabel 1 2\nlabel 2 3\nlabel 3 4\nlabel 4 5\n"
                    "cover 0 1\ncover 1 3\ncover 0 2\ncover 2 4\ncover 1 4\n");
    const std::string gf_path = write_temp(
        "m5.gf", "gf m5.poset 2\nz 4 3\nz 2 3\n# values\nF 4 1 -7/3\nsymbolic\n");
    // z 2 3 is invalid: 3 is not below 2 in this lattice
    CHECK_THROWS_AS(load_gf_file(gf_path), ParseError);

    const std::string ok_path = write_temp(
        "ok.gf", "gf m5.poset 2\nz 4 2\nz 5 5\nF 4 1 -7/3\nsymbolic\n");
    const GroundedFunction gf = load_gf_file(ok_path);
    CHECK(gf.size() == 2);
    CHECK(gf.lattice->n() == 5);
    CHECK(gf.X == std::vector<int>{3, 4});
    CHECK(gf.z_of == std::vector<int>{1, 4});
    CHECK(gf.value(0, 0) == Scalar::rational(-7, 3));          // explicit F 4 1
    CHECK(gf.value(0, 1) == Scalar::variable("F4(2)"));        // symbolic fill
    CHECK(gf.value(0, 2).is_zero());                           // 3 not below 4
    CHECK(gf.value(1, 2) == Scalar::variable("F5(3)"));

    std::istringstream count_off("gf p 2\nz 0 0\n");
    CHECK_THROWS_AS(
        parse_gf(count_off, [](const std::string&) { return Poset::from_covers(1, {}); }),
        ParseError);
    std::istringstream bad_label("gf p 1\nz q q\n");
    CHECK_THROWS_AS(
        parse_gf(bad_label, [](const std::string&) { return Poset::from_covers(1, {}); }),
        ParseError);
    std::istringstream f_before_z("gf p 1\nF 0 0 1\nz 0 0\n");
    CHECK_THROWS_AS(
        parse_gf(f_before_z, [](const std::string&) { return Poset::from_covers(1, {}); }),
        ParseError);

    // round trip through gf_text
    const GroundedFunction back = [&] {
        std::istringstream in(gf_text(gf, "m5.poset"));
        const std::string dir = std::filesystem::path(poset_path).parent_path().string();
        return parse_gf(in, [&](const std::string& ref) {
            return load_poset_file(dir + "/" + ref);
        });
    }();
    CHECK(back.X == gf.X);
    CHECK(back.z_of == gf.z_of);
    for (int i = 0; i < gf.size(); ++i)
        for (int z = 0; z < 5; ++z) CHECK(back.value(i, z) == gf.value(i, z));
}

TEST_CASE("subset lists") {
    const Poset p = Poset::from_covers(3, {}, {"a", "b", "c"});
    CHECK(parse_subset(p, "a,c") == std::vector<int>{0, 2});
    CHECK(parse_subset(p, "1, 2") == std::vector<int>{1, 2});
    CHECK_THROWS_AS(parse_subset(p, "d"), ParseError);
    CHECK_THROWS_AS(parse_subset(p, "7"), ParseError);
    CHECK_THROWS_AS(parse_subset(p, ""), ParseError);
}

TEST_CASE("digests are stable") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(digest_hex("meetdet") == digest_hex("meetdet"));
    CHECK(digest_hex("a") != digest_hex("b"));
    CHECK(digest_hex("").size() == 16);
}

} // TEST_SUITE
