#include "meetdet/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "meetdet/formats.hpp"
#include "meetdet/instances.hpp"

namespace meetdet {

namespace {

struct Suite {
    const VerifyOptions& opt;
    std::ostream& out;
    VerifyOutcome outcome;

    // Each property gets its own stream seeded from (seed, property index),
    // so adding a property never reshuffles the others.
    Rng property_rng(int index) const { return Rng(opt.seed * 1000003ull + static_cast<std::uint64_t>(index)); }

    void run(const std::string& name, int index,
             const std::function<bool(Rng&, int, std::string&)>& trial) {
        ++outcome.properties;
        int passed = 0;
        Rng rng = property_rng(index);
        for (int t = 0; t < opt.trials; ++t) {
            ++outcome.checks;
            std::string reproducer;
            const bool ok = trial(rng, t, reproducer);
            if (ok) {
                ++passed;
            } else {
                ++outcome.failures;
                out << "FAIL property " << name << " (trial " << t << ")\n";
                out << "  seed " << opt.seed << "\n";
                if (!reproducer.empty()) out << reproducer;
            }
        }
        out << "property " << name << ": " << passed << "/" << opt.trials << "\n";
    }
};

// Largest side that keeps (n!)^slots under the enumeration guard; the suite
// samples within it instead of tripping GuardExceeded at large --nmax.
int guarded_side(int want, int slots) {
    int n = std::min(want, 12);
    for (; n > 1; --n) {
        const std::uint64_t f = factorial(n);
        std::uint64_t acc = 1;
        bool fits = true;
        for (int i = 0; i < slots && fits; ++i) {
            if (acc > kBruteForceGuard / f) fits = false;
            acc *= f;
        }
        if (fits) return n;
    }
    return 1;
}

std::string dump_hypermatrix(const Hypermatrix& m, const std::string& fmap_desc) {
    std::string s = "  fmap " + fmap_desc + "\n  hypermatrix file:\n";
    s += hypermatrix_text(m);
    return s;
}

std::string dump_gf(const GroundedFunction& gf, int k, const std::string& fmap_desc) {
    std::string s = "  k " + std::to_string(k) + ", fmap " + fmap_desc + "\n  poset file:\n";
    s += poset_text(gf.lattice->poset());
    s += "  gf file:\n";
    s += gf_text(gf, "<poset-file>");
    return s;
}

// Cycles sign / one / table deterministically.
FMap pick_fmap(Rng& rng, int trial, int n, int arity, std::string& desc) {
    switch (trial % 3) {
        case 0: desc = "sign"; return FMap::sign_product(arity);
        case 1: desc = "one"; return FMap::constant_one(arity);
        default: desc = "table"; return random_table_fmap(rng, n, arity, -3, 3);
    }
}

} // namespace

VerifyOutcome run_verify(const VerifyOptions& opt, std::ostream& out) {
    Suite suite{opt, out, {}};
    if (opt.trials <= 0) {
        out << "warning: 0 trials requested, nothing verified\n";
        return suite.outcome;
    }
    const int nmax = std::max(1, opt.nmax);
    const int kmax = std::max(2, opt.kmax);

    suite.run("mobius_inverts_zeta", 0, [&](Rng& rng, int, std::string& rep) {
        const int n = static_cast<int>(rng.range(1, std::max(2, nmax * 2)));
        const Poset p = random_poset(rng, n);
        if (!(mobius_matrix(p) * zeta_matrix(p) == ScalarMatrix::identity(n))) {
            rep = "  poset file:\n" + poset_text(p);
            return false;
        }
        std::vector<Scalar> f;
        for (int i = 0; i < n; ++i) f.emplace_back(rng.range(-9, 9));
        const auto back = mobius_transform(p, zeta_transform(p, f));
        for (int i = 0; i < n; ++i)
            if (back[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(i)]) {
                rep = "  poset file:\n" + poset_text(p);
                return false;
            }
        return true;
    });

    suite.run("expansion_equals_bruteforce", 1, [&](Rng& rng, int trial, std::string& rep) {
        const int k = static_cast<int>(rng.range(2, kmax));
        const int n = static_cast<int>(rng.range(1, guarded_side(nmax, k - 1)));
        const Hypermatrix m = random_int_hypermatrix(rng, n, k, -5, 5);
        std::string desc;
        const FMap f = pick_fmap(rng, trial, n, k - 2, desc);
        const Scalar brute = fdet_bruteforce(m, f);
        Scalar expanded = fdet_expansion(m, f);
        if (opt.inject_fault && trial == 0) expanded += Scalar(1); // negative control
        if (brute == expanded) return true;
        rep = dump_hypermatrix(m, desc) + "  bruteforce " + brute.str() + ", expansion " +
              expanded.str() + "\n";
        return false;
    });

    if (kmax >= 3)
        // The alternating sum needs a transposition to cancel against, so the
        // vanishing statement starts at n = 2.
        suite.run("cayley_zero_for_odd_order", 2, [&](Rng& rng, int, std::string& rep) {
            const int n = static_cast<int>(rng.range(2, std::max(2, guarded_side(nmax, 3))));
            const Hypermatrix m = random_int_hypermatrix(rng, n, 3, -5, 5);
            const Scalar d = cayley_det(m);
            if (d.is_zero()) return true;
            rep = dump_hypermatrix(m, "-") + "  cayley " + d.str() + "\n";
            return false;
        });

    suite.run("cayley_equals_det1_for_even_order", 3, [&](Rng& rng, int trial, std::string& rep) {
        const int k = (kmax >= 4 && trial % 2 == 0) ? 4 : 2;
        const int n = static_cast<int>(rng.range(1, std::min(guarded_side(nmax, k), 3)));
        const Hypermatrix m = random_int_hypermatrix(rng, n, k, -5, 5);
        const Scalar a = cayley_det(m);
        const Scalar b = det1(m);
        if (a == b) return true;
        rep = dump_hypermatrix(m, "-") + "  cayley " + a.str() + ", det1 " + b.str() + "\n";
        return false;
    });

    if (kmax >= 3)
        suite.run("group_action_scales_by_det", 4, [&](Rng& rng, int trial, std::string& rep) {
            const int n = static_cast<int>(rng.range(1, std::min(nmax, 3)));
            const Hypermatrix m = random_int_hypermatrix(rng, n, 3, -5, 5);
            const ScalarMatrix g = random_rational_matrix(rng, n, -4, 4, 3);
            std::string desc;
            const FMap f = pick_fmap(rng, trial, n, 1, desc);
            const Scalar lhs = fdet_expansion(group_action(g, m), f);
            const Scalar rhs = det(g) * fdet_expansion(m, f);
            if (lhs == rhs) return true;
            rep = dump_hypermatrix(m, desc) + "  transformed " + lhs.str() + ", scaled " +
                  rhs.str() + "\n";
            return false;
        });

    suite.run("whole_lattice_product_formula", 5, [&](Rng& rng, int trial, std::string& rep) {
        const int n = static_cast<int>(rng.range(1, std::max(2, std::min(nmax + 2, 6))));
        auto sl = random_meet_semilattice(rng, n);
        std::vector<int> X(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) X[static_cast<std::size_t>(i)] = i;
        const bool grounded = trial % 2 == 0;
        const GroundedFunction gf = random_gf(rng, sl, X, grounded, -5, 5);
        const Scalar closed = lindstrom_det(gf);
        const Scalar direct = det(slice(build_meet_hypermatrix(gf, 2), {}));
        if (closed == direct && (gf.all_grounded_at_x() || closed.is_zero())) return true;
        rep = dump_gf(gf, 2, "-") + "  closed " + closed.str() + ", determinant " + direct.str() +
              "\n";
        return false;
    });

    if (kmax >= 3)
        suite.run("weighted_whole_lattice_formula", 6, [&](Rng& rng, int trial, std::string& rep) {
            const int n = static_cast<int>(rng.range(1, std::min(nmax, 4)));
            const int k = static_cast<int>(rng.range(3, std::min(kmax, 4)));
            auto sl = random_meet_semilattice(rng, n);
            std::vector<int> X(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) X[static_cast<std::size_t>(i)] = i;
            const bool grounded = trial % 2 == 0;
            const GroundedFunction gf = random_gf(rng, sl, X, grounded, -5, 5);
            std::string desc;
            const FMap f = pick_fmap(rng, trial, n, k - 2, desc);
            const Scalar closed = lindstrom_fdet(gf, k, f);
            const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, k), f);
            if (closed == brute && (gf.all_grounded_at_x() || closed.is_zero())) return true;
            rep = dump_gf(gf, k, desc) + "  closed " + closed.str() + ", bruteforce " +
                  brute.str() + "\n";
            return false;
        });

    suite.run("meet_closed_subset_formula", 7, [&](Rng& rng, int trial, std::string& rep) {
        const int n = static_cast<int>(rng.range(2, std::max(2, std::min(nmax + 2, 6))));
        auto sl = random_meet_semilattice(rng, n);
        const std::vector<int> S = meet_closure(*sl, random_subset(rng, n, 3));
        const int k = kmax >= 3 && trial % 2 ? 3 : 2;
        const GroundedFunction gf = random_gf(rng, sl, S, true, -5, 5);
        std::string desc;
        const FMap f = pick_fmap(rng, trial, static_cast<int>(S.size()), k - 2, desc);
        const Scalar closed = meet_closed_fdet(gf, k, f);
        const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, k), f);
        if (closed != brute) {
            rep = dump_gf(gf, k, desc) + "  closed " + closed.str() + ", bruteforce " +
                  brute.str() + "\n";
            return false;
        }
        // Redistribution identity: F(y_i) = sum_{y_k <= y_i} hat(f)(y_k).
        std::vector<Scalar> fv;
        for (int i = 0; i < sl->n(); ++i) fv.emplace_back(rng.range(-5, 5));
        const auto Fv = zeta_transform(sl->poset(), fv);
        const auto hat = hat_transform(*sl, S, fv);
        for (std::size_t i = 0; i < S.size(); ++i) {
            Scalar acc(0);
            for (std::size_t j = 0; j < S.size(); ++j)
                if (sl->poset().leq(S[j], S[i])) acc += hat[j];
            if (acc != Fv[static_cast<std::size_t>(S[i])]) {
                rep = "  poset file:\n" + poset_text(sl->poset());
                return false;
            }
        }
        return true;
    });

    suite.run("factor_closed_subset_formula", 8, [&](Rng& rng, int trial, std::string& rep) {
        const int n = static_cast<int>(rng.range(2, std::max(2, std::min(nmax + 2, 6))));
        auto sl = random_meet_semilattice(rng, n);
        const std::vector<int> S = order_ideal_closure(sl->poset(), random_subset(rng, n, 3));
        const int k = kmax >= 3 && trial % 2 ? 3 : 2;
        const GroundedFunction gf = random_gf(rng, sl, S, trial % 4 != 3, -5, 5);
        std::string desc;
        const FMap f = pick_fmap(rng, trial, static_cast<int>(S.size()), k - 2, desc);
        const Scalar closed = factor_closed_fdet(gf, k, f);
        const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, k), f);
        if (closed == brute) return true;
        rep = dump_gf(gf, k, desc) + "  closed " + closed.str() + ", bruteforce " + brute.str() +
              "\n";
        return false;
    });

    suite.run("subset_minor_expansions", 9, [&](Rng& rng, int trial, std::string& rep) {
        const int n = static_cast<int>(rng.range(2, std::max(2, std::min(nmax + 3, 7))));
        auto sl = random_meet_semilattice(rng, n);
        const std::vector<int> X = random_subset(rng, n, 3);
        const bool uniform = trial % 2 == 0;
        const GroundedFunction gf = random_gf(rng, sl, X, false, -5, 5, uniform);
        const int k = kmax >= 3 && trial % 2 ? 3 : 2;
        std::string desc;
        const FMap f = pick_fmap(rng, trial, static_cast<int>(X.size()), k - 2, desc);
        const Scalar brute = fdet_bruteforce(build_meet_hypermatrix(gf, k), f);
        const Scalar general = ligen_fdet(gf, k, f);
        if (general != brute) {
            rep = dump_gf(gf, k, desc) + "  subset expansion " + general.str() +
                  ", bruteforce " + brute.str() + "\n";
            return false;
        }
        if (k == 2) {
            const Scalar li = li_expansion_det(gf);
            const Scalar direct = det(slice(build_meet_hypermatrix(gf, 2), {}));
            if (li != direct) {
                rep = dump_gf(gf, 2, desc) + "  minor expansion " + li.str() + ", determinant " +
                      direct.str() + "\n";
                return false;
            }
        }
        if (uniform) {
            const Scalar shared = genhauk_fdet(gf, k, f);
            if (shared != general) {
                rep = dump_gf(gf, k, desc) + "  shared-function form " + shared.str() +
                      ", subset expansion " + general.str() + "\n";
                return false;
            }
        }
        return true;
    });

    if (suite.outcome.failures == 0)
        out << "all properties passed (" << suite.outcome.checks << " checks)\n";
    else
        out << suite.outcome.failures << " check(s) failed\n";
    return suite.outcome;
}

} // namespace meetdet
