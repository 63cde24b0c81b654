#include "meetdet/closedform.hpp"

#include <algorithm>
#include <set>

namespace meetdet {

GroundedFunction GroundedFunction::make(std::shared_ptr<const MeetSemilattice> lattice,
                                        std::vector<int> X, std::vector<int> z_of,
                                        std::vector<std::vector<Scalar>> F) {
    if (!lattice) throw PreconditionError("grounded function needs a lattice");
    const int n = lattice->n();
    if (X.empty()) throw PreconditionError("index set is empty");
    std::set<int> seen;
    for (int x : X) {
        if (x < 0 || x >= n) throw IndexOutOfRange("index set element " + std::to_string(x));
        if (!seen.insert(x).second)
            throw PreconditionError("index set repeats element " + lattice->poset().label(x));
    }
    if (z_of.size() != X.size() || F.size() != X.size())
        throw PreconditionError("index set, grounding and value rows must have equal length");
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (z_of[i] < 0 || z_of[i] >= n)
            throw IndexOutOfRange("grounding element " + std::to_string(z_of[i]));
        if (!lattice->poset().leq(z_of[i], X[i]))
            throw PreconditionError("grounding " + lattice->poset().label(z_of[i]) +
                                    " is not below " + lattice->poset().label(X[i]));
        if (static_cast<int>(F[i].size()) != n)
            throw PreconditionError("value row " + std::to_string(i) + " has wrong length");
    }
    GroundedFunction gf;
    gf.lattice = std::move(lattice);
    gf.X = std::move(X);
    gf.z_of = std::move(z_of);
    gf.F = std::move(F);
    return gf;
}

bool GroundedFunction::all_grounded_at_x() const {
    for (std::size_t i = 0; i < X.size(); ++i)
        if (z_of[i] != X[i]) return false;
    return true;
}

bool GroundedFunction::uniform_F() const {
    for (std::size_t i = 1; i < F.size(); ++i)
        if (!(F[i] == F[0])) return false;
    return true;
}

std::vector<Scalar> zeta_transform(const Poset& p, std::span<const Scalar> f) {
    if (static_cast<int>(f.size()) != p.n())
        throw DimensionMismatch("transform input length differs from the poset size");
    std::vector<Scalar> F(f.size(), Scalar(0));
    for (int x = 0; x < p.n(); ++x)
        for (int y = 0; y < p.n(); ++y)
            if (p.leq(y, x)) F[x] += f[y];
    return F;
}

std::vector<Scalar> mobius_transform(const Poset& p, std::span<const Scalar> F) {
    if (static_cast<int>(F.size()) != p.n())
        throw DimensionMismatch("transform input length differs from the poset size");
    const IncidenceMatrix mu = mobius_matrix(p);
    std::vector<Scalar> f(F.size(), Scalar(0));
    for (int x = 0; x < p.n(); ++x)
        for (int y = 0; y < p.n(); ++y)
            if (p.leq(y, x)) f[x] += mu.at(y, x) * F[y];
    return f;
}

Hypermatrix build_meet_hypermatrix(const GroundedFunction& gf, int k) {
    const int n = gf.size();
    const MeetSemilattice& sl = *gf.lattice;
    Hypermatrix m(n, k);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (std::uint64_t off = 0; off < m.size(); ++off) {
        std::uint64_t rest = off;
        for (int a = k - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
        }
        int w = gf.z_of[idx[0]];
        for (int a = 1; a < k; ++a) w = sl.meet(w, gf.X[idx[static_cast<std::size_t>(a)]]);
        m.flat(off) = gf.value(idx[0], w);
    }
    return m;
}

static void require_whole_lattice(const GroundedFunction& gf) {
    if (gf.size() != gf.lattice->n())
        throw IndexSetNotWholeLattice("index set has " + std::to_string(gf.size()) +
                                      " of " + std::to_string(gf.lattice->n()) + " elements");
}

static std::vector<Permutation> identity_tuple(int n, int arity) {
    return std::vector<Permutation>(static_cast<std::size_t>(arity), Permutation::identity(n));
}

// prod_x f_x(x) over the whole lattice, f_x = Moebius transform of F_x.
static Scalar whole_lattice_product(const GroundedFunction& gf) {
    const Poset& p = gf.lattice->poset();
    const IncidenceMatrix mu = mobius_matrix(p);
    Scalar prod(1);
    for (int i = 0; i < gf.size(); ++i) {
        const int x = gf.X[i];
        Scalar fx(0);
        for (int y = 0; y < p.n(); ++y)
            if (p.leq(y, x)) fx += mu.at(y, x) * gf.value(i, y);
        prod *= fx;
    }
    return prod;
}

Scalar lindstrom_det(const GroundedFunction& gf) {
    require_whole_lattice(gf);
    if (!gf.all_grounded_at_x()) return Scalar(0);
    return whole_lattice_product(gf);
}

Scalar lindstrom_fdet(const GroundedFunction& gf, int k, const FMap& fmap) {
    require_whole_lattice(gf);
    if (fmap.arity() != k - 2)
        throw ArityMismatch("order " + std::to_string(k) + " needs arity " + std::to_string(k - 2));
    if (!gf.all_grounded_at_x()) return Scalar(0);
    const auto ids = identity_tuple(gf.size(), k - 2);
    return fmap(ids) * whole_lattice_product(gf);
}

std::vector<Scalar> hat_transform(const MeetSemilattice& sl, std::span<const int> S,
                                  std::span<const Scalar> f) {
    const Poset& p = sl.poset();
    if (static_cast<int>(f.size()) != p.n())
        throw DimensionMismatch("hat transform input length differs from the lattice size");
    std::set<int> distinct(S.begin(), S.end());
    if (distinct.size() != S.size()) throw PreconditionError("subset listing repeats an element");
    if (!is_meet_closed(sl, S))
        throw SubsetNotMeetClosed("subset is not closed under meets");
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (p.less(S[i], S[j]))
                throw NotALinearExtension("listing places " + p.label(S[j]) + " before the smaller " +
                                          p.label(S[i]));
    std::vector<Scalar> hat(S.size(), Scalar(0));
    for (int x : order_ideal_closure(p, S)) hat[triangle_index(p, S, x)] += f[x];
    return hat;
}

Scalar meet_closed_fdet(const GroundedFunction& gf, int k, const FMap& fmap) {
    if (fmap.arity() != k - 2)
        throw ArityMismatch("order " + std::to_string(k) + " needs arity " + std::to_string(k - 2));
    if (!is_meet_closed(*gf.lattice, gf.X))
        throw SubsetNotMeetClosed("index set is not closed under meets");
    if (!gf.all_grounded_at_x())
        throw PreconditionError("meet-closed closed form requires z_x = x for every x");
    const Poset& p = gf.lattice->poset();
    // Reorder to a linear extension; the product below is listing-invariant.
    const std::vector<int> local = linear_extension(induced_subposet(p, gf.X));
    std::vector<int> S;
    S.reserve(gf.X.size());
    for (int pos : local) S.push_back(gf.X[pos]);
    const IncidenceMatrix mu = mobius_matrix(p);
    std::vector<Scalar> hat(S.size(), Scalar(0));
    for (int x : order_ideal_closure(p, S)) {
        const std::size_t r = triangle_index(p, S, x);
        const int row = local[r]; // original row of y_r in gf
        Scalar fx(0);
        for (int y = 0; y < p.n(); ++y)
            if (p.leq(y, x)) fx += mu.at(y, x) * gf.value(row, y);
        hat[r] += fx;
    }
    Scalar prod(1);
    for (const Scalar& h : hat) prod *= h;
    return fmap(identity_tuple(gf.size(), k - 2)) * prod;
}

Scalar factor_closed_fdet(const GroundedFunction& gf, int k, const FMap& fmap) {
    if (fmap.arity() != k - 2)
        throw ArityMismatch("order " + std::to_string(k) + " needs arity " + std::to_string(k - 2));
    const Poset& p = gf.lattice->poset();
    if (!is_order_ideal(p, gf.X))
        throw SubsetNotFactorClosed("index set does not contain all factors of its elements");
    if (!gf.all_grounded_at_x()) return Scalar(0);
    // A factor-closed subset is a meet semilattice in its own right; compute
    // the Moebius transforms within it.
    const Poset sub = induced_subposet(p, gf.X);
    const IncidenceMatrix mu = mobius_matrix(sub);
    Scalar prod(1);
    for (int i = 0; i < gf.size(); ++i) {
        Scalar fx(0);
        for (int j = 0; j < sub.n(); ++j)
            if (sub.leq(j, i)) fx += mu.at(j, i) * gf.value(i, gf.X[j]);
        prod *= fx;
    }
    return fmap(identity_tuple(gf.size(), k - 2)) * prod;
}

std::vector<int> closure_listing(const GroundedFunction& gf) {
    const Poset& p = gf.lattice->poset();
    std::vector<int> listing = gf.X;
    std::set<int> in(gf.X.begin(), gf.X.end());
    for (int y : order_ideal_closure(p, gf.X))
        if (!in.count(y)) listing.push_back(y);
    return listing;
}

// Moebius transform of each F row over the closure subposet; rows follow X,
// columns follow the listing.
static ScalarMatrix closure_mobius_rows(const GroundedFunction& gf,
                                        const std::vector<int>& listing) {
    const Poset sub = induced_subposet(gf.lattice->poset(), listing);
    const IncidenceMatrix mu = mobius_matrix(sub);
    const int m = sub.n();
    ScalarMatrix f(gf.size(), m);
    for (int i = 0; i < gf.size(); ++i)
        for (int j = 0; j < m; ++j) {
            Scalar acc(0);
            for (int w = 0; w < m; ++w)
                if (sub.leq(w, j)) acc += mu.at(w, j) * gf.value(i, listing[w]);
            f.at(i, j) = acc;
        }
    return f;
}

ScalarMatrix c_matrix(const GroundedFunction& gf) {
    const std::vector<int> listing = closure_listing(gf);
    const ScalarMatrix f = closure_mobius_rows(gf, listing);
    const Poset& p = gf.lattice->poset();
    ScalarMatrix c(gf.size(), static_cast<int>(listing.size()));
    for (int i = 0; i < gf.size(); ++i)
        for (int j = 0; j < static_cast<int>(listing.size()); ++j)
            c.at(i, j) = p.leq(listing[j], gf.z_of[i]) ? f.at(i, j) : Scalar(0);
    return c;
}

namespace {

// Ascending n-element index subsets of {0..m-1}.
struct Combinations {
    int m, n;
    std::vector<int> k;
    bool done = false;

    Combinations(int m_, int n_) : m(m_), n(n_), k(static_cast<std::size_t>(n_)) {
        for (int i = 0; i < n; ++i) k[static_cast<std::size_t>(i)] = i;
        if (n > m) done = true;
    }

    void advance() {
        int i = n - 1;
        while (i >= 0 && k[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) {
            done = true;
            return;
        }
        ++k[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            k[static_cast<std::size_t>(j)] = k[static_cast<std::size_t>(j - 1)] + 1;
    }
};

std::uint64_t binomial(int m, int n) {
    if (n < 0 || n > m) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= n; ++i) r = r * static_cast<std::uint64_t>(m - n + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace

Scalar li_expansion_det(const GroundedFunction& gf) {
    const Poset& p = gf.lattice->poset();
    const std::vector<int> listing = closure_listing(gf);
    const ScalarMatrix c = c_matrix(gf);
    const int n = gf.size();
    const int m = static_cast<int>(listing.size());
    Scalar total(0);
    for (Combinations comb(m, n); !comb.done; comb.advance()) {
        ScalarMatrix cm(n, n);
        ScalarMatrix zm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                cm.at(i, j) = c.at(i, comb.k[static_cast<std::size_t>(j)]);
                zm.at(i, j) = Scalar(p.leq(listing[comb.k[static_cast<std::size_t>(i)]], gf.X[j]) ? 1 : 0);
            }
        const Scalar dc = det(cm);
        if (dc.is_zero()) continue;
        total += dc * det(zm);
    }
    return total;
}

Scalar ligen_fdet(const GroundedFunction& gf, int k, const FMap& fmap, bool force) {
    if (fmap.arity() != k - 2)
        throw ArityMismatch("order " + std::to_string(k) + " needs arity " + std::to_string(k - 2));
    const Poset& p = gf.lattice->poset();
    const MeetSemilattice& sl = *gf.lattice;
    const std::vector<int> listing = closure_listing(gf);
    const ScalarMatrix f = closure_mobius_rows(gf, listing);
    const int n = gf.size();
    const int m = static_cast<int>(listing.size());
    Scalar total(0);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (Combinations comb(m, n); !comb.done; comb.advance()) {
        Hypermatrix inner(n, k);
        for (std::uint64_t off = 0; off < inner.size(); ++off) {
            std::uint64_t rest = off;
            for (int a = k - 1; a >= 0; --a) {
                idx[static_cast<std::size_t>(a)] =
                    static_cast<int>(rest % static_cast<std::uint64_t>(n));
                rest /= static_cast<std::uint64_t>(n);
            }
            int w = gf.z_of[idx[0]];
            for (int a = 2; a < k; ++a) w = sl.meet(w, gf.X[idx[static_cast<std::size_t>(a)]]);
            const int col = comb.k[static_cast<std::size_t>(idx[1])];
            inner.flat(off) =
                p.leq(listing[col], w) ? f.at(idx[0], col) : Scalar(0);
        }
        const Scalar inner_det = fdet_expansion(inner, fmap, force);
        if (inner_det.is_zero()) continue;
        ScalarMatrix zm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                zm.at(i, j) =
                    Scalar(p.leq(listing[comb.k[static_cast<std::size_t>(i)]], gf.X[j]) ? 1 : 0);
        total += inner_det * det(zm);
    }
    return total;
}

Scalar genhauk_fdet(const GroundedFunction& gf, int k, const FMap& fmap, bool force) {
    if (fmap.arity() != k - 2)
        throw ArityMismatch("order " + std::to_string(k) + " needs arity " + std::to_string(k - 2));
    if (!gf.uniform_F())
        throw FunctionsNotUniform("the F_x rows differ; the shared-function form needs one F");
    const Poset& p = gf.lattice->poset();
    const MeetSemilattice& sl = *gf.lattice;
    const std::vector<int> listing = closure_listing(gf);
    const ScalarMatrix frows = closure_mobius_rows(gf, listing);
    const int n = gf.size();
    const int m = static_cast<int>(listing.size());
    Scalar total(0);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (Combinations comb(m, n); !comb.done; comb.advance()) {
        Scalar factor(1);
        for (int i = 0; i < n; ++i) factor *= frows.at(0, comb.k[static_cast<std::size_t>(i)]);
        if (factor.is_zero()) continue;
        Hypermatrix inner(n, k);
        for (std::uint64_t off = 0; off < inner.size(); ++off) {
            std::uint64_t rest = off;
            for (int a = k - 1; a >= 0; --a) {
                idx[static_cast<std::size_t>(a)] =
                    static_cast<int>(rest % static_cast<std::uint64_t>(n));
                rest /= static_cast<std::uint64_t>(n);
            }
            int w = gf.z_of[idx[0]];
            for (int a = 2; a < k; ++a) w = sl.meet(w, gf.X[idx[static_cast<std::size_t>(a)]]);
            const int col = comb.k[static_cast<std::size_t>(idx[1])];
            inner.flat(off) = Scalar(p.leq(listing[col], w) ? 1 : 0);
        }
        const Scalar inner_det = fdet_expansion(inner, fmap, force);
        if (inner_det.is_zero()) continue;
        ScalarMatrix zm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                zm.at(i, j) =
                    Scalar(p.leq(listing[comb.k[static_cast<std::size_t>(i)]], gf.X[j]) ? 1 : 0);
        total += factor * inner_det * det(zm);
    }
    return total;
}

std::uint64_t subset_expansion_term_count(const GroundedFunction& gf, int k) {
    const auto m = static_cast<int>(closure_listing(gf).size());
    return binomial(m, gf.size()) * expansion_term_count(gf.size(), k);
}

GroundedFunction symbolic_gf_in_F(std::shared_ptr<const MeetSemilattice> lattice,
                                  std::vector<int> X) {
    const Poset& p = lattice->poset();
    std::vector<std::vector<Scalar>> F;
    for (int x : X) {
        std::vector<Scalar> row(p.n(), Scalar(0));
        for (int z = 0; z < p.n(); ++z)
            if (p.leq(z, x))
                row[z] = Scalar::variable("F" + p.label(x) + "(" + p.label(z) + ")");
        F.push_back(std::move(row));
    }
    std::vector<int> z = X;
    return GroundedFunction::make(std::move(lattice), std::move(X), std::move(z), std::move(F));
}

GroundedFunction symbolic_gf_in_f(std::shared_ptr<const MeetSemilattice> lattice,
                                  std::vector<int> X) {
    const Poset& p = lattice->poset();
    std::vector<std::vector<Scalar>> F;
    for (int x : X) {
        std::vector<Scalar> fs(p.n(), Scalar(0));
        for (int y = 0; y < p.n(); ++y)
            fs[y] = Scalar::variable("f" + p.label(x) + "(" + p.label(y) + ")");
        F.push_back(zeta_transform(p, fs));
    }
    std::vector<int> z = X;
    return GroundedFunction::make(std::move(lattice), std::move(X), std::move(z), std::move(F));
}

FMap symbolic_fmap(int n, int arity) {
    if (n > 9) throw PreconditionError("symbolic coefficient names need n <= 9");
    const std::uint64_t nf = factorial(n);
    std::uint64_t tuples = 1;
    for (int i = 0; i < arity; ++i) tuples *= nf;
    FMap::Table_t entries;
    std::vector<Permutation> tup(static_cast<std::size_t>(arity), Permutation::identity(n));
    for (std::uint64_t r = 0; r < tuples; ++r) {
        std::uint64_t rest = r;
        for (int s = arity - 1; s >= 0; --s) {
            tup[static_cast<std::size_t>(s)] = Permutation::unrank(n, rest % nf);
            rest /= nf;
        }
        std::string name = "Frak(";
        for (int s = 0; s < arity; ++s) {
            if (s) name += "_";
            for (int i = 0; i < n; ++i)
                name += std::to_string(tup[static_cast<std::size_t>(s)].map(i) + 1);
        }
        name += ")";
        entries.emplace(tup, Scalar::variable(name));
    }
    return FMap::table(arity, std::move(entries), Scalar(0));
}

} // namespace meetdet
