#include "meetdet/hyperdet.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace meetdet {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw PreconditionError("permutation images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
    // Factorial number system: digit i selects among the remaining elements.
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> img;
    img.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const auto d = static_cast<std::size_t>(rank / f);
        rank %= f;
        img.push_back(pool[d]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<char> visited(img_.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (visited[i]) continue;
        int len = 0;
        for (std::size_t j = i; !visited[j]; j = static_cast<std::size_t>(img_[j])) {
            visited[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::next_lex() {
    if (std::next_permutation(img_.begin(), img_.end())) return true;
    // next_permutation left the identity behind after the last permutation
    return false;
}

std::string Permutation::one_line() const {
    std::string out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(img_[i] + 1);
    }
    return out;
}

Permutation Permutation::parse_one_line(const std::string& text) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            img.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
            throw ParseError("bad permutation image '" + tok + "'");
        }
    }
    if (img.empty()) throw ParseError("empty permutation");
    try {
        return Permutation(std::move(img));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t guarded_tuple_count(int n, int p, bool force) {
    const std::uint64_t f = factorial(n);
    std::uint64_t count = 1;
    for (int i = 0; i < p; ++i) {
        if (!force && count > kBruteForceGuard / f)
            throw GuardExceeded("(" + std::to_string(n) + "!)^" + std::to_string(p) +
                                " terms exceed " + std::to_string(kBruteForceGuard) +
                                "; pass force to override");
        count *= f;
    }
    if (!force && count > kBruteForceGuard)
        throw GuardExceeded("(" + std::to_string(n) + "!)^" + std::to_string(p) +
                            " terms exceed " + std::to_string(kBruteForceGuard) +
                            "; pass force to override");
    return count;
}

// ---------------------------------------------------------------------------
// Hypermatrix

Hypermatrix::Hypermatrix(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw DimensionMismatch("hypermatrix side must be positive");
    if (k < 2) throw DimensionMismatch("hypermatrix order must be at least 2");
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<std::uint64_t>(n);
    e_.resize(size);
}

Hypermatrix Hypermatrix::from_entries(int n, int k, std::vector<Scalar> entries) {
    Hypermatrix m(n, k);
    if (entries.size() != m.e_.size())
        throw DimensionMismatch("expected " + std::to_string(m.e_.size()) + " entries, got " +
                                std::to_string(entries.size()));
    m.e_ = std::move(entries);
    return m;
}

std::uint64_t Hypermatrix::offset(std::span<const int> idx) const {
    std::uint64_t off = 0;
    for (int a = 0; a < k_; ++a) off = off * static_cast<std::uint64_t>(n_) + idx[a];
    return off;
}

// ---------------------------------------------------------------------------
// FMap

FMap FMap::sign_product(int arity) { return FMap(Type::SignProduct, arity); }

FMap FMap::constant_one(int arity) { return FMap(Type::ConstantOne, arity); }

FMap FMap::table(int arity, Table_t entries, Scalar default_value) {
    FMap f(Type::Table, arity);
    for (const auto& [key, value] : entries)
        if (static_cast<int>(key.size()) != arity)
            throw ArityMismatch("table key of length " + std::to_string(key.size()) +
                                " in a map of arity " + std::to_string(arity));
    f.entries_ = std::move(entries);
    f.default_ = std::move(default_value);
    return f;
}

Scalar FMap::operator()(std::span<const Permutation> sigmas) const {
    if (static_cast<int>(sigmas.size()) != arity_)
        throw ArityMismatch("map of arity " + std::to_string(arity_) + " applied to " +
                            std::to_string(sigmas.size()) + " permutations");
    switch (type_) {
        case Type::ConstantOne: return Scalar(1);
        case Type::SignProduct: {
            int s = 1;
            for (const auto& p : sigmas) s *= p.sign();
            return Scalar(s);
        }
        case Type::Table: {
            std::vector<Permutation> key(sigmas.begin(), sigmas.end());
            auto it = entries_.find(key);
            return it != entries_.end() ? it->second : default_;
        }
    }
    return Scalar(0);
}

// ---------------------------------------------------------------------------
// Threading. Partial sums are combined in chunk order, and exact addition is
// associative, so the result is identical for any thread count.

static int thread_cap() {
    static const int cap = [] {
        if (const char* env = std::getenv("MEETDET_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return std::min(v, 256);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(std::min(hw, 16u)) : 1;
    }();
    return cap;
}

static Scalar chunked_sum(std::uint64_t total,
                          const std::function<Scalar(std::uint64_t, std::uint64_t)>& work) {
    const int cap = thread_cap();
    if (cap <= 1 || total < 2048) return work(0, total);
    const auto chunks = static_cast<std::uint64_t>(cap);
    const std::uint64_t step = (total + chunks - 1) / chunks;
    std::vector<Scalar> partial(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = std::min(c * step, total);
        const std::uint64_t hi = std::min(lo + step, total);
        threads.emplace_back([&partial, &work, c, lo, hi] { partial[c] = work(lo, hi); });
    }
    for (auto& t : threads) t.join();
    Scalar acc(0);
    for (const auto& p : partial) acc += p;
    return acc;
}

// Odometer over p-tuples of permutations, ordered by mixed-radix rank
// (base n!, last slot fastest, each slot lexicographic).
namespace {

struct PermTuple {
    std::vector<Permutation> sig;

    static PermTuple at_rank(int n, int p, std::uint64_t rank) {
        const std::uint64_t f = factorial(n);
        PermTuple t;
        t.sig.resize(static_cast<std::size_t>(p), Permutation::identity(n));
        for (int slot = p - 1; slot >= 0; --slot) {
            t.sig[static_cast<std::size_t>(slot)] = Permutation::unrank(n, rank % f);
            rank /= f;
        }
        return t;
    }

    void advance() {
        for (std::size_t slot = sig.size(); slot-- > 0;) {
            if (sig[slot].next_lex()) return;
            // wrapped to identity; carry into the previous slot
        }
    }
};

} // namespace

// ---------------------------------------------------------------------------
// Determinants

Scalar det(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar(1);
    ScalarMatrix a = m;
    int sign = 1;
    Scalar prev(1);
    for (int c = 0; c + 1 < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!a.at(r, c).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Scalar(0);
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
            sign = -sign;
        }
        for (int i = c + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(c, c) - a.at(i, c) * a.at(c, j)).exact_div(prev);
            a.at(i, c) = Scalar(0);
        }
        prev = a.at(c, c);
    }
    Scalar d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

Scalar cayley_det(const Hypermatrix& m, bool force) {
    const int n = m.n();
    const int k = m.k();
    const std::uint64_t total = guarded_tuple_count(n, k, force);
    const Scalar raw = chunked_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
        Scalar acc(0);
        PermTuple t = PermTuple::at_rank(n, k, lo);
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (std::uint64_t r = lo; r < hi; ++r, t.advance()) {
            int sign = 1;
            for (const auto& s : t.sig) sign *= s.sign();
            Scalar prod(1);
            for (int i = 0; i < n; ++i) {
                for (int a = 0; a < k; ++a) idx[static_cast<std::size_t>(a)] = t.sig[a].map(i);
                prod *= m.at(idx);
            }
            acc += sign > 0 ? prod : -prod;
        }
        return acc;
    });
    const Scalar nf(Int(factorial(n)));
    if (raw.kind() == Scalar::Kind::Integer) {
        if (!mpz_divisible_p(raw.as_int().get_mpz_t(), nf.as_int().get_mpz_t()))
            throw ScalarNotDivisible(std::to_string(n) +
                                     "! does not divide the integer alternating sum " +
                                     raw.str());
    }
    return raw.exact_div(nf);
}

Scalar det1(const Hypermatrix& m, bool force) {
    return fdet_bruteforce(m, FMap::sign_product(m.k() - 2), force);
}

Scalar fdet_bruteforce(const Hypermatrix& m, const FMap& f, bool force) {
    const int n = m.n();
    const int k = m.k();
    if (f.arity() != k - 2)
        throw ArityMismatch("hypermatrix of order " + std::to_string(k) +
                            " needs a coefficient map of arity " + std::to_string(k - 2) +
                            ", got " + std::to_string(f.arity()));
    const std::uint64_t total = guarded_tuple_count(n, k - 1, force);
    return chunked_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
        Scalar acc(0);
        PermTuple t = PermTuple::at_rank(n, k - 1, lo);
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (std::uint64_t r = lo; r < hi; ++r, t.advance()) {
            const std::span<const Permutation> rest(t.sig.data() + 1, t.sig.size() - 1);
            Scalar term = f(rest);
            if (term.is_zero()) continue;
            if (t.sig[0].sign() < 0) term = -term;
            for (int i = 0; i < n; ++i) {
                idx[0] = i;
                for (int a = 1; a < k; ++a)
                    idx[static_cast<std::size_t>(a)] = t.sig[static_cast<std::size_t>(a - 1)].map(i);
                term *= m.at(idx);
            }
            acc += term;
        }
        return acc;
    });
}

ScalarMatrix slice(const Hypermatrix& m, std::span<const Permutation> sigmas) {
    const int n = m.n();
    const int k = m.k();
    if (static_cast<int>(sigmas.size()) != k - 2)
        throw ArityMismatch("slice of an order-" + std::to_string(k) + " hypermatrix takes " +
                            std::to_string(k - 2) + " permutations");
    ScalarMatrix a(n, n);
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) {
        idx[0] = i;
        for (int s = 0; s < k - 2; ++s)
            idx[static_cast<std::size_t>(s + 2)] = sigmas[static_cast<std::size_t>(s)].map(i);
        for (int j = 0; j < n; ++j) {
            idx[1] = j;
            a.at(i, j) = m.at(idx);
        }
    }
    return a;
}

Scalar fdet_expansion(const Hypermatrix& m, const FMap& f, bool force) {
    const int n = m.n();
    const int k = m.k();
    if (f.arity() != k - 2)
        throw ArityMismatch("hypermatrix of order " + std::to_string(k) +
                            " needs a coefficient map of arity " + std::to_string(k - 2) +
                            ", got " + std::to_string(f.arity()));
    const std::uint64_t total = guarded_tuple_count(n, k - 2, force);
    return chunked_sum(total, [&](std::uint64_t lo, std::uint64_t hi) {
        Scalar acc(0);
        PermTuple t = PermTuple::at_rank(n, k - 2, lo);
        for (std::uint64_t r = lo; r < hi; ++r, t.advance()) {
            const Scalar coeff = f(t.sig);
            if (coeff.is_zero()) continue;
            acc += coeff * det(slice(m, t.sig));
        }
        return acc;
    });
}

Hypermatrix group_action(const ScalarMatrix& g, const Hypermatrix& m) {
    const int n = m.n();
    const int k = m.k();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("group action needs an n x n matrix matching the hypermatrix");
    Hypermatrix out(n, k);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    std::vector<int> src(static_cast<std::size_t>(k), 0);
    for (std::uint64_t off = 0; off < out.size(); ++off) {
        std::uint64_t rest = off;
        for (int a = k - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
        }
        src = idx;
        Scalar acc(0);
        for (int j = 0; j < n; ++j) {
            src[1] = j;
            acc += g.at(idx[1], j) * m.at(src);
        }
        out.flat(off) = acc;
    }
    return out;
}

std::uint64_t bruteforce_term_count(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 0; i < k - 1; ++i) c *= factorial(n);
    return c;
}

std::uint64_t expansion_term_count(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 0; i < k - 2; ++i) c *= factorial(n);
    return c;
}

} // namespace meetdet
