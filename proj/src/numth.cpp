#include "meetdet/numth.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace meetdet {

long euler_phi(long n) {
    if (n < 1) throw PreconditionError("euler_phi needs a positive argument");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result = result / p * (p - 1);
    }
    if (m > 1) result = result / m * (m - 1);
    return result;
}

static void check_positive(const std::vector<long>& S) {
    if (S.empty()) throw PreconditionError("empty integer set");
    for (long v : S)
        if (v < 1) throw PreconditionError("integer set members must be positive");
}

std::vector<long> gcd_closure(std::vector<long> S) {
    check_positive(S);
    std::set<long> out(S.begin(), S.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long> cur(out.begin(), out.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (out.insert(std::gcd(cur[i], cur[j])).second) changed = true;
    }
    return {out.begin(), out.end()};
}

std::vector<long> divisor_closure(std::vector<long> S) {
    check_positive(S);
    std::set<long> out;
    for (long v : S)
        for (long d = 1; d <= v; ++d)
            if (v % d == 0) out.insert(d);
    return {out.begin(), out.end()};
}

int DivisorSemilattice::index_of(long v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return -1;
    return static_cast<int>(it - values.begin());
}

DivisorSemilattice divisor_semilattice(std::vector<long> S) {
    check_positive(S);
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    const int n = static_cast<int>(S.size());
    std::set<long> members(S.begin(), S.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!members.count(std::gcd(S[i], S[j]))) throw NotGcdClosed(S[i], S[j]);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(S[i]));
        for (int j = 0; j < n; ++j) rel[i][j] = (S[j] % S[i] == 0) ? 1 : 0;
    }
    Poset p = Poset::from_relation(n, std::move(rel), std::move(labels));
    DivisorSemilattice out;
    out.lattice = std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(std::move(p)));
    out.values = std::move(S);
    return out;
}

ArithmeticFunction::ArithmeticFunction(long bound, std::vector<Scalar> values)
    : bound_(bound), values_(std::move(values)) {
    if (bound_ < 1 || values_.size() != static_cast<std::size_t>(bound_))
        throw PreconditionError("arithmetic function needs one value per 1..bound");
}

const Scalar& ArithmeticFunction::operator()(long n) const {
    if (n < 1 || n > bound_)
        throw IndexOutOfRange("argument " + std::to_string(n) + " outside 1.." +
                              std::to_string(bound_));
    return values_[static_cast<std::size_t>(n - 1)];
}

std::vector<Scalar> classical_mobius(long N) {
    static std::mutex mu_lock;
    static std::map<long, std::vector<Scalar>> cache;
    std::lock_guard<std::mutex> guard(mu_lock);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    std::vector<long> range(static_cast<std::size_t>(N));
    std::iota(range.begin(), range.end(), 1);
    const DivisorSemilattice dl = divisor_semilattice(range);
    const IncidenceMatrix mu = mobius_matrix(dl.lattice->poset());
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(N));
    for (long d = 1; d <= N; ++d) out.push_back(mu.at(0, dl.index_of(d)));
    cache.emplace(N, out);
    return out;
}

ArithmeticFunction ArithmeticFunction::named(const std::string& name, long bound) {
    std::vector<Scalar> vals;
    vals.reserve(static_cast<std::size_t>(bound));
    if (name == "id") {
        for (long n = 1; n <= bound; ++n) vals.emplace_back(n);
    } else if (name == "one") {
        vals.assign(static_cast<std::size_t>(bound), Scalar(1));
    } else if (name == "phi") {
        for (long n = 1; n <= bound; ++n) vals.emplace_back(euler_phi(n));
    } else if (name == "mu") {
        vals = classical_mobius(bound);
    } else if (name == "tau") {
        for (long n = 1; n <= bound; ++n) {
            long count = 0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) ++count;
            vals.emplace_back(count);
        }
    } else if (name == "sigma") {
        for (long n = 1; n <= bound; ++n) {
            long sum = 0;
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) sum += d;
            vals.emplace_back(sum);
        }
    } else {
        throw PreconditionError("unknown arithmetic function '" + name +
                                "' (expected id, one, phi, mu, tau or sigma)");
    }
    return ArithmeticFunction(bound, std::move(vals));
}

Scalar dirichlet_convolution(const ArithmeticFunction& f, const ArithmeticFunction& g, long n) {
    if (n < 1 || n > f.bound() || n > g.bound())
        throw IndexOutOfRange("convolution argument outside both bounds");
    Scalar acc(0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) acc += f(d) * g(n / d);
    return acc;
}

std::pair<Scalar, Scalar> cesaro_check(const ArithmeticFunction& f, long m, long n) {
    if (m < 1 || n < 1 || m > f.bound() || n > f.bound())
        throw IndexOutOfRange("arguments outside the function bound");
    const std::vector<Scalar> mu = classical_mobius(n);
    Scalar left(0);
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) left += mu[static_cast<std::size_t>(d - 1)] * f(std::gcd(m, n / d));
    Scalar right(0);
    if (m == n)
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) right += f(d) * mu[static_cast<std::size_t>(n / d - 1)];
    return {left, right};
}

Hypermatrix gcd_hypermatrix(std::span<const long> S, int k, const ArithmeticFunction& F) {
    if (S.empty()) throw PreconditionError("empty integer set");
    for (long v : S) {
        if (v < 1) throw PreconditionError("integer set members must be positive");
        if (v > F.bound())
            throw IndexOutOfRange("set member " + std::to_string(v) +
                                  " exceeds the function bound");
    }
    const int n = static_cast<int>(S.size());
    Hypermatrix m(n, k);
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    for (std::uint64_t off = 0; off < m.size(); ++off) {
        std::uint64_t rest = off;
        for (int a = k - 1; a >= 0; --a) {
            idx[static_cast<std::size_t>(a)] = static_cast<int>(rest % static_cast<std::uint64_t>(n));
            rest /= static_cast<std::uint64_t>(n);
        }
        long g = S[static_cast<std::size_t>(idx[0])];
        for (int a = 1; a < k; ++a) g = std::gcd(g, S[static_cast<std::size_t>(idx[a])]);
        m.flat(off) = F(g);
    }
    return m;
}

} // namespace meetdet
