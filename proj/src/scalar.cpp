#include "meetdet/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace meetdet {

unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    return d;
}

int monomial_compare(const Monomial& a, const Monomial& b) {
    const unsigned da = monomial_degree(a);
    const unsigned db = monomial_degree(b);
    if (da != db) return da > db ? 1 : -1;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The monomial holding the alphabetically smaller name has a
            // positive exponent where the other has zero.
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    if (ia == a.end() && ib == b.end()) return 0;
    return ia != a.end() ? 1 : -1; // unreachable for equal degrees
}

bool is_valid_indeterminate_name(std::string_view name) {
    if (name.empty()) return false;
    const char c0 = name.front();
    if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
    for (char c : name.substr(1)) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')'))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rat& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
    if (!is_valid_indeterminate_name(name))
        throw PreconditionError("invalid indeterminate name: '" + name + "'");
    Polynomial p;
    p.terms_.emplace(Monomial{{name, 1u}}, Rat(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, Rat(-c));
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, Rat(-c));
    return r;
}

static Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [name, e] : b) r[name] += e;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), Rat(ca * cb));
    return r;
}

// Does mb divide ma? If so fill q with the quotient monomial.
static bool monomial_div(const Monomial& ma, const Monomial& mb, Monomial& q) {
    q.clear();
    for (const auto& [name, e] : ma) q[name] = e;
    for (const auto& [name, e] : mb) {
        auto it = q.find(name);
        if (it == q.end() || it->second < e) return false;
        if (it->second == e)
            q.erase(it);
        else
            it->second -= e;
    }
    return true;
}

Polynomial Polynomial::exact_div(const Polynomial& b) const {
    if (b.is_zero()) throw DivisionByZero();
    Polynomial q;
    Polynomial r = *this;
    // Graded-lex is a monomial order, so leading-term elimination terminates;
    // any failure to divide a leading term means the quotient does not exist.
    const auto& lb = *b.terms_.begin();
    while (!r.is_zero()) {
        const auto& lr = *r.terms_.begin();
        Monomial qm;
        if (!monomial_div(lr.first, lb.first, qm))
            throw DivisionNotExact("polynomial remainder is nonzero");
        Polynomial t;
        t.terms_.emplace(qm, Rat(lr.second / lb.second));
        q = q + t;
        r = r - t * b;
    }
    return q;
}

static std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rat a = neg ? Rat(-c) : c;
        std::string factors;
        for (const auto& [name, e] : m) {
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += rat_str(a);
        } else if (a == 1) {
            out += factors;
        } else {
            out += rat_str(a) + "*" + factors;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Rat v) : v_(std::move(v)) {
    std::get<Rat>(v_).canonicalize();
}

Scalar Scalar::rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rat r(num, den);
    r.canonicalize();
    return Scalar(r);
}

Scalar Scalar::variable(const std::string& name) {
    return Scalar(Polynomial::variable(name));
}

bool Scalar::is_zero() const {
    switch (kind()) {
        case Kind::Integer: return as_int() == 0;
        case Kind::Rational: return as_rat() == 0;
        case Kind::Polynomial: return as_poly().is_zero();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (kind()) {
        case Kind::Integer: return as_int() == 1;
        case Kind::Rational: return as_rat() == 1;
        case Kind::Polynomial:
            return as_poly().is_constant() && as_poly().constant_value() == 1;
    }
    return false;
}

static Rat to_rat(const Scalar& s) {
    return s.kind() == Scalar::Kind::Integer ? Rat(s.as_int()) : s.as_rat();
}

static Polynomial to_poly(const Scalar& s) {
    if (s.kind() == Scalar::Kind::Polynomial) return s.as_poly();
    return Polynomial(to_rat(s));
}

template <typename IntOp, typename RatOp, typename PolyOp>
static Scalar binop(const Scalar& a, const Scalar& b, IntOp iop, RatOp rop, PolyOp pop) {
    const auto ka = a.kind();
    const auto kb = b.kind();
    if (ka == Scalar::Kind::Polynomial || kb == Scalar::Kind::Polynomial)
        return Scalar(pop(to_poly(a), to_poly(b)));
    if (ka == Scalar::Kind::Rational || kb == Scalar::Kind::Rational) {
        Rat r = rop(to_rat(a), to_rat(b));
        r.canonicalize();
        return Scalar(r);
    }
    return Scalar(Int(iop(a.as_int(), b.as_int())));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binop(
        a, b, [](const Int& x, const Int& y) { return Int(x + y); },
        [](const Rat& x, const Rat& y) { return Rat(x + y); },
        [](const Polynomial& x, const Polynomial& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binop(
        a, b, [](const Int& x, const Int& y) { return Int(x - y); },
        [](const Rat& x, const Rat& y) { return Rat(x - y); },
        [](const Polynomial& x, const Polynomial& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binop(
        a, b, [](const Int& x, const Int& y) { return Int(x * y); },
        [](const Rat& x, const Rat& y) { return Rat(x * y); },
        [](const Polynomial& x, const Polynomial& y) { return x * y; });
}

Scalar Scalar::operator-() const {
    switch (kind()) {
        case Kind::Integer: return Scalar(Int(-as_int()));
        case Kind::Rational: return Scalar(Rat(-as_rat()));
        case Kind::Polynomial: return Scalar(-as_poly());
    }
    return Scalar();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() == Scalar::Kind::Polynomial || b.kind() == Scalar::Kind::Polynomial)
        return to_poly(a) == to_poly(b);
    if (a.kind() == Scalar::Kind::Rational || b.kind() == Scalar::Kind::Rational)
        return to_rat(a) == to_rat(b);
    return a.as_int() == b.as_int();
}

Scalar Scalar::exact_div(const Scalar& b) const {
    if (b.is_zero()) throw DivisionByZero();
    const Kind ka = kind();
    const Kind kb = b.kind();
    if (ka == Kind::Polynomial || kb == Kind::Polynomial)
        return Scalar(to_poly(*this).exact_div(to_poly(b)));
    if (ka == Kind::Rational || kb == Kind::Rational) {
        Rat r = to_rat(*this) / to_rat(b);
        r.canonicalize();
        return Scalar(r);
    }
    if (!mpz_divisible_p(as_int().get_mpz_t(), b.as_int().get_mpz_t()))
        throw DivisionNotExact(as_int().get_str() + " / " + b.as_int().get_str() +
                               " leaves a remainder");
    Int q;
    mpz_divexact(q.get_mpz_t(), as_int().get_mpz_t(), b.as_int().get_mpz_t());
    return Scalar(q);
}

Scalar Scalar::pow(unsigned e) const {
    Scalar r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
    if (kind() != Kind::Polynomial) return *this;
    Scalar acc(0);
    for (const auto& [m, c] : as_poly().terms()) {
        Scalar term{Rat(c)};
        for (const auto& [name, e] : m) {
            auto it = bindings.find(name);
            const Scalar base = it != bindings.end() ? it->second : Scalar::variable(name);
            term *= base.pow(e);
        }
        acc += term;
    }
    return acc;
}

std::string Scalar::str() const {
    switch (kind()) {
        case Kind::Integer: return as_int().get_str();
        case Kind::Rational: return rat_str(as_rat());
        case Kind::Polynomial: return as_poly().str();
    }
    return "0";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// Parsing. Grammar (no grouping parentheses; parens only occur inside names):
//   expr   := [sign] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := nat ["/" nat] | name ["^" nat]

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    Scalar parse() {
        skip_ws();
        if (eof()) throw ParseError("empty scalar text");
        Scalar acc = Scalar(0);
        bool neg = consume_sign();
        acc += parse_term(neg);
        skip_ws();
        while (!eof()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw ParseError("unexpected character '" + std::string(1, c) + "' in scalar");
            ++pos_;
            acc += parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume_sign() {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        return false;
    }

    Scalar parse_term(bool negate) {
        Scalar v = parse_factor();
        skip_ws();
        while (!eof() && peek() == '*') {
            ++pos_;
            v *= parse_factor();
            skip_ws();
        }
        return negate ? -v : v;
    }

    Scalar parse_factor() {
        skip_ws();
        if (eof()) throw ParseError("truncated scalar text");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_symbol();
        throw ParseError("expected number or indeterminate, found '" + std::string(1, c) + "'");
    }

    std::string take_digits() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    Scalar parse_number() {
        Int num(take_digits());
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            Int den(take_digits());
            if (den == 0) throw ParseError("zero denominator");
            return Scalar::rational(num, den);
        }
        return Scalar(num);
    }

    Scalar parse_symbol() {
        std::size_t start = pos_;
        ++pos_;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == ')')
                ++pos_;
            else
                break;
        }
        std::string name(s_.substr(start, pos_ - start));
        unsigned long e = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::string digits = take_digits();
            try {
                e = std::stoul(digits);
            } catch (const std::exception&) {
                throw ParseError("exponent '" + digits + "' out of range");
            }
            if (e == 0) throw ParseError("exponent must be positive");
            if (e > 1000000) throw ParseError("exponent '" + digits + "' out of range");
        }
        return Scalar::variable(name).pow(static_cast<unsigned>(e));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

} // namespace meetdet
