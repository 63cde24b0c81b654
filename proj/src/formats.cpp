#include "meetdet/formats.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace meetdet {

namespace {

// Strips comments/blank lines and tracks 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            std::string s = raw;
            if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
            const auto begin = s.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            const auto end = s.find_last_not_of(" \t\r");
            out = s.substr(begin, end - begin + 1);
            return true;
        }
        return false;
    }

    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

long parse_long(const std::string& tok, std::size_t line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, found '" + tok + "'", line);
    }
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return in;
}

} // namespace

// ---------------------------------------------------------------------------
// Poset files

Poset parse_poset(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty poset file", reader.line());
    std::istringstream head(line);
    std::string word;
    long n = 0;
    head >> word;
    if (word != "poset" || !(head >> n) || n < 0)
        throw ParseError("expected 'poset <n>'", reader.line());
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = std::to_string(i);
    std::vector<std::pair<int, int>> covers;
    while (reader.next(line)) {
        std::istringstream ls(line);
        ls >> word;
        if (word == "label") {
            std::string idx_tok, name;
            if (!(ls >> idx_tok >> name))
                throw ParseError("expected 'label <index> <string>'", reader.line());
            const long idx = parse_long(idx_tok, reader.line());
            if (idx < 0 || idx >= n) throw ParseError("label index out of range", reader.line());
            labels[static_cast<std::size_t>(idx)] = name;
        } else if (word == "cover") {
            std::string a_tok, b_tok;
            if (!(ls >> a_tok >> b_tok))
                throw ParseError("expected 'cover <a> <b>'", reader.line());
            const long a = parse_long(a_tok, reader.line());
            const long b = parse_long(b_tok, reader.line());
            covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
        } else {
            throw ParseError("unknown directive '" + word + "'", reader.line());
        }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw ParseError("duplicate label '" + labels[i] + "'");
    try {
        return Poset::from_covers(static_cast<int>(n), covers, std::move(labels));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Poset load_poset_file(const std::string& path) {
    auto in = open_file(path);
    try {
        return parse_poset(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what());
    }
}

std::string poset_text(const Poset& p) {
    std::string out = "poset " + std::to_string(p.n()) + "\n";
    for (int i = 0; i < p.n(); ++i)
        if (p.label(i) != std::to_string(i))
            out += "label " + std::to_string(i) + " " + p.label(i) + "\n";
    for (const auto& [a, b] : p.cover_pairs())
        out += "cover " + std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Hypermatrix files

Hypermatrix parse_hypermatrix(std::istream& in) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty hypermatrix file", reader.line());
    std::istringstream head(line);
    std::string word;
    long n = 0, k = 0;
    head >> word;
    if (word != "hypermatrix" || !(head >> n >> k))
        throw ParseError("expected 'hypermatrix <n> <k>'", reader.line());
    if (n < 1 || k < 2) throw ParseError("need n >= 1 and k >= 2", reader.line());
    std::uint64_t count = 1;
    for (long i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(n);
    std::vector<Scalar> entries;
    entries.reserve(count);
    while (reader.next(line)) {
        try {
            entries.push_back(Scalar::parse(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), reader.line());
        }
    }
    if (entries.size() != count)
        throw ParseError("expected " + std::to_string(count) + " entries, found " +
                         std::to_string(entries.size()));
    return Hypermatrix::from_entries(static_cast<int>(n), static_cast<int>(k),
                                     std::move(entries));
}

Hypermatrix load_hypermatrix_file(const std::string& path) {
    auto in = open_file(path);
    try {
        return parse_hypermatrix(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what());
    }
}

std::string hypermatrix_text(const Hypermatrix& m) {
    std::string out = "hypermatrix " + std::to_string(m.n()) + " " + std::to_string(m.k()) + "\n";
    for (std::uint64_t off = 0; off < m.size(); ++off) out += m.flat(off).str() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// FMap table files

FMap parse_fmap_table(std::istream& in, int arity, int n) {
    LineReader reader(in);
    std::string line;
    FMap::Table_t entries;
    Scalar default_value(0);
    bool saw_default = false;
    while (reader.next(line)) {
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("expected '... -> <scalar>'", reader.line());
        std::string lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        Scalar value;
        try {
            value = Scalar::parse(rhs);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), reader.line());
        }
        // trim lhs
        const auto b = lhs.find_first_not_of(" \t");
        const auto e = lhs.find_last_not_of(" \t");
        lhs = b == std::string::npos ? "" : lhs.substr(b, e - b + 1);
        if (lhs == "default") {
            if (saw_default) throw ParseError("duplicate default line", reader.line());
            default_value = value;
            saw_default = true;
            continue;
        }
        std::vector<Permutation> key;
        std::stringstream parts(lhs);
        std::string part;
        while (std::getline(parts, part, ';')) {
            try {
                key.push_back(Permutation::parse_one_line(part));
            } catch (const ParseError& pe) {
                throw ParseError(pe.what(), reader.line());
            }
            if (key.back().n() != n)
                throw ParseError("permutation of " + std::to_string(key.back().n()) +
                                 " symbols where " + std::to_string(n) + " are needed",
                                 reader.line());
        }
        if (static_cast<int>(key.size()) != arity)
            throw ParseError("tuple of " + std::to_string(key.size()) + " permutations where " +
                             std::to_string(arity) + " are needed",
                             reader.line());
        if (!entries.emplace(std::move(key), value).second)
            throw ParseError("duplicate tuple", reader.line());
    }
    return FMap::table(arity, std::move(entries), std::move(default_value));
}

FMap load_fmap_table_file(const std::string& path, int arity, int n) {
    auto in = open_file(path);
    try {
        return parse_fmap_table(in, arity, n);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what());
    }
}

std::string fmap_table_text(const FMap& f) {
    if (f.type() != FMap::Type::Table)
        throw PreconditionError("only table maps serialize to table files");
    std::string out;
    for (const auto& [key, value] : f.entries()) {
        std::string lhs;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) lhs += ";";
            lhs += key[i].one_line();
        }
        out += lhs + " -> " + value.str() + "\n";
    }
    out += "default -> " + f.default_value().str() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Grounded-function files

GroundedFunction parse_gf(std::istream& in,
                          const std::function<Poset(const std::string&)>& load_poset) {
    LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty grounded-function file", reader.line());
    std::istringstream head(line);
    std::string word, poset_ref;
    long count = 0;
    head >> word;
    if (word != "gf" || !(head >> poset_ref >> count) || count < 1)
        throw ParseError("expected 'gf <poset-file> <n>'", reader.line());
    Poset p = load_poset(poset_ref);
    auto lattice = std::make_shared<MeetSemilattice>(MeetSemilattice::from_poset(std::move(p)));
    const Poset& poset = lattice->poset();

    auto resolve = [&](const std::string& label, std::size_t line_no) {
        const int idx = poset.index_of_label(label);
        if (idx < 0) throw ParseError("unknown element label '" + label + "'", line_no);
        return idx;
    };

    std::vector<int> X, z_of;
    std::vector<std::vector<Scalar>> F;
    bool symbolic = false;
    std::vector<std::vector<char>> set_mask;
    while (reader.next(line)) {
        std::istringstream ls(line);
        ls >> word;
        if (word == "z") {
            std::string xs, zs;
            if (!(ls >> xs >> zs)) throw ParseError("expected 'z <x> <z>'", reader.line());
            const int x = resolve(xs, reader.line());
            const int z = resolve(zs, reader.line());
            if (!poset.leq(z, x))
                throw ParseError("grounding " + zs + " is not below " + xs, reader.line());
            X.push_back(x);
            z_of.push_back(z);
            F.emplace_back(poset.n(), Scalar(0));
            set_mask.emplace_back(poset.n(), 0);
        } else if (word == "F") {
            std::string xs, zs;
            if (!(ls >> xs >> zs)) throw ParseError("expected 'F <x> <z> <scalar>'", reader.line());
            std::string rest;
            std::getline(ls, rest);
            const int x = resolve(xs, reader.line());
            const int z = resolve(zs, reader.line());
            if (!poset.leq(z, x))
                throw ParseError("F value at " + zs + " which is not below " + xs, reader.line());
            const auto it = std::find(X.begin(), X.end(), x);
            if (it == X.end())
                throw ParseError("F line for " + xs + " before its z line", reader.line());
            const auto row = static_cast<std::size_t>(it - X.begin());
            try {
                F[row][static_cast<std::size_t>(z)] = Scalar::parse(rest);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), reader.line());
            }
            set_mask[row][static_cast<std::size_t>(z)] = 1;
        } else if (word == "symbolic") {
            symbolic = true;
        } else {
            throw ParseError("unknown directive '" + word + "'", reader.line());
        }
    }
    if (static_cast<long>(X.size()) != count)
        throw ParseError("header says " + std::to_string(count) + " index elements, found " +
                         std::to_string(X.size()) + " z lines");
    if (symbolic) {
        for (std::size_t i = 0; i < X.size(); ++i)
            for (int z = 0; z < poset.n(); ++z)
                if (poset.leq(z, X[i]) && !set_mask[i][static_cast<std::size_t>(z)])
                    F[i][static_cast<std::size_t>(z)] = Scalar::variable(
                        "F" + poset.label(X[i]) + "(" + poset.label(z) + ")");
    }
    try {
        return GroundedFunction::make(std::move(lattice), std::move(X), std::move(z_of),
                                      std::move(F));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

GroundedFunction load_gf_file(const std::string& path) {
    auto in = open_file(path);
    const auto dir = std::filesystem::path(path).parent_path();
    try {
        return parse_gf(in, [&](const std::string& ref) {
            const std::filesystem::path ref_path(ref);
            const auto resolved = ref_path.is_absolute() ? ref_path : dir / ref_path;
            return load_poset_file(resolved.string());
        });
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + e.what());
    }
}

std::string gf_text(const GroundedFunction& gf, const std::string& poset_ref) {
    const Poset& p = gf.lattice->poset();
    std::string out = "gf " + poset_ref + " " + std::to_string(gf.size()) + "\n";
    for (int i = 0; i < gf.size(); ++i)
        out += "z " + p.label(gf.X[i]) + " " + p.label(gf.z_of[i]) + "\n";
    for (int i = 0; i < gf.size(); ++i)
        for (int z = 0; z < p.n(); ++z)
            if (!gf.F[i][static_cast<std::size_t>(z)].is_zero())
                out += "F " + p.label(gf.X[i]) + " " + p.label(z) + " " +
                       gf.F[i][static_cast<std::size_t>(z)].str() + "\n";
    return out;
}

std::vector<int> parse_subset(const Poset& p, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty element in subset list");
        tok = tok.substr(b, e - b + 1);
        int idx = p.index_of_label(tok);
        if (idx < 0) {
            try {
                idx = std::stoi(tok);
            } catch (const std::exception&) {
                throw ParseError("unknown element '" + tok + "'");
            }
            if (idx < 0 || idx >= p.n()) throw ParseError("index " + tok + " out of range");
        }
        out.push_back(idx);
    }
    if (out.empty()) throw ParseError("empty subset list");
    return out;
}

// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::string_view text) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
    return os.str();
}

} // namespace meetdet
