/**
 * Finite racks: operation tables, axiom checks, standard families, orbits
 * and automorphisms.
 *
 * A rack is a set R with a binary operation (a, b) -> a^b such that every
 * map a -> a^b is a bijection and (a^b)^c = (a^c)^(b^c). Elements are the
 * integers 0, ..., n-1.
 */
#ifndef RACKHOM_RACK_HPP
#define RACKHOM_RACK_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rackhom {

using Element = std::uint32_t;

/// Malformed input text (rack, chain, diagram or labelling files).
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input that parses but violates a mathematical requirement.
class DomainError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A resource guard was exceeded.
class GuardError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// One failed axiom instance. Unused coordinates are zero.
struct AxiomViolation
{
    enum class Kind { NotBijective, RackIdentity };
    Kind kind;
    Element a = 0;
    Element b = 0;
    Element c = 0;

    std::string describe() const
    {
        std::ostringstream out;
        if (kind == Kind::NotBijective)
            out << "column " << b << " is not a bijection (" << a << "^" << b << " = " << c
                << " repeats)";
        else
            out << "rack identity fails at (a,b,c) = (" << a << "," << b << "," << c << ")";
        return out.str();
    }

    bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport
{
    bool is_rack = false;
    bool is_quandle = false;
    bool is_involutory = false;
    std::vector<AxiomViolation> violations;
};

/**
 * Checks a raw n x n operation table (row a, column b holds a^b).
 *
 * The check is exhaustive over all pairs and triples. Quandle and
 * involutory flags are only reported true for tables that are racks.
 */
inline AxiomReport validate_axioms(std::size_t n, const std::vector<Element>& table)
{
    if (table.size() != n * n)
        throw std::invalid_argument("operation table has wrong shape");
    AxiomReport report;
    for (Element x : table)
    {
        if (x >= n)
            throw std::invalid_argument("operation table entry out of range");
    }
    auto op = [&](Element a, Element b) { return table[a * n + b]; };

    for (Element b = 0; b < n; ++b)
    {
        std::vector<int> seen(n, -1);
        for (Element a = 0; a < n; ++a)
        {
            Element img = op(a, b);
            if (seen[img] >= 0)
                report.violations.push_back({AxiomViolation::Kind::NotBijective, a, b, img});
            seen[img] = static_cast<int>(a);
        }
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                    report.violations.push_back({AxiomViolation::Kind::RackIdentity, a, b, c});

    report.is_rack = report.violations.empty();
    if (report.is_rack)
    {
        report.is_quandle = true;
        report.is_involutory = true;
        for (Element a = 0; a < n; ++a)
        {
            if (op(a, a) != a)
                report.is_quandle = false;
            for (Element b = 0; b < n; ++b)
                if (op(op(a, b), b) != a)
                    report.is_involutory = false;
        }
    }
    return report;
}

/**
 * An immutable, validated finite rack.
 *
 * Copies share the underlying table, so passing racks by value is cheap.
 * Two racks compare equal when their tables are equal; the name is a label
 * only.
 */
class Rack
{
public:
    /// Builds a rack from a row-major table, throwing DomainError on any
    /// axiom violation.
    static Rack from_table(std::size_t n, std::vector<Element> table, std::string name = {})
    {
        if (n == 0)
            throw DomainError("a rack must have at least one element");
        AxiomReport report = validate_axioms(n, table);
        if (!report.is_rack)
            throw DomainError("not a rack: " + report.violations.front().describe());

        auto data = std::make_shared<Data>();
        data->size = n;
        data->table = std::move(table);
        data->inverse.assign(n * n, 0);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                data->inverse[data->table[a * n + b] * n + b] = a;
        data->name = std::move(name);
        data->report = std::move(report);
        return Rack(std::move(data));
    }

    std::size_t size() const { return data_->size; }
    const std::string& name() const { return data_->name; }
    const std::vector<Element>& table() const { return data_->table; }

    /// a^b
    Element operate(Element a, Element b) const { return data_->table[a * data_->size + b]; }

    /// The unique c with c^b = a.
    Element inverse_operate(Element a, Element b) const
    {
        return data_->inverse[a * data_->size + b];
    }

    bool is_quandle() const { return data_->report.is_quandle; }
    bool is_involutory() const { return data_->report.is_involutory; }
    const AxiomReport& report() const { return data_->report; }

    bool operator==(const Rack& other) const
    {
        return data_ == other.data_ || data_->table == other.data_->table;
    }

    /// Exact content key, usable for caching.
    std::string content_key() const
    {
        std::string key = std::to_string(size()) + ":";
        for (Element x : table())
            key += std::to_string(x) + ",";
        return key;
    }

private:
    struct Data
    {
        std::size_t size = 0;
        std::vector<Element> table;
        std::vector<Element> inverse;
        std::string name;
        AxiomReport report;
    };

    explicit Rack(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

inline Element inverse_operate(const Rack& r, Element a, Element b)
{
    return r.inverse_operate(a, b);
}

/// a^b = 2b - a mod n. n = 3 is the three-colour rack.
inline Rack dihedral_rack(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("dihedral_rack: n must be positive");
    std::vector<Element> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = static_cast<Element>((2 * b + n - a) % n);
    return Rack::from_table(n, std::move(t), "dihedral:" + std::to_string(n));
}

/// a^b = a.
inline Rack trivial_rack(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("trivial_rack: n must be positive");
    std::vector<Element> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a * n + b] = static_cast<Element>(a);
    return Rack::from_table(n, std::move(t), "trivial:" + std::to_string(n));
}

namespace detail {

inline std::vector<std::string_view> content_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size())
    {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#')
            lines.push_back(line);
        pos = end + 1;
    }
    return lines;
}

inline std::vector<std::string> split_words(std::string_view line)
{
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

inline long long parse_integer(const std::string& word, const std::string& what)
{
    std::size_t used = 0;
    long long value = 0;
    try
    {
        value = std::stoll(word, &used);
    }
    catch (const std::exception&)
    {
        throw ParseError("expected integer for " + what + ", got '" + word + "'");
    }
    if (used != word.size())
        throw ParseError("expected integer for " + what + ", got '" + word + "'");
    return value;
}

}   // namespace detail

struct RackTable
{
    std::size_t size = 0;
    std::vector<Element> table;
};

/// Syntax-only reading of a rack file; the table may still fail the axioms.
inline RackTable parse_rack_table(std::string_view text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("rack file is empty");
    auto head = detail::split_words(lines[0]);
    if (head.size() != 1)
        throw ParseError("first line must hold the rack size only");
    long long n = detail::parse_integer(head[0], "rack size");
    if (n <= 0)
        throw ParseError("rack size must be positive");
    if (lines.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("expected " + std::to_string(n) + " table rows, found " +
                         std::to_string(lines.size() - 1));
    RackTable out;
    out.size = static_cast<std::size_t>(n);
    out.table.reserve(out.size * out.size);
    for (long long a = 0; a < n; ++a)
    {
        auto row = detail::split_words(lines[a + 1]);
        if (row.size() != out.size)
            throw ParseError("row " + std::to_string(a) + " must hold " + std::to_string(n) +
                             " entries");
        for (const auto& w : row)
        {
            long long v = detail::parse_integer(w, "table entry");
            if (v < 0 || v >= n)
                throw ParseError("entry " + w + " in row " + std::to_string(a) + " out of range");
            out.table.push_back(static_cast<Element>(v));
        }
    }
    return out;
}

/**
 * Parses the rack file format: '#' comment lines, then n, then n rows of n
 * integers with row a column b holding a^b. Throws ParseError for syntax
 * problems and DomainError when the table is not a rack.
 */
inline Rack parse_rack(std::string_view text, std::string name = {})
{
    RackTable t = parse_rack_table(text);
    return Rack::from_table(t.size, std::move(t.table), std::move(name));
}

inline std::string format_rack(const Rack& r)
{
    std::ostringstream out;
    if (!r.name().empty())
        out << "# " << r.name() << "\n";
    out << r.size() << "\n";
    for (Element a = 0; a < r.size(); ++a)
    {
        for (Element b = 0; b < r.size(); ++b)
            out << (b ? " " : "") << r.operate(a, b);
        out << "\n";
    }
    return out.str();
}

/// Orbits of the operator group, each sorted, ordered by least element.
inline std::vector<std::vector<Element>> orbits(const Rack& r)
{
    const std::size_t n = r.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
        {
            auto x = find(a), y = find(r.operate(a, b));
            if (x != y)
                parent[std::max(x, y)] = std::min(x, y);
        }
    std::vector<std::vector<Element>> out;
    std::vector<long> slot(n, -1);
    for (Element a = 0; a < n; ++a)
    {
        auto root = find(a);
        if (slot[root] < 0)
        {
            slot[root] = static_cast<long>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[root])].push_back(a);
    }
    return out;
}

/// A bijection of the rack's elements, stored as its image list.
class RackPermutation
{
public:
    RackPermutation() = default;
    explicit RackPermutation(std::vector<Element> images) : images_(std::move(images))
    {
        std::vector<bool> hit(images_.size(), false);
        for (Element x : images_)
        {
            if (x >= images_.size() || hit[x])
                throw std::invalid_argument("RackPermutation: not a bijection");
            hit[x] = true;
        }
    }

    static RackPermutation identity(std::size_t n)
    {
        std::vector<Element> v(n);
        std::iota(v.begin(), v.end(), Element{0});
        return RackPermutation(std::move(v));
    }

    std::size_t size() const { return images_.size(); }
    Element operator()(Element x) const { return images_[x]; }
    const std::vector<Element>& images() const { return images_; }

    /// (this o other)(x) = this(other(x))
    RackPermutation compose(const RackPermutation& other) const
    {
        std::vector<Element> v(size());
        for (Element x = 0; x < size(); ++x)
            v[x] = images_[other(x)];
        return RackPermutation(std::move(v));
    }

    RackPermutation inverse() const
    {
        std::vector<Element> v(size());
        for (Element x = 0; x < size(); ++x)
            v[images_[x]] = x;
        return RackPermutation(std::move(v));
    }

    bool is_automorphism_of(const Rack& r) const
    {
        if (size() != r.size())
            return false;
        for (Element a = 0; a < size(); ++a)
            for (Element b = 0; b < size(); ++b)
                if (images_[r.operate(a, b)] != r.operate(images_[a], images_[b]))
                    return false;
        return true;
    }

    auto operator<=>(const RackPermutation&) const = default;

private:
    std::vector<Element> images_;
};

/// All automorphisms in lexicographic order of their image lists. Brute
/// force over n! candidates, so guarded by max_size.
inline std::vector<RackPermutation> automorphisms(const Rack& r, std::size_t max_size = 8)
{
    if (r.size() > max_size)
        throw GuardError("automorphism search limited to racks of size <= " +
                         std::to_string(max_size));
    std::vector<Element> p(r.size());
    std::iota(p.begin(), p.end(), Element{0});
    std::vector<RackPermutation> out;
    do
    {
        RackPermutation sigma(p);
        if (sigma.is_automorphism_of(r))
            out.push_back(std::move(sigma));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}   // namespace rackhom

#endif
