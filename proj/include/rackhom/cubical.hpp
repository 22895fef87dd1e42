/**
 * Cubical structure of the rack space BR and the extended rack space B_R R.
 *
 * The n-cubes of BR are the tuples (x_1, ..., x_n) over the rack, with
 *
 *     d_i^0(x) = (x_1, ..., x_{i-1}, x_{i+1}, ..., x_n)
 *     d_i^1(x) = (x_1^{x_i}, ..., x_{i-1}^{x_i}, x_{i+1}, ..., x_n)
 *
 * An n-cube of B_R R is an (n+1)-tuple (x_0, x_1, ..., x_n); its face d_i is
 * the BR face d_{i+1} of the longer tuple, so position 0 is acted on but is
 * never a face direction. The boundary operator is
 *
 *     d(x) = sum_i (-1)^i (d_i^1 x - d_i^0 x),
 *
 * on the free abelian group on all cubes (no degenerate quotient).
 */
#ifndef RACKHOM_CUBICAL_HPP
#define RACKHOM_CUBICAL_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "rack.hpp"

namespace rackhom {

enum class SpaceKind { RackSpace, ExtendedRackSpace };

inline const char* kind_tag(SpaceKind kind)
{
    return kind == SpaceKind::RackSpace ? "BR" : "BRR";
}

/// Tuple length used to store an n-cube.
inline std::size_t cube_length(std::size_t dim, SpaceKind kind)
{
    return kind == SpaceKind::RackSpace ? dim : dim + 1;
}

using Cube = std::vector<Element>;
using Coefficient = std::int64_t;

/// Face d_i^eps of an n-cube, 1 <= i <= n.
inline Cube face(const Rack& r, SpaceKind kind, const Cube& cube, std::size_t i, int eps)
{
    const std::size_t shift = kind == SpaceKind::RackSpace ? 0 : 1;
    const std::size_t dim = cube.size() - shift;
    if (cube.size() < shift || i < 1 || i > dim)
        throw std::out_of_range("face index out of range");
    if (eps != 0 && eps != 1)
        throw std::invalid_argument("face: eps must be 0 or 1");
    const std::size_t pos = i - 1 + shift;
    const Element acting = cube[pos];
    Cube out;
    out.reserve(cube.size() - 1);
    for (std::size_t k = 0; k < pos; ++k)
        out.push_back(eps ? r.operate(cube[k], acting) : cube[k]);
    for (std::size_t k = pos + 1; k < cube.size(); ++k)
        out.push_back(cube[k]);
    return out;
}

/// Number of n-cubes.
inline std::size_t cube_count(const Rack& r, std::size_t dim, SpaceKind kind)
{
    std::size_t count = 1;
    for (std::size_t k = 0; k < cube_length(dim, kind); ++k)
        count *= r.size();
    return count;
}

/// Position of a tuple in the lexicographic enumeration.
inline std::size_t cube_index(const Rack& r, const Cube& cube)
{
    std::size_t idx = 0;
    for (Element x : cube)
        idx = idx * r.size() + x;
    return idx;
}

inline Cube cube_at(const Rack& r, std::size_t length, std::size_t index)
{
    Cube cube(length);
    for (std::size_t k = length; k-- > 0;)
    {
        cube[k] = static_cast<Element>(index % r.size());
        index /= r.size();
    }
    return cube;
}

/// Dense row-major integer matrix.
template <typename T>
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const
    {
        for (const T& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    template <typename U>
    Matrix<U> cast() const
    {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(i, j) = U((*this)(i, j));
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/**
 * Matrix of d_n : C_n -> C_{n-1}, one column per n-cube and one row per
 * (n-1)-cube, both in lexicographic order. d_0 is the 0 x |C_0| matrix.
 */
inline Matrix<Coefficient> boundary_matrix(const Rack& r, std::size_t n, SpaceKind kind)
{
    const std::size_t ncols = cube_count(r, n, kind);
    if (n == 0)
        return Matrix<Coefficient>(0, ncols);
    const std::size_t nrows = cube_count(r, n - 1, kind);
    const std::size_t len = cube_length(n, kind);
    Matrix<Coefficient> m(nrows, ncols);
    for (std::size_t col = 0; col < ncols; ++col)
    {
        Cube x = cube_at(r, len, col);
        for (std::size_t i = 1; i <= n; ++i)
        {
            const Coefficient sign = (i % 2) ? -1 : 1;
            m(cube_index(r, face(r, kind, x, i, 1)), col) += sign;
            m(cube_index(r, face(r, kind, x, i, 0)), col) -= sign;
        }
    }
    return m;
}

/**
 * A finitely supported integer combination of n-cubes of one space.
 *
 * Terms are kept in lexicographic cube order with no zero coefficients, so
 * equal chains compare equal and print identically.
 */
class Chain
{
public:
    Chain(Rack rack, SpaceKind kind, std::size_t dim)
        : rack_(std::move(rack)), kind_(kind), dim_(dim)
    {
    }

    const Rack& rack() const { return rack_; }
    SpaceKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const std::map<Cube, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coefficient coefficient(const Cube& cube) const
    {
        auto it = terms_.find(cube);
        return it == terms_.end() ? 0 : it->second;
    }

    Chain& add(const Cube& cube, Coefficient k)
    {
        if (cube.size() != cube_length(dim_, kind_))
            throw std::invalid_argument("cube length does not match chain dimension");
        for (Element x : cube)
            if (x >= rack_.size())
                throw std::invalid_argument("cube entry outside the rack");
        if (k == 0)
            return *this;
        auto [it, inserted] = terms_.try_emplace(cube, k);
        if (!inserted && (it->second += k) == 0)
            terms_.erase(it);
        return *this;
    }

    bool compatible(const Chain& other) const
    {
        return kind_ == other.kind_ && dim_ == other.dim_ && rack_ == other.rack_;
    }

    Chain& operator+=(const Chain& other)
    {
        require_compatible(other);
        for (const auto& [cube, k] : other.terms_)
            add(cube, k);
        return *this;
    }

    Chain& operator-=(const Chain& other)
    {
        require_compatible(other);
        for (const auto& [cube, k] : other.terms_)
            add(cube, -k);
        return *this;
    }

    Chain operator-() const
    {
        Chain out(rack_, kind_, dim_);
        for (const auto& [cube, k] : terms_)
            out.terms_.emplace(cube, -k);
        return out;
    }

    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

    friend Chain operator*(Coefficient s, const Chain& c)
    {
        Chain out(c.rack_, c.kind_, c.dim_);
        if (s != 0)
            for (const auto& [cube, k] : c.terms_)
                out.terms_.emplace(cube, s * k);
        return out;
    }

    bool operator==(const Chain& other) const
    {
        return compatible(other) && terms_ == other.terms_;
    }

    /// Coefficient vector indexed by lexicographic cube position.
    std::vector<Coefficient> to_vector() const
    {
        std::vector<Coefficient> v(cube_count(rack_, dim_, kind_), 0);
        for (const auto& [cube, k] : terms_)
            v[cube_index(rack_, cube)] = k;
        return v;
    }

    /// Terms like "-(012) +(121)"; multi-digit entries are comma separated.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        const bool wide = rack_.size() > 10;
        std::string out;
        for (const auto& [cube, k] : terms_)
        {
            if (!out.empty())
                out += ' ';
            out += k < 0 ? "-" : "+";
            if (k != 1 && k != -1)
                out += std::to_string(k < 0 ? -k : k);
            out += '(';
            for (std::size_t p = 0; p < cube.size(); ++p)
            {
                if (wide && p)
                    out += ',';
                out += std::to_string(cube[p]);
            }
            out += ')';
        }
        return out;
    }

private:
    void require_compatible(const Chain& other) const
    {
        if (!compatible(other))
            throw DomainError("chains live in different spaces, racks or dimensions");
    }

    Rack rack_;
    SpaceKind kind_;
    std::size_t dim_;
    std::map<Cube, Coefficient> terms_;
};

inline std::ostream& operator<<(std::ostream& out, const Chain& c)
{
    return out << c.to_string();
}

/// Builds a chain from compact terms such as "-012 +202 -122"; entries are
/// single decimal digits. Meant for small racks and fixtures.
inline Chain chain_from_terms(const Rack& r, SpaceKind kind, std::string_view terms)
{
    std::vector<std::pair<Cube, Coefficient>> parsed;
    for (const auto& word : detail::split_words(terms))
    {
        if (word.size() < 2 || (word[0] != '+' && word[0] != '-'))
            throw ParseError("bad chain term '" + word + "'");
        Cube cube;
        for (std::size_t k = 1; k < word.size(); ++k)
        {
            if (word[k] < '0' || word[k] > '9')
                throw ParseError("bad chain term '" + word + "'");
            cube.push_back(static_cast<Element>(word[k] - '0'));
        }
        parsed.emplace_back(std::move(cube), word[0] == '-' ? -1 : 1);
    }
    if (parsed.empty())
        throw ParseError("chain_from_terms needs at least one term");
    const std::size_t len = parsed.front().first.size();
    const std::size_t shift = kind == SpaceKind::RackSpace ? 0 : 1;
    if (len < shift)
        throw ParseError("extended cubes need at least one entry");
    Chain c(r, kind, len - shift);
    for (const auto& [cube, k] : parsed)
        c.add(cube, k);
    return c;
}

inline Chain boundary_of_chain(const Chain& c)
{
    if (c.dim() == 0)
        throw DomainError("boundary of a 0-chain is not defined here");
    Chain out(c.rack(), c.kind(), c.dim() - 1);
    for (const auto& [cube, k] : c.terms())
        for (std::size_t i = 1; i <= c.dim(); ++i)
        {
            const Coefficient sign = (i % 2) ? -k : k;
            out.add(face(c.rack(), c.kind(), cube, i, 1), sign);
            out.add(face(c.rack(), c.kind(), cube, i, 0), -sign);
        }
    return out;
}

/// Zero chains and chains of dimension 0 are cycles.
inline bool is_cycle(const Chain& c)
{
    return c.dim() == 0 || boundary_of_chain(c).is_zero();
}

/// Applies an automorphism entrywise, position 0 included.
inline Chain permute_chain(const RackPermutation& sigma, const Chain& c)
{
    if (!sigma.is_automorphism_of(c.rack()))
        throw DomainError("permutation is not an automorphism of the chain's rack");
    Chain out(c.rack(), c.kind(), c.dim());
    for (const auto& [cube, k] : c.terms())
    {
        Cube image(cube.size());
        for (std::size_t p = 0; p < cube.size(); ++p)
            image[p] = sigma(cube[p]);
        out.add(image, k);
    }
    return out;
}

/// Orientation reversal of a 3-chain in BR: k(a,b,c) -> -k(a^{bc}, b^c, c).
inline Chain reverse_orientation_3(const Chain& c)
{
    if (c.dim() != 3 || c.kind() != SpaceKind::RackSpace)
        throw DomainError("orientation reversal applies to 3-chains of BR");
    const Rack& r = c.rack();
    Chain out(r, c.kind(), 3);
    for (const auto& [cube, k] : c.terms())
    {
        const Element a = cube[0], b = cube[1], z = cube[2];
        out.add({r.operate(r.operate(a, b), z), r.operate(b, z), z}, -k);
    }
    return out;
}

/// Image under the projection onto the one-point rack space: the sum of the
/// coefficients.
inline Coefficient collapse_to_point(const Chain& c)
{
    Coefficient sum = 0;
    for (const auto& [cube, k] : c.terms())
        sum += k;
    return sum;
}

}   // namespace rackhom

#endif
