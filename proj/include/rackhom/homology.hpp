/**
 * Integer homology of rack spaces with explicit class coordinates.
 *
 * H_n = ker d_n / im d_{n+1}. With U d_n V = D of rank r, the last k columns
 * of V span ker d_n and rows r.. of V^{-1} give kernel coordinates of any
 * cycle. Writing d_{n+1} in those coordinates gives a k x m relation matrix
 * A; with P A Q = diag(d_1, ..., d_s), the vector P y splits into torsion
 * coordinates (i < s, d_i > 1, read mod d_i) and free coordinates (i >= s).
 */
#ifndef RACKHOM_HOMOLOGY_HPP
#define RACKHOM_HOMOLOGY_HPP

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cubical.hpp"
#include "smith.hpp"

namespace rackhom {

struct HomologyOptions
{
    /// Largest number of (n+1)-cubes accepted.
    std::size_t max_cubes = 20000;
};

struct HomologyPresentation
{
    Rack rack;
    std::size_t dim = 0;
    SpaceKind kind = SpaceKind::RackSpace;

    std::size_t free_rank = 0;
    std::vector<Integer> torsion_factors;   ///< each >= 2, d_i | d_{i+1}

    std::size_t cycle_rank = 0;      ///< rank of ker d_n
    std::size_t boundary_rank = 0;   ///< rank of d_{n+1}

    /// Rows map a chain coefficient vector to class coordinates: first one
    /// row per torsion factor, then free_rank rows.
    IntMatrix projection;

    /// "Z^1 + Z_3", "Z^0" for the trivial group.
    std::string to_string() const
    {
        std::ostringstream out;
        if (free_rank > 0 || torsion_factors.empty())
            out << "Z^" << free_rank;
        for (std::size_t i = 0; i < torsion_factors.size(); ++i)
            out << ((free_rank > 0 || i > 0) ? " + " : "") << "Z_" << torsion_factors[i];
        return out.str();
    }
};

using PresentationPtr = std::shared_ptr<const HomologyPresentation>;

inline PresentationPtr homology(const Rack& r, std::size_t n, SpaceKind kind,
                                HomologyOptions opt = {})
{
    const std::size_t upper = cube_count(r, n + 1, kind);
    if (upper > opt.max_cubes)
        throw GuardError("homology needs " + std::to_string(upper) +
                         " cubes, above the configured bound of " +
                         std::to_string(opt.max_cubes));

    auto pres = std::make_shared<HomologyPresentation>(HomologyPresentation{r, n, kind, 0, {}, 0, 0, {}});

    const std::size_t chains = cube_count(r, n, kind);
    auto lower = smith_normal_form(boundary_matrix(r, n, kind), {false, true});
    const std::size_t rank_lower = lower.invariant_factors().size();
    const std::size_t k = chains - rank_lower;
    pres->cycle_rank = k;

    // kernel coordinates and the relation matrix in those coordinates
    IntMatrix kernel_coords(k, chains);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < chains; ++j)
            kernel_coords(i, j) = lower.V_inverse(rank_lower + i, j);
    IntMatrix relations = kernel_coords * boundary_matrix(r, n + 1, kind).cast<Integer>();

    auto upper_snf = smith_normal_form(std::move(relations), {true, false});
    auto factors = upper_snf.invariant_factors();
    pres->boundary_rank = factors.size();
    pres->free_rank = k - factors.size();

    IntMatrix full = upper_snf.U * kernel_coords;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] > 1)
        {
            rows.push_back(i);
            pres->torsion_factors.push_back(factors[i]);
        }
    for (std::size_t i = factors.size(); i < k; ++i)
        rows.push_back(i);
    pres->projection = IntMatrix(rows.size(), chains);
    for (std::size_t p = 0; p < rows.size(); ++p)
        for (std::size_t j = 0; j < chains; ++j)
            pres->projection(p, j) = full(rows[p], j);
    return pres;
}

/**
 * A homology class as coordinates in a fixed presentation.
 *
 * Torsion coordinates are normalised to [0, d_i). Classes from different
 * presentations cannot be compared or combined.
 */
class HomologyClass
{
public:
    HomologyClass(PresentationPtr pres, std::vector<Integer> free_coords,
                  std::vector<Integer> torsion_coords)
        : pres_(std::move(pres)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords))
    {
        if (free_.size() != pres_->free_rank || torsion_.size() != pres_->torsion_factors.size())
            throw std::invalid_argument("class coordinates do not fit the presentation");
        normalise();
    }

    static HomologyClass zero(PresentationPtr pres)
    {
        std::vector<Integer> f(pres->free_rank), t(pres->torsion_factors.size());
        return HomologyClass(std::move(pres), std::move(f), std::move(t));
    }

    const PresentationPtr& presentation() const { return pres_; }
    const std::vector<Integer>& free_coords() const { return free_; }
    const std::vector<Integer>& torsion_coords() const { return torsion_; }

    bool is_zero() const
    {
        for (const auto& x : free_)
            if (x != 0)
                return false;
        for (const auto& x : torsion_)
            if (x != 0)
                return false;
        return true;
    }

    /// True when the torsion coordinate i generates Z_{d_i}.
    bool generates_torsion_summand(std::size_t i) const
    {
        return gcd(torsion_.at(i), pres_->torsion_factors.at(i)) == 1;
    }

    HomologyClass operator-() const
    {
        HomologyClass out = *this;
        for (auto& x : out.free_)
            x = -x;
        for (auto& x : out.torsion_)
            x = -x;
        out.normalise();
        return out;
    }

    HomologyClass& operator+=(const HomologyClass& other)
    {
        require_same(other);
        for (std::size_t i = 0; i < free_.size(); ++i)
            free_[i] += other.free_[i];
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            torsion_[i] += other.torsion_[i];
        normalise();
        return *this;
    }

    friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
    friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a += -b; }

    bool operator==(const HomologyClass& other) const
    {
        require_same(other);
        return free_ == other.free_ && torsion_ == other.torsion_;
    }

    /// Orders classes of one presentation (free part, then torsion part).
    bool operator<(const HomologyClass& other) const
    {
        require_same(other);
        return std::tie(free_, torsion_) < std::tie(other.free_, other.torsion_);
    }

    /// "(f_1,...,f_r | t_1,...,t_k)"
    std::string to_string() const
    {
        std::ostringstream out;
        out << '(';
        for (std::size_t i = 0; i < free_.size(); ++i)
            out << (i ? "," : "") << free_[i];
        out << " | ";
        for (std::size_t i = 0; i < torsion_.size(); ++i)
            out << (i ? "," : "") << torsion_[i];
        out << ')';
        return out.str();
    }

private:
    void normalise()
    {
        for (std::size_t i = 0; i < torsion_.size(); ++i)
        {
            const Integer& d = pres_->torsion_factors[i];
            torsion_[i] %= d;
            if (torsion_[i] < 0)
                torsion_[i] += d;
        }
    }

    // Construction is deterministic, so presentations of the same space are
    // interchangeable even when built separately.
    void require_same(const HomologyClass& other) const
    {
        if (pres_ == other.pres_)
            return;
        if (pres_->dim != other.pres_->dim || pres_->kind != other.pres_->kind ||
            !(pres_->rack == other.pres_->rack))
            throw DomainError("homology classes belong to different presentations");
    }

    PresentationPtr pres_;
    std::vector<Integer> free_;
    std::vector<Integer> torsion_;
};

inline HomologyClass class_negate(const HomologyClass& c) { return -c; }
inline HomologyClass class_add(const HomologyClass& a, const HomologyClass& b) { return a + b; }
inline bool classes_equal(const HomologyClass& a, const HomologyClass& b) { return a == b; }

inline HomologyClass class_of_cycle(const PresentationPtr& pres, const Chain& z)
{
    if (z.dim() != pres->dim || z.kind() != pres->kind || !(z.rack() == pres->rack))
        throw DomainError("chain does not belong to the presentation's space");
    if (!is_cycle(z))
        throw DomainError("not a cycle");
    const std::size_t t = pres->torsion_factors.size();
    std::vector<Integer> coords(pres->projection.rows());
    for (const auto& [cube, k] : z.terms())
    {
        const std::size_t col = cube_index(z.rack(), cube);
        for (std::size_t p = 0; p < coords.size(); ++p)
            if (pres->projection(p, col) != 0)
                coords[p] += pres->projection(p, col) * k;
    }
    std::vector<Integer> torsion(coords.begin(), coords.begin() + static_cast<long>(t));
    std::vector<Integer> free(coords.begin() + static_cast<long>(t), coords.end());
    return HomologyClass(pres, std::move(free), std::move(torsion));
}

/**
 * Presentations keyed by exact rack content, dimension and kind.
 *
 * Concurrent callers asking for the same key share one construction.
 */
class PresentationCache
{
public:
    explicit PresentationCache(HomologyOptions opt = {}) : opt_(opt) {}

    PresentationPtr get(const Rack& r, std::size_t n, SpaceKind kind)
    {
        Key key{r.content_key(), n, kind};
        std::shared_future<PresentationPtr> fut;
        std::promise<PresentationPtr> promise;
        bool builder = false;
        {
            std::lock_guard lock(mutex_);
            auto it = entries_.find(key);
            if (it == entries_.end())
            {
                fut = promise.get_future().share();
                entries_.emplace(key, fut);
                builder = true;
            }
            else
                fut = it->second;
        }
        if (builder)
        {
            try
            {
                promise.set_value(homology(r, n, kind, opt_));
            }
            catch (...)
            {
                {
                    std::lock_guard lock(mutex_);
                    entries_.erase(key);
                }
                promise.set_exception(std::current_exception());
            }
        }
        return fut.get();
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

private:
    using Key = std::tuple<std::string, std::size_t, SpaceKind>;

    HomologyOptions opt_;
    mutable std::mutex mutex_;
    std::map<Key, std::shared_future<PresentationPtr>> entries_;
};

/// Process-wide cache used by the higher-level pipelines.
inline PresentationCache& default_cache()
{
    static PresentationCache cache;
    return cache;
}

}   // namespace rackhom

#endif
