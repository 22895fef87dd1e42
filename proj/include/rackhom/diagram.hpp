/**
 * Rack-labelled link diagrams and their canonical cycles.
 *
 * A diagram is combinatorial: arcs run from one undercrossing to the next,
 * and each crossing records its sign and the under-in, over and under-out
 * arcs. Crossing labels follow
 *
 *     positive:  label(under_out) = label(under_in) ^ label(over)
 *     negative:  label(under_in)  = label(under_out) ^ label(over)
 *
 * The "source" under arc is under_in at a positive crossing and under_out at
 * a negative one; its label a and the over label b give the crossing's cube
 * (a, b) in BR with coefficient equal to the sign.
 *
 * Optional region data lists four region ids per crossing: the source
 * quadrant c (next to the source under arc and the over arc, behind both
 * framing normals), then the quadrant across the over arc (c^b), the
 * diagonal quadrant (c^{ab}), and the quadrant across the source under arc
 * (c^a). Region 0 is the unbounded region. The crossing contributes
 * sign * (c, a, b) to the extended canonical cycle in B_R R.
 */
#ifndef RACKHOM_DIAGRAM_HPP
#define RACKHOM_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubical.hpp"
#include "homology.hpp"

namespace rackhom {

struct Crossing
{
    int sign = 1;
    std::size_t under_in = 0;
    std::size_t over = 0;
    std::size_t under_out = 0;
    std::optional<std::array<std::size_t, 4>> quadrants;

    std::size_t source_arc() const { return sign > 0 ? under_in : under_out; }
    std::size_t target_arc() const { return sign > 0 ? under_out : under_in; }

    bool operator==(const Crossing&) const = default;
};

class LinkDiagram
{
public:
    LinkDiagram(std::size_t arc_count, std::optional<std::size_t> region_count,
                std::vector<Crossing> crossings)
        : arcs_(arc_count), regions_(region_count), crossings_(std::move(crossings))
    {
        validate();
    }

    std::size_t arc_count() const { return arcs_; }
    std::optional<std::size_t> region_count() const { return regions_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    bool has_regions() const { return regions_.has_value(); }

    bool operator==(const LinkDiagram&) const = default;

private:
    void validate() const
    {
        std::vector<int> ins(arcs_, 0), outs(arcs_, 0);
        for (std::size_t k = 0; k < crossings_.size(); ++k)
        {
            const Crossing& x = crossings_[k];
            const std::string where = "crossing " + std::to_string(k) + ": ";
            if (x.sign != 1 && x.sign != -1)
                throw DomainError(where + "sign must be +1 or -1");
            for (std::size_t arc : {x.under_in, x.over, x.under_out})
                if (arc >= arcs_)
                    throw DomainError(where + "arc id " + std::to_string(arc) + " out of range");
            ++ins[x.under_in];
            ++outs[x.under_out];
            if (x.quadrants.has_value() != regions_.has_value())
                throw DomainError(where + "region data must be given for all crossings or none");
            if (x.quadrants)
                for (std::size_t q : *x.quadrants)
                    if (q >= *regions_)
                        throw DomainError(where + "region id " + std::to_string(q) +
                                          " out of range");
        }
        for (std::size_t a = 0; a < arcs_; ++a)
            if (ins[a] > 1 || outs[a] > 1 || ins[a] != outs[a])
                throw DomainError("arc " + std::to_string(a) +
                                  " must end at exactly one undercrossing and start at one, "
                                  "or be a closed crossingless component");
    }

    std::size_t arcs_;
    std::optional<std::size_t> regions_;
    std::vector<Crossing> crossings_;
};

/**
 * Parses the diagram format:
 *
 *     diagram <arc_count> [<region_count>]
 *     x <+|-> <under_in> <over> <under_out> [<q0> <q1> <q2> <q3>]
 *
 * with '#' comment lines.
 */
inline LinkDiagram parse_diagram(std::string_view text)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("diagram file is empty");
    auto head = detail::split_words(lines[0]);
    if (head.empty() || head[0] != "diagram" || head.size() > 3 || head.size() < 2)
        throw ParseError("expected 'diagram <arc_count> [<region_count>]'");
    auto count = [](const std::string& w, const std::string& what) {
        long long v = detail::parse_integer(w, what);
        if (v < 0)
            throw ParseError(what + " must be non-negative");
        return static_cast<std::size_t>(v);
    };
    const std::size_t arcs = count(head[1], "arc count");
    std::optional<std::size_t> regions;
    if (head.size() == 3)
        regions = count(head[2], "region count");

    std::vector<Crossing> crossings;
    for (std::size_t l = 1; l < lines.size(); ++l)
    {
        auto w = detail::split_words(lines[l]);
        if (w.empty() || w[0] != "x" || (w.size() != 5 && w.size() != 9))
            throw ParseError("bad crossing line: '" + std::string(lines[l]) + "'");
        Crossing x;
        if (w[1] == "+")
            x.sign = 1;
        else if (w[1] == "-")
            x.sign = -1;
        else
            throw ParseError("crossing sign must be '+' or '-'");
        x.under_in = count(w[2], "arc id");
        x.over = count(w[3], "arc id");
        x.under_out = count(w[4], "arc id");
        if (w.size() == 9)
            x.quadrants = std::array<std::size_t, 4>{count(w[5], "region id"),
                                                     count(w[6], "region id"),
                                                     count(w[7], "region id"),
                                                     count(w[8], "region id")};
        crossings.push_back(x);
    }
    return LinkDiagram(arcs, regions, std::move(crossings));
}

inline std::string format_diagram(const LinkDiagram& d)
{
    std::string out = "diagram " + std::to_string(d.arc_count());
    if (d.region_count())
        out += " " + std::to_string(*d.region_count());
    out += "\n";
    for (const Crossing& x : d.crossings())
    {
        out += "x ";
        out += x.sign > 0 ? "+" : "-";
        out += " " + std::to_string(x.under_in) + " " + std::to_string(x.over) + " " +
               std::to_string(x.under_out);
        if (x.quadrants)
            for (std::size_t q : *x.quadrants)
                out += " " + std::to_string(q);
        out += "\n";
    }
    return out;
}

inline long writhe(const LinkDiagram& d)
{
    long w = 0;
    for (const Crossing& x : d.crossings())
        w += x.sign;
    return w;
}

struct Labelling
{
    std::vector<Element> arcs;
    auto operator<=>(const Labelling&) const = default;
};

struct ExtendedLabelling
{
    std::vector<Element> arcs;
    std::vector<Element> regions;
    std::size_t base_region = 0;
    auto operator<=>(const ExtendedLabelling&) const = default;

    Labelling plain() const { return {arcs}; }
};

inline bool is_valid_labelling(const LinkDiagram& d, const Rack& r, const std::vector<Element>& arcs)
{
    if (arcs.size() != d.arc_count())
        return false;
    for (Element x : arcs)
        if (x >= r.size())
            return false;
    for (const Crossing& x : d.crossings())
        if (r.operate(arcs[x.source_arc()], arcs[x.over]) != arcs[x.target_arc()])
            return false;
    return true;
}

inline bool is_valid_labelling(const LinkDiagram& d, const Rack& r, const Labelling& l)
{
    return is_valid_labelling(d, r, l.arcs);
}

inline bool is_valid_extended_labelling(const LinkDiagram& d, const Rack& r,
                                        const ExtendedLabelling& l)
{
    if (!d.has_regions() || l.regions.size() != *d.region_count())
        return false;
    if (!is_valid_labelling(d, r, l.arcs))
        return false;
    for (Element x : l.regions)
        if (x >= r.size())
            return false;
    for (const Crossing& x : d.crossings())
    {
        const auto& q = *x.quadrants;
        const Element a = l.arcs[x.source_arc()], b = l.arcs[x.over];
        const Element c = l.regions[q[0]];
        if (l.regions[q[1]] != r.operate(c, b) || l.regions[q[3]] != r.operate(c, a) ||
            l.regions[q[2]] != r.operate(r.operate(c, a), b))
            return false;
    }
    return true;
}

namespace detail {

// Depth-first search over variables 0..n-1 in increasing order with values
// in increasing order; every constraint is checked as soon as its largest
// variable is set. Solutions therefore come out lexicographically sorted.
class LabelSearch
{
public:
    using Check = std::function<bool(const std::vector<Element>&)>;

    LabelSearch(std::size_t variables, std::size_t values)
        : values_(values), triggers_(variables)
    {
    }

    void add_constraint(std::initializer_list<std::size_t> vars, Check check)
    {
        triggers_[std::max(vars)].push_back(std::move(check));
    }

    std::vector<std::vector<Element>> solve()
    {
        std::vector<std::vector<Element>> out;
        std::vector<Element> assignment(triggers_.size(), 0);
        descend(0, assignment, out);
        return out;
    }

private:
    void descend(std::size_t v, std::vector<Element>& as, std::vector<std::vector<Element>>& out)
    {
        if (v == triggers_.size())
        {
            out.push_back(as);
            return;
        }
        for (Element x = 0; x < values_; ++x)
        {
            as[v] = x;
            bool ok = true;
            for (const auto& check : triggers_[v])
                if (!check(as))
                {
                    ok = false;
                    break;
                }
            if (ok)
                descend(v + 1, as, out);
        }
    }

    std::size_t values_;
    std::vector<std::vector<Check>> triggers_;
};

}   // namespace detail

/// All arc labellings, lexicographically ordered.
inline std::vector<Labelling> enumerate_colorings(const LinkDiagram& d, const Rack& r)
{
    detail::LabelSearch search(d.arc_count(), r.size());
    for (const Crossing& x : d.crossings())
    {
        const std::size_t s = x.source_arc(), o = x.over, t = x.target_arc();
        search.add_constraint({s, o, t}, [&r, s, o, t](const std::vector<Element>& v) {
            return r.operate(v[s], v[o]) == v[t];
        });
    }
    std::vector<Labelling> out;
    for (auto& sol : search.solve())
        out.push_back({std::move(sol)});
    return out;
}

/// All arc-and-region labellings, lexicographic in (arcs, regions).
inline std::vector<ExtendedLabelling> enumerate_extended_colorings(const LinkDiagram& d,
                                                                   const Rack& r)
{
    if (!d.has_regions())
        throw DomainError("diagram has no region data");
    const std::size_t na = d.arc_count();
    detail::LabelSearch search(na + *d.region_count(), r.size());
    for (const Crossing& x : d.crossings())
    {
        const std::size_t s = x.source_arc(), o = x.over, t = x.target_arc();
        const auto& q = *x.quadrants;
        const std::size_t c = na + q[0], across_over = na + q[1], diagonal = na + q[2],
                          across_under = na + q[3];
        search.add_constraint({s, o, t}, [&r, s, o, t](const std::vector<Element>& v) {
            return r.operate(v[s], v[o]) == v[t];
        });
        search.add_constraint({o, c, across_over},
                              [&r, o, c, across_over](const std::vector<Element>& v) {
                                  return r.operate(v[c], v[o]) == v[across_over];
                              });
        search.add_constraint({s, c, across_under},
                              [&r, s, c, across_under](const std::vector<Element>& v) {
                                  return r.operate(v[c], v[s]) == v[across_under];
                              });
        search.add_constraint({o, across_under, diagonal},
                              [&r, o, across_under, diagonal](const std::vector<Element>& v) {
                                  return r.operate(v[across_under], v[o]) == v[diagonal];
                              });
    }
    std::vector<ExtendedLabelling> out;
    for (auto& sol : search.solve())
    {
        ExtendedLabelling l;
        l.arcs.assign(sol.begin(), sol.begin() + static_cast<long>(na));
        l.regions.assign(sol.begin() + static_cast<long>(na), sol.end());
        out.push_back(std::move(l));
    }
    return out;
}

/// Sum over crossings of sign * (a, b) in BR.
inline Chain canonical_cycle(const LinkDiagram& d, const Labelling& l, const Rack& r)
{
    if (!is_valid_labelling(d, r, l))
        throw DomainError("labelling does not satisfy the crossing relations");
    Chain out(r, SpaceKind::RackSpace, 2);
    for (const Crossing& x : d.crossings())
        out.add({l.arcs[x.source_arc()], l.arcs[x.over]}, x.sign);
    return out;
}

/// Sum over crossings of sign * (c, a, b) in B_R R.
inline Chain extended_canonical_cycle(const LinkDiagram& d, const ExtendedLabelling& l,
                                      const Rack& r)
{
    if (!is_valid_extended_labelling(d, r, l))
        throw DomainError("extended labelling does not satisfy the crossing and region rules");
    Chain out(r, SpaceKind::ExtendedRackSpace, 2);
    for (const Crossing& x : d.crossings())
        out.add({l.regions[(*x.quadrants)[0]], l.arcs[x.source_arc()], l.arcs[x.over]}, x.sign);
    return out;
}

/// Reads "label arcs: 0 2 2 1; regions: 0 2 1" (regions optional, lines or
/// ';' separated, '#' comments).
inline ExtendedLabelling parse_labelling(std::string_view text)
{
    ExtendedLabelling l;
    bool have_arcs = false;
    for (auto line : detail::content_lines(text))
    {
        std::string s(line);
        std::size_t start = 0;
        while (start <= s.size())
        {
            std::size_t end = s.find(';', start);
            if (end == std::string::npos)
                end = s.size();
            auto words = detail::split_words(std::string_view(s).substr(start, end - start));
            start = end + 1;
            if (words.empty())
                continue;
            std::size_t k = 0;
            if (words[k] == "label")
                ++k;
            if (k >= words.size())
                continue;
            std::vector<Element>* target = nullptr;
            if (words[k] == "arcs:")
            {
                target = &l.arcs;
                have_arcs = true;
            }
            else if (words[k] == "regions:")
                target = &l.regions;
            else
                throw ParseError("expected 'arcs:' or 'regions:', got '" + words[k] + "'");
            target->clear();
            for (++k; k < words.size(); ++k)
            {
                long long v = detail::parse_integer(words[k], "label");
                if (v < 0)
                    throw ParseError("labels must be non-negative");
                target->push_back(static_cast<Element>(v));
            }
        }
    }
    if (!have_arcs)
        throw ParseError("labelling has no 'arcs:' entry");
    return l;
}

inline std::string format_labelling(const ExtendedLabelling& l)
{
    std::string out = "label arcs:";
    for (Element x : l.arcs)
        out += " " + std::to_string(x);
    if (!l.regions.empty())
    {
        out += "; regions:";
        for (Element x : l.regions)
            out += " " + std::to_string(x);
    }
    return out + "\n";
}

enum class InvariantMode { Plain, Extended };

/**
 * Deduplicated, sorted set of classes of canonical cycles over all
 * labellings: H_2(BR) in plain mode, H_2(B_R R) in extended mode.
 */
inline std::vector<HomologyClass> knot_invariant(const LinkDiagram& d, const Rack& r,
                                                 InvariantMode mode = InvariantMode::Extended,
                                                 PresentationCache& cache = default_cache())
{
    std::vector<HomologyClass> classes;
    if (mode == InvariantMode::Extended)
    {
        auto pres = cache.get(r, 2, SpaceKind::ExtendedRackSpace);
        for (const auto& l : enumerate_extended_colorings(d, r))
            classes.push_back(class_of_cycle(pres, extended_canonical_cycle(d, l, r)));
    }
    else
    {
        auto pres = cache.get(r, 2, SpaceKind::RackSpace);
        for (const auto& l : enumerate_colorings(d, r))
            classes.push_back(class_of_cycle(pres, canonical_cycle(d, l, r)));
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

}   // namespace rackhom

#endif
