/**
 * Distinguishing the two zero-writhe trefoil diagrams by the classes of
 * their extended canonical cycles in H_2(B_R R).
 */
#ifndef RACKHOM_CHIRALITY_HPP
#define RACKHOM_CHIRALITY_HPP

#include "diagram.hpp"
#include "fixtures.hpp"
#include "surface.hpp"

namespace rackhom {

struct LabelledDiagram
{
    LinkDiagram diagram;
    std::optional<ExtendedLabelling> labelling;
};

inline LabelledDiagram builtin_labelled_diagram(std::string_view name)
{
    auto text = fixtures::diagram(name);
    if (!text)
        throw DomainError("no bundled diagram named '" + std::string(name) + "'");
    LabelledDiagram out{parse_diagram(*text), std::nullopt};
    if (auto lbl = fixtures::labelling(name))
        out.labelling = parse_labelling(*lbl);
    return out;
}

namespace detail {

inline bool constant_on_arcs(const ExtendedLabelling& l)
{
    return std::adjacent_find(l.arcs.begin(), l.arcs.end(), std::not_equal_to<>()) ==
           l.arcs.end();
}

// The supplied labelling when it is valid in r, else the first extended
// labelling that is non-constant on the arcs.
inline std::optional<ExtendedLabelling> pick_labelling(const LabelledDiagram& d, const Rack& r)
{
    if (d.labelling && is_valid_extended_labelling(d.diagram, r, *d.labelling) &&
        !constant_on_arcs(*d.labelling))
        return d.labelling;
    for (auto& l : enumerate_extended_colorings(d.diagram, r))
        if (!constant_on_arcs(l))
            return l;
    return std::nullopt;
}

}   // namespace detail

/**
 * Checks that the right and left diagrams cannot be related by a framed
 * isotopy: both have writhe 0, the right diagram's class generates a torsion
 * summand of order > 2, the left diagram's class is its negative, every
 * non-constant labelling gives the same class, and the invariant sets differ.
 */
inline CertificateReport chirality_certificate(const Rack& r, const LabelledDiagram& right,
                                               const LabelledDiagram& left,
                                               PresentationCache& cache = default_cache())
{
    CertificateReport report{"right and left trefoils are not isotopic", {}};
    auto step = [&](std::string name, bool ok, std::string detail) {
        report.steps.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    const long wr = writhe(right.diagram), wl = writhe(left.diagram);
    if (!step("writhe", wr == 0 && wl == 0,
              "writhe " + std::to_string(wr) + " and " + std::to_string(wl)))
        return report;
    if (!right.diagram.has_regions() || !left.diagram.has_regions())
    {
        step("regions", false, "both diagrams need region data");
        return report;
    }

    PresentationPtr pres;
    try
    {
        pres = cache.get(r, 2, SpaceKind::ExtendedRackSpace);
    }
    catch (const std::exception& e)
    {
        step("homology", false, e.what());
        return report;
    }
    const std::string rack_label = r.name().empty() ? "R" : r.name();
    step("homology", true, "H_2(B_R R) for " + rack_label + " = " + pres->to_string());

    auto lr = detail::pick_labelling(right, r);
    auto ll = detail::pick_labelling(left, r);
    auto one_line = [](const ExtendedLabelling& l) {
        std::string s = format_labelling(l);
        s.pop_back();
        return s;
    };
    if (!step("labelling", lr && ll,
              lr && ll ? "right " + one_line(*lr) + "; left " + one_line(*ll)
                       : "no labelling that is non-constant on the knot"))
        return report;

    Chain b = extended_canonical_cycle(right.diagram, *lr, r);
    Chain bp = extended_canonical_cycle(left.diagram, *ll, r);
    if (!step("cycles", is_cycle(b) && is_cycle(bp),
              "B = " + b.to_string() + "; B' = " + bp.to_string()))
        return report;

    HomologyClass cb = class_of_cycle(pres, b);
    auto summand = detail::generated_summand(cb);
    if (!step("generator", summand.has_value(),
              "class(B) = " + cb.to_string() +
                  (summand ? " generates the Z_" + pres->torsion_factors[*summand].str() +
                                 " summand"
                           : " generates no torsion summand of order > 2")))
        return report;

    HomologyClass cbp = class_of_cycle(pres, bp);
    if (!step("negation", cbp == -cb,
              "class(B') = " + cbp.to_string() + ", B + B' " +
                  ((b + bp).is_zero() ? "= 0" : "!= 0") + " as chains"))
        return report;

    auto independent = [&](const LabelledDiagram& d, const HomologyClass& expected) {
        for (const auto& l : enumerate_extended_colorings(d.diagram, r))
            if (!detail::constant_on_arcs(l) &&
                !(class_of_cycle(pres, extended_canonical_cycle(d.diagram, l, r)) == expected))
                return false;
        return true;
    };
    if (!step("label independence", independent(right, cb) && independent(left, cbp),
              "all non-constant labellings give one class per diagram"))
        return report;

    auto inv_r = knot_invariant(right.diagram, r, InvariantMode::Extended, cache);
    auto inv_l = knot_invariant(left.diagram, r, InvariantMode::Extended, cache);
    step("invariants differ", inv_r != inv_l,
         std::to_string(inv_r.size()) + " and " + std::to_string(inv_l.size()) + " classes, sets " +
             (inv_r != inv_l ? "differ" : "coincide"));
    return report;
}

inline CertificateReport chirality_certificate(const Rack& r,
                                               PresentationCache& cache = default_cache())
{
    return chirality_certificate(r, builtin_labelled_diagram("trefoil_right_zero_writhe"),
                                 builtin_labelled_diagram("trefoil_left_zero_writhe"), cache);
}

}   // namespace rackhom

#endif
