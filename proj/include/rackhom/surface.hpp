/**
 * Triple-point cycles of 2-knot diagrams and the non-reversibility check for
 * the 2-twist-spun trefoil.
 */
#ifndef RACKHOM_SURFACE_HPP
#define RACKHOM_SURFACE_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cubical.hpp"
#include "homology.hpp"

namespace rackhom {

/// A 3-cycle in BR read off the triple points of a labelled 2-knot diagram.
class TriplePointChain
{
public:
    /// Rejects chains that are not 3-cycles of BR.
    TriplePointChain(Chain chain, std::string provenance)
        : chain_(std::move(chain)), provenance_(std::move(provenance))
    {
        if (chain_.dim() != 3 || chain_.kind() != SpaceKind::RackSpace)
            throw DomainError("triple-point chains are 3-chains of BR");
        if (!is_cycle(chain_))
            throw DomainError("not a cycle: triple-point data is inconsistent");
    }

    const Chain& chain() const { return chain_; }
    const std::string& provenance() const { return provenance_; }

private:
    Chain chain_;
    std::string provenance_;
};

/// The cubes of the 2-twist-spun trefoil's triple points, labelled in the
/// three-colour rack. The second twist repeats the first with 1 and 2
/// interchanged.
inline constexpr std::string_view twist_spun_trefoil_terms =
    "-012 -202 -122 +121 +102 +110 "
    "-021 -101 -211 +212 +201 +220";

inline TriplePointChain twist_spun_trefoil_cycle()
{
    return TriplePointChain(
        chain_from_terms(dihedral_rack(3), SpaceKind::RackSpace, twist_spun_trefoil_terms),
        "twist-spun-trefoil");
}

inline TriplePointChain reversed_cycle(const TriplePointChain& tc)
{
    return TriplePointChain(reverse_orientation_3(tc.chain()), tc.provenance() + " (reversed)");
}

inline HomologyClass surface_invariant(const TriplePointChain& tc, const Rack& r,
                                       PresentationCache& cache = default_cache())
{
    if (!(tc.chain().rack() == r))
        throw DomainError("triple-point chain is labelled in a different rack");
    return class_of_cycle(cache.get(r, 3, SpaceKind::RackSpace), tc.chain());
}

/// Same tuples and coefficients, reinterpreted over another rack.
inline Chain rebase_chain(const Chain& c, const Rack& r)
{
    Chain out(r, c.kind(), c.dim());
    for (const auto& [cube, k] : c.terms())
        out.add(cube, k);
    return out;
}

struct CertificateStep
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CertificateReport
{
    std::string title;
    std::vector<CertificateStep> steps;

    bool passed() const
    {
        for (const auto& s : steps)
            if (!s.passed)
                return false;
        return !steps.empty();
    }

    /// Name of the first failing step, empty on success.
    std::string failed_step() const
    {
        for (const auto& s : steps)
            if (!s.passed)
                return s.name;
        return {};
    }

    std::string to_string() const
    {
        std::ostringstream out;
        out << title << ": " << (passed() ? "PASS" : "FAIL at " + failed_step()) << "\n";
        for (const auto& s : steps)
            out << "  [" << (s.passed ? "ok" : "FAIL") << "] " << s.name << ": " << s.detail
                << "\n";
        return out.str();
    }
};

namespace detail {

/// Index of a torsion summand of order > 2 generated by the class, if any.
inline std::optional<std::size_t> generated_summand(const HomologyClass& c)
{
    const auto& d = c.presentation()->torsion_factors;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > 2 && c.generates_torsion_summand(i))
            return i;
    return std::nullopt;
}

}   // namespace detail

/**
 * Runs the chain of checks behind the non-reversibility of a 2-knot whose
 * triple-point cycle is `cycle`: homology of BR in dimension 3, cycle check,
 * the class generating a torsion summand of order > 2, invariance under all
 * rack automorphisms, and class(reversed) = -class != class.
 *
 * Stops at the first failing step.
 */
inline CertificateReport nonreversibility_certificate(const Chain& cycle,
                                                      PresentationCache& cache = default_cache(),
                                                      std::size_t automorphism_limit = 8)
{
    CertificateReport report{"2-twist-spun trefoil is not isotopic to its reverse", {}};
    auto step = [&](std::string name, bool ok, std::string detail) {
        report.steps.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };
    const Rack& r = cycle.rack();
    const std::string rack_label = r.name().empty() ? "rack" : r.name();

    if (cycle.dim() != 3 || cycle.kind() != SpaceKind::RackSpace)
    {
        step("input", false, "expected a 3-chain of BR");
        return report;
    }
    PresentationPtr pres;
    try
    {
        pres = cache.get(r, 3, SpaceKind::RackSpace);
    }
    catch (const std::exception& e)
    {
        step("homology", false, e.what());
        return report;
    }
    step("homology", true, "H_3(B " + rack_label + ") = " + pres->to_string());

    const bool closed = is_cycle(cycle);
    if (!step("cycle", closed,
              "C = " + cycle.to_string() +
                  (closed ? "" : " is not a cycle; boundary " +
                                     boundary_of_chain(cycle).to_string())))
        return report;

    HomologyClass cls = class_of_cycle(pres, cycle);
    auto summand = detail::generated_summand(cls);
    if (!step("generator", summand.has_value(),
              "class(C) = " + cls.to_string() +
                  (summand ? " generates the Z_" +
                                 pres->torsion_factors[*summand].str() + " summand"
                           : " generates no torsion summand of order > 2")))
        return report;

    std::vector<RackPermutation> autos;
    try
    {
        autos = automorphisms(r, automorphism_limit);
    }
    catch (const GuardError& e)
    {
        step("invariance", false, e.what());
        return report;
    }
    std::size_t moved = 0;
    for (const auto& sigma : autos)
        if (!(class_of_cycle(pres, permute_chain(sigma, cycle)) == cls))
            ++moved;
    if (!step("invariance", moved == 0,
              std::to_string(autos.size()) + " automorphisms, " + std::to_string(moved) +
                  " change the class"))
        return report;

    Chain reversed = reverse_orientation_3(cycle);
    HomologyClass rcls = class_of_cycle(pres, reversed);
    if (!step("reversal", rcls == -cls,
              "class(C') = " + rcls.to_string() + ", C + C' " +
                  ((cycle + reversed).is_zero() ? "= 0" : "!= 0") + " as chains"))
        return report;
    step("distinct", !(rcls == cls), "class(C') " + std::string(rcls == cls ? "=" : "!=") +
                                         " class(C)");
    return report;
}

}   // namespace rackhom

#endif
