// Command-line front end for rackhom.
//
// Exit codes: 0 success, 1 domain failure (not a rack, not a cycle, failed
// certificate, guard exceeded), 2 usage or parse error.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rackhom/rackhom.hpp"

namespace fs = std::filesystem;
using namespace rackhom;

namespace {

struct Guards
{
    std::size_t max_size = 12;
    std::size_t max_dim = 4;
};

void check_size(const Rack& r, const Guards& g)
{
    if (r.size() > g.max_size)
        throw GuardError("rack has " + std::to_string(r.size()) +
                         " elements; raise --max-size to allow more than " +
                         std::to_string(g.max_size));
}

void check_dim(std::size_t dim, const Guards& g)
{
    if (dim > g.max_dim)
        throw GuardError("dimension " + std::to_string(dim) + " exceeds the limit of " +
                         std::to_string(g.max_dim) + "; raise --max-dim to allow it");
}

Rack load_rack(const std::string& spec, const Guards& g)
{
    Rack r = resolve_rack(spec);
    check_size(r, g);
    return r;
}

std::string label_of(const Rack& r, const std::string& fallback)
{
    return r.name().empty() ? fallback : r.name();
}

// A bundled fixture name or a .dgm path; a sibling .lbl file is picked up.
LabelledDiagram load_diagram(const std::string& spec)
{
    if (!fs::exists(spec) && fixtures::diagram(spec))
        return builtin_labelled_diagram(spec);
    LabelledDiagram out{parse_diagram(read_text_file(spec)), std::nullopt};
    fs::path lbl = fs::path(spec).replace_extension(".lbl");
    if (fs::exists(lbl))
        out.labelling = parse_labelling(read_text_file(lbl));
    return out;
}

ChainFile load_chain(const std::string& spec, const Guards& g)
{
    if (spec == "twist-spun-trefoil" && !fs::exists(spec))
        return {"dihedral:3", twist_spun_trefoil_cycle().chain()};
    fs::path base = fs::path(spec).parent_path();
    auto cf = parse_chain_file(read_text_file(spec), [&](const std::string& name) {
        Rack r = resolve_rack(name, base);
        check_size(r, g);
        return r;
    });
    check_dim(cf.chain.dim(), g);
    return cf;
}

std::string one_line(const ExtendedLabelling& l)
{
    std::string s = format_labelling(l);
    s.pop_back();
    return s;
}

int cmd_check(const std::string& spec, const Guards& g)
{
    RackTable t;
    if (auto builtin = builtin_rack(spec))
        t = {builtin->size(), builtin->table()};
    else
        t = parse_rack_table(read_text_file(spec));
    if (t.size > g.max_size)
        throw GuardError("rack exceeds --max-size");
    AxiomReport report = validate_axioms(t.size, t.table);
    if (!report.is_rack)
    {
        std::cout << "not a rack: " << report.violations.size() << " violation(s)\n";
        const std::size_t shown = std::min<std::size_t>(report.violations.size(), 5);
        for (std::size_t i = 0; i < shown; ++i)
            std::cout << "  " << report.violations[i].describe() << "\n";
        return 1;
    }
    Rack r = Rack::from_table(t.size, t.table, spec);
    std::string kinds = "rack";
    if (report.is_quandle)
        kinds += " quandle";
    if (report.is_involutory)
        kinds += " involutory";
    auto orb = orbits(r);
    std::cout << kinds << "; orbits=" << orb.size() << "; aut=";
    if (r.size() <= 8)
        std::cout << automorphisms(r).size() << "\n";
    else
        std::cout << "skipped\n";
    std::cout << "orbits:";
    for (const auto& o : orb)
    {
        std::cout << " {";
        for (std::size_t i = 0; i < o.size(); ++i)
            std::cout << (i ? "," : "") << o[i];
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

int cmd_homology(const std::string& spec, std::size_t dim, bool extended, const Guards& g)
{
    check_dim(dim, g);
    Rack r = load_rack(spec, g);
    auto pres = homology(r, dim, extended ? SpaceKind::ExtendedRackSpace : SpaceKind::RackSpace,
                         {std::size_t(1) << 24});
    std::cout << pres->to_string() << "\n";
    return 0;
}

int cmd_color(const std::string& dspec, const std::string& rspec, bool extended, const Guards& g)
{
    Rack r = load_rack(rspec, g);
    LabelledDiagram ld = load_diagram(dspec);
    const std::string rname = label_of(r, rspec);
    std::string block;
    if (extended)
    {
        auto all = enumerate_extended_colorings(ld.diagram, r);
        std::cout << all.size() << " extended labellings of " << dspec << " in " << rname << "\n";
        for (const auto& l : all)
        {
            const bool marked = ld.labelling && *ld.labelling == l;
            std::cout << (marked ? "* " : "  ") << one_line(l) << " => "
                      << extended_canonical_cycle(ld.diagram, l, r) << "\n";
            block += one_line(l) + "\n";
        }
        if (ld.labelling)
            std::cout << "(* marks the companion labelling)\n";
    }
    else
    {
        auto all = enumerate_colorings(ld.diagram, r);
        std::cout << all.size() << " labellings of " << dspec << " in " << rname << "\n";
        for (const auto& l : all)
        {
            ExtendedLabelling e{l.arcs, {}, 0};
            std::cout << "  " << one_line(e) << " => " << canonical_cycle(ld.diagram, l, r) << "\n";
            block += one_line(e) + "\n";
        }
    }
    std::cout << "```lbl\n" << block << "```\n";
    return 0;
}

int cmd_invariant(const std::string& dspec, const std::string& rspec, const Guards& g)
{
    Rack r = load_rack(rspec, g);
    LabelledDiagram ld = load_diagram(dspec);
    const bool extended = ld.diagram.has_regions();
    const auto kind = extended ? SpaceKind::ExtendedRackSpace : SpaceKind::RackSpace;
    auto pres = default_cache().get(r, 2, kind);
    auto classes = knot_invariant(ld.diagram, r,
                                  extended ? InvariantMode::Extended : InvariantMode::Plain);
    std::cout << "writhe: " << writhe(ld.diagram) << "\n";
    std::cout << (extended ? "H_2(B_R R) = " : "H_2(BR) = ") << pres->to_string() << "\n";
    std::cout << "classes: " << classes.size() << "\n";
    for (const auto& c : classes)
        std::cout << "  " << c.to_string() << "\n";
    return 0;
}

int cmd_class(const std::string& rspec, const std::string& cspec, const Guards& g)
{
    Rack r = load_rack(rspec, g);
    ChainFile cf = load_chain(cspec, g);
    if (!(cf.chain.rack() == r))
    {
        std::cout << "chain is labelled in " << cf.rack_name << ", not " << rspec << "\n";
        return 1;
    }
    if (!is_cycle(cf.chain))
    {
        std::cout << "not a cycle: boundary = " << boundary_of_chain(cf.chain) << "\n";
        return 1;
    }
    auto pres = default_cache().get(r, cf.chain.dim(), cf.chain.kind());
    HomologyClass cls = class_of_cycle(pres, cf.chain);
    std::cout << "cycle: yes\n";
    std::cout << "H_" << cf.chain.dim() << "(" << kind_tag(cf.chain.kind())
              << ") = " << pres->to_string() << "\n";
    std::cout << "class: " << cls.to_string() << "\n";
    for (std::size_t i = 0; i < pres->torsion_factors.size(); ++i)
        if (cls.generates_torsion_summand(i))
            std::cout << "torsion coordinate " << i << " generates Z_" << pres->torsion_factors[i]
                      << "\n";
    return 0;
}

int cmd_reverse(const std::string& cspec, const Guards& g)
{
    ChainFile cf = load_chain(cspec, g);
    std::cout << format_chain_file(reverse_orientation_3(cf.chain), cf.rack_name);
    return 0;
}

int cmd_certify(const std::string& rspec, const Guards& g)
{
    Rack r = load_rack(rspec, g);
    if (r.size() < 3)
        throw DomainError("certify needs a rack with at least 3 elements");
    auto surface = nonreversibility_certificate(rebase_chain(twist_spun_trefoil_cycle().chain(), r));
    auto chirality = chirality_certificate(r);
    std::cout << surface.to_string() << chirality.to_string();
    const bool ok = surface.passed() && chirality.passed();
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Integer homology of rack spaces and canonical classes of labelled knots"};
    app.require_subcommand(1);
    app.fallthrough();
    Guards g;
    app.add_option("--max-size", g.max_size, "Largest rack size accepted")->capture_default_str();
    app.add_option("--max-dim", g.max_dim, "Largest chain dimension accepted")
        ->capture_default_str();

    std::string rack_spec, diagram_spec, chain_spec, rack_flag;
    std::size_t dim = 0;
    bool extended = false;

    auto* check = app.add_subcommand("check", "Check rack axioms, orbits and automorphisms");
    check->add_option("rack", rack_spec, "Rack file or builtin name")->required();

    auto* hom = app.add_subcommand("homology", "Integer homology of BR or B_R R");
    hom->add_option("rack", rack_spec, "Rack file or builtin name")->required();
    hom->add_option("--dim", dim, "Homological dimension")->required();
    hom->add_flag("--extended", extended, "Use the extended rack space");

    auto* color = app.add_subcommand("color", "List labellings and canonical cycles");
    color->add_option("diagram", diagram_spec, "Diagram file or bundled name")->required();
    color->add_option("rack_name", rack_spec, "Rack file or builtin name");
    color->add_option("--rack", rack_flag, "Rack file or builtin name");
    color->add_flag("--extended", extended, "Label regions as well as arcs");

    auto* inv = app.add_subcommand("invariant", "Set of canonical classes and writhe");
    inv->add_option("diagram", diagram_spec, "Diagram file or bundled name")->required();
    inv->add_option("rack_name", rack_spec, "Rack file or builtin name");
    inv->add_option("--rack", rack_flag, "Rack file or builtin name");

    auto* cls = app.add_subcommand("class", "Cycle check and class coordinates");
    cls->add_option("rack", rack_spec, "Rack file or builtin name")->required();
    cls->add_option("chain", chain_spec, "Chain file or twist-spun-trefoil")->required();

    auto* rev = app.add_subcommand("reverse", "Orientation-reversed 3-chain");
    rev->add_option("chain", chain_spec, "Chain file or twist-spun-trefoil")->required();

    auto* cert = app.add_subcommand("certify", "Run both certificates end to end");
    cert->add_option("--rack", rack_flag, "Rack file or builtin name");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        auto rack_or_flag = [&]() -> std::string {
            if (!rack_flag.empty())
                return rack_flag;
            if (!rack_spec.empty())
                return rack_spec;
            throw CLI::RequiredError("a rack (positional or --rack)");
        };
        if (*check)
            return cmd_check(rack_spec, g);
        if (*hom)
            return cmd_homology(rack_spec, dim, extended, g);
        if (*color)
            return cmd_color(diagram_spec, rack_or_flag(), extended, g);
        if (*inv)
            return cmd_invariant(diagram_spec, rack_or_flag(), g);
        if (*cls)
            return cmd_class(rack_spec, chain_spec, g);
        if (*rev)
            return cmd_reverse(chain_spec, g);
        if (*cert)
            return cmd_certify(rack_flag.empty() ? "dihedral:3" : rack_flag, g);
    }
    catch (const CLI::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ParseError& e)
    {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
