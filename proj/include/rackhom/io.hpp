/**
 * Chain files and name resolution for racks.
 *
 * Chain file:
 *
 *     chain <BR|BRR> <rack-name> <dim>
 *     <coefficient> <entry> ... <entry>
 *
 * with dim entries per term in BR and dim+1 in BRR. Rack names are builtin
 * names (dihedral:<n>, trivial:<n>) or paths to rack files.
 */
#ifndef RACKHOM_IO_HPP
#define RACKHOM_IO_HPP

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "cubical.hpp"
#include "rack.hpp"

namespace rackhom {

inline std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// dihedral:<n> or trivial:<n>; nullopt for anything else.
inline std::optional<Rack> builtin_rack(std::string_view name)
{
    auto colon = name.find(':');
    if (colon == std::string_view::npos)
        return std::nullopt;
    std::string family(name.substr(0, colon));
    std::string arg(name.substr(colon + 1));
    if (family != "dihedral" && family != "trivial")
        return std::nullopt;
    long long n = detail::parse_integer(arg, "builtin rack size");
    if (n <= 0)
        throw ParseError("builtin rack size must be positive");
    return family == "dihedral" ? dihedral_rack(static_cast<std::size_t>(n))
                                : trivial_rack(static_cast<std::size_t>(n));
}

/// Builtin name, else a rack file path (relative paths tried against
/// base_dir first, then the working directory).
inline Rack resolve_rack(const std::string& name, const std::filesystem::path& base_dir = {})
{
    if (auto r = builtin_rack(name))
        return *r;
    std::filesystem::path p(name);
    if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p))
        p = base_dir / p;
    return parse_rack(read_text_file(p), name);
}

using RackResolver = std::function<Rack(const std::string&)>;

struct ChainFile
{
    std::string rack_name;
    Chain chain;
};

inline ChainFile parse_chain_file(std::string_view text, const RackResolver& resolve)
{
    auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError("chain file is empty");
    auto head = detail::split_words(lines[0]);
    if (head.size() != 4 || head[0] != "chain")
        throw ParseError("expected 'chain <BR|BRR> <rack> <dim>'");
    SpaceKind kind;
    if (head[1] == "BR")
        kind = SpaceKind::RackSpace;
    else if (head[1] == "BRR")
        kind = SpaceKind::ExtendedRackSpace;
    else
        throw ParseError("chain kind must be BR or BRR");
    long long dim = detail::parse_integer(head[3], "dimension");
    if (dim < 0)
        throw ParseError("dimension must be non-negative");
    Rack rack = resolve(head[2]);
    Chain chain(rack, kind, static_cast<std::size_t>(dim));
    const std::size_t len = cube_length(static_cast<std::size_t>(dim), kind);
    for (std::size_t l = 1; l < lines.size(); ++l)
    {
        auto w = detail::split_words(lines[l]);
        if (w.size() != len + 1)
            throw ParseError("chain term must hold a coefficient and " + std::to_string(len) +
                             " entries: '" + std::string(lines[l]) + "'");
        Coefficient k = detail::parse_integer(w[0], "coefficient");
        Cube cube;
        for (std::size_t p = 1; p < w.size(); ++p)
        {
            long long x = detail::parse_integer(w[p], "cube entry");
            if (x < 0 || static_cast<std::size_t>(x) >= rack.size())
                throw ParseError("cube entry " + w[p] + " outside the rack");
            cube.push_back(static_cast<Element>(x));
        }
        chain.add(cube, k);
    }
    return {head[2], std::move(chain)};
}

inline ChainFile parse_chain_file(std::string_view text, const std::filesystem::path& base_dir = {})
{
    return parse_chain_file(text, [&](const std::string& name) { return resolve_rack(name, base_dir); });
}

inline std::string format_chain_file(const Chain& c, const std::string& rack_name)
{
    std::ostringstream out;
    out << "chain " << kind_tag(c.kind()) << " " << rack_name << " " << c.dim() << "\n";
    for (const auto& [cube, k] : c.terms())
    {
        out << k;
        for (Element x : cube)
            out << " " << x;
        out << "\n";
    }
    return out.str();
}

}   // namespace rackhom

#endif
