/**
 * Bundled diagrams and labellings, addressable by name from the CLI.
 *
 * The texts are identical to the files under data/diagrams/.
 */
#ifndef RACKHOM_FIXTURES_HPP
#define RACKHOM_FIXTURES_HPP

#include <iterator>
#include <optional>
#include <string_view>

namespace rackhom::fixtures {

struct NamedText
{
    std::string_view name;
    std::string_view text;
};

inline constexpr std::string_view trefoil_right_zero_writhe_dgm = R"(# Right-hand trefoil with three compensating kinks (writhe 0)
diagram 6 8
x - 0 3 1 1 0 3 2
x - 2 5 3 1 4 3 0
x - 4 1 5 1 2 3 4
x + 5 0 0 0 3 5 3
x + 1 2 2 4 3 6 3
x + 3 4 4 2 3 7 3
)";

inline constexpr std::string_view trefoil_right_zero_writhe_lbl = R"(label arcs: 0 2 2 1 1 0; regions: 0 2 2 0 1 0 1 2
)";

inline constexpr std::string_view trefoil_left_zero_writhe_dgm = R"(# Left-hand trefoil with three compensating kinks (writhe 0)
diagram 6 8
x + 3 1 4 0 1 2 3
x + 5 3 0 0 3 2 4
x + 1 5 2 0 4 2 1
x - 0 0 1 3 2 5 2
x - 2 2 3 4 2 6 2
x - 4 4 5 1 2 7 2
)";

inline constexpr std::string_view trefoil_left_zero_writhe_lbl = R"(label arcs: 0 0 1 1 2 2; regions: 2 1 0 0 2 0 2 1
)";

inline constexpr std::string_view trefoil_right_dgm = R"(# Standard 3-crossing trefoil, all crossings positive (writhe +3)
diagram 3 5
x + 1 0 2 0 1 2 3
x + 2 1 0 0 3 2 4
x + 0 2 1 0 4 2 1
)";

inline constexpr std::string_view trefoil_left_dgm = R"(# Standard 3-crossing trefoil, all crossings negative (writhe -3)
diagram 3 5
x - 2 1 0 1 0 3 2
x - 0 2 1 1 4 3 0
x - 1 0 2 1 2 3 4
)";

inline constexpr std::string_view unknot_kink_dgm = R"(# Unknot with one positive curl (writhe +1)
diagram 1 3
x + 0 0 0 0 1 2 1
)";

inline constexpr std::string_view unknot_dgm = R"(# Crossingless unknot
diagram 1
)";

inline constexpr std::string_view hopf_dgm = R"(# Hopf link, two components
diagram 2 4
x + 1 0 1 0 1 2 3
x + 0 1 0 2 1 0 3
)";


inline constexpr NamedText diagrams[] = {
    {"trefoil_right_zero_writhe", trefoil_right_zero_writhe_dgm},
    {"trefoil_left_zero_writhe", trefoil_left_zero_writhe_dgm},
    {"trefoil_right", trefoil_right_dgm},
    {"trefoil_left", trefoil_left_dgm},
    {"unknot_kink", unknot_kink_dgm},
    {"unknot", unknot_dgm},
    {"hopf", hopf_dgm},
};


inline constexpr NamedText labellings[] = {
    {"trefoil_right_zero_writhe", trefoil_right_zero_writhe_lbl},
    {"trefoil_left_zero_writhe", trefoil_left_zero_writhe_lbl},
};


inline std::optional<std::string_view> find(const NamedText* begin, const NamedText* end,
                                            std::string_view name)
{
    for (auto it = begin; it != end; ++it)
        if (it->name == name)
            return it->text;
    return std::nullopt;
}

inline std::optional<std::string_view> diagram(std::string_view name)
{
    return find(std::begin(diagrams), std::end(diagrams), name);
}

inline std::optional<std::string_view> labelling(std::string_view name)
{
    return find(std::begin(labellings), std::end(labellings), name);
}

}   // namespace rackhom::fixtures

#endif
