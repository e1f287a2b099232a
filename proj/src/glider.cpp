#include "oritatami/glider.hpp"

namespace oritatami::glider {

RuleSet rules()
{
    return RuleSet{ { "579", "584" }, { "580", "589" }, { "581", "588" }, { "582", "587" },
                    { "583", "586" }, { "585", "590" }, { "586", "590" } };
}

std::vector<BeadType> period()
{
    std::vector<BeadType> out;
    for (int b = 579; b <= 590; ++b)
        out.push_back(std::to_string(b));
    return out;
}

Conformation seed()
{
    Conformation c({ { 0, 0 }, { 1, -1 }, { 1, -2 }, { 2, -2 }, { 2, -1 }, { 1, 0 } },
                   { "585", "586", "587", "588", "589", "590" });
    c.add_bond(0, 5);
    c.add_bond(1, 5);
    return c;
}

Conformation bottom_seed()
{
    return mirrored(seed());
}

OritatamiSystem system(std::size_t periods, bool bottom_entry)
{
    OritatamiSystem sys;
    sys.rules = rules();
    sys.arity = arity;
    sys.delay = delay;
    sys.seed = bottom_entry ? bottom_seed() : seed();
    const auto unit = period();
    for (std::size_t p = 0; p < periods; ++p)
        sys.transcript.insert(sys.transcript.end(), unit.begin(), unit.end());
    return sys;
}

} // namespace oritatami::glider
