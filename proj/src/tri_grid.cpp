#include "oritatami/tri_grid.hpp"

#include <cmath>
#include <unordered_set>

namespace oritatami {

namespace {

constexpr std::array<std::string_view, 6> direction_names{ "E", "NE", "NW", "W", "SW", "SE" };

} // namespace

std::string_view direction_name(Direction d)
{
    return direction_names[static_cast<std::size_t>(d)];
}

std::optional<Direction> parse_direction(std::string_view name)
{
    for (auto d : all_directions)
        if (direction_names[static_cast<std::size_t>(d)] == name)
            return d;
    return std::nullopt;
}

std::optional<Direction> direction_between(Point from, Point to)
{
    const Point delta = to - from;
    for (auto d : all_directions)
        if (offset(d) == delta)
            return d;
    return std::nullopt;
}

std::array<Point, 6> neighbors(Point p)
{
    std::array<Point, 6> out{};
    for (std::size_t i = 0; i < all_directions.size(); ++i)
        out[i] = p + offset(all_directions[i]);
    return out;
}

bool adjacent(Point a, Point b)
{
    return direction_between(a, b).has_value();
}

std::pair<double, double> to_cartesian(Point p)
{
    static const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    return { p.x + p.y / 2.0, p.y * half_sqrt3 };
}

bool path_is_valid(std::span<const Point> path)
{
    std::unordered_set<Point, PointHash> seen;
    seen.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0 && !adjacent(path[i - 1], path[i]))
            return false;
        if (!seen.insert(path[i]).second)
            return false;
    }
    return true;
}

GridPath trace(Point origin, std::span<const Direction> steps)
{
    GridPath out;
    out.reserve(steps.size() + 1);
    out.push_back(origin);
    for (auto d : steps)
        out.push_back(out.back() + offset(d));
    return out;
}

} // namespace oritatami
