#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace oritatami {

// Axial coordinates on the triangular grid. The unit vectors are E=(1,0)
// and NE=(0,1); every point has six neighbours.
struct Point
{
    int x = 0;
    int y = 0;

    constexpr auto operator<=>(const Point&) const = default;

    constexpr Point operator+(Point o) const { return { x + o.x, y + o.y }; }
    constexpr Point operator-(Point o) const { return { x - o.x, y - o.y }; }
};

struct PointHash
{
    std::size_t operator()(Point p) const noexcept
    {
        auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x));
        auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
        return std::hash<std::uint64_t>{}((ux << 32) | uy);
    }
};

// Counterclockwise starting at east. This order is the canonical order for
// enumerating placements.
enum class Direction : std::uint8_t { E, NE, NW, W, SW, SE };

inline constexpr std::array<Direction, 6> all_directions{
    Direction::E, Direction::NE, Direction::NW, Direction::W, Direction::SW, Direction::SE
};

constexpr Point offset(Direction d)
{
    constexpr std::array<Point, 6> table{ { { 1, 0 }, { 0, 1 }, { -1, 1 }, { -1, 0 }, { 0, -1 }, { 1, -1 } } };
    return table[static_cast<std::size_t>(d)];
}

constexpr Direction opposite(Direction d)
{
    return static_cast<Direction>((static_cast<int>(d) + 3) % 6);
}

constexpr int index_of(Direction d) { return static_cast<int>(d); }

std::string_view direction_name(Direction d);
std::optional<Direction> parse_direction(std::string_view name);

// Direction of the unit step from `from` to `to`, if they are adjacent.
std::optional<Direction> direction_between(Point from, Point to);

// The six neighbours in direction order E, NE, NW, W, SW, SE.
std::array<Point, 6> neighbors(Point p);

bool adjacent(Point a, Point b);

// Screen position with unit edge length: (x + y/2, y*sqrt(3)/2).
std::pair<double, double> to_cartesian(Point p);

// Reflection across the horizontal axis through the origin; maps E to E,
// NE to SE and NW to SW.
constexpr Point mirror_vertically(Point p) { return { p.x + p.y, -p.y }; }

using GridPath = std::vector<Point>;

// True iff consecutive points are adjacent and no point repeats.
bool path_is_valid(std::span<const Point> path);

// Points reached by walking `steps` from `origin`; the result has
// steps.size() + 1 entries.
GridPath trace(Point origin, std::span<const Direction> steps);

} // namespace oritatami
