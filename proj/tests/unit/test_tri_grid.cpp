#include "oritatami/tri_grid.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace oritatami;

TEST_CASE("neighbours come in direction order")
{
    const auto n = neighbors({ 0, 0 });
    const std::array<Point, 6> expected{ { { 1, 0 }, { 0, 1 }, { -1, 1 }, { -1, 0 }, { 0, -1 }, { 1, -1 } } };
    CHECK(n == expected);

    const std::array<Point, 6> shifted{ { { 3, -1 }, { 2, 0 }, { 1, 0 }, { 1, -1 }, { 2, -2 }, { 3, -2 } } };
    CHECK(neighbors({ 2, -1 }) == shifted);
}

TEST_CASE("common neighbours of an edge")
{
    const auto a = neighbors({ 0, 0 });
    const auto b = neighbors({ 1, 0 });
    std::set<Point> common;
    for (auto p : a)
        if (std::find(b.begin(), b.end(), p) != b.end())
            common.insert(p);
    CHECK(common == std::set<Point>{ { 0, 1 }, { 1, -1 } });
}

TEST_CASE("adjacency is symmetric and neighbours are distinct")
{
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            const Point p{ x, y };
            const auto n = neighbors(p);
            CHECK(std::set<Point>(n.begin(), n.end()).size() == 6);
            for (auto q : n) {
                const auto back = neighbors(q);
                CHECK(std::find(back.begin(), back.end(), p) != back.end());
                CHECK(adjacent(p, q));
            }
            CHECK_FALSE(adjacent(p, p));
        }
}

TEST_CASE("cartesian positions")
{
    auto [x0, y0] = to_cartesian({ 0, 0 });
    CHECK(x0 == 0.0);
    CHECK(y0 == 0.0);
    auto [x1, y1] = to_cartesian({ 0, 1 });
    CHECK(x1 == doctest::Approx(0.5));
    CHECK(y1 == doctest::Approx(std::sqrt(3.0) / 2));
    auto [x2, y2] = to_cartesian({ -1, 1 });
    CHECK(x2 == doctest::Approx(-0.5));
    CHECK(y2 == doctest::Approx(std::sqrt(3.0) / 2));

    std::set<std::pair<long, long>> seen;
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y) {
            const Point p{ x, y };
            auto [px, py] = to_cartesian(p);
            seen.insert({ std::lround(px * 1000), std::lround(py * 1000) });
            for (auto q : neighbors(p)) {
                auto [qx, qy] = to_cartesian(q);
                CHECK(std::abs(std::hypot(qx - px, qy - py) - 1.0) < 1e-9);
            }
        }
    CHECK(seen.size() == 81);
}

TEST_CASE("path validity")
{
    const GridPath ok{ { 0, 0 }, { 1, 0 }, { 1, 1 } };
    const GridPath gap{ { 0, 0 }, { 2, 0 } };
    const GridPath revisit{ { 0, 0 }, { 1, 0 }, { 0, 0 } };
    CHECK(path_is_valid(ok));
    CHECK_FALSE(path_is_valid(gap));
    CHECK_FALSE(path_is_valid(revisit));
    CHECK(path_is_valid(GridPath{}));
}

TEST_CASE("directions")
{
    for (auto d : all_directions) {
        CHECK(parse_direction(direction_name(d)) == d);
        CHECK(offset(opposite(d)) == Point{ 0, 0 } - offset(d));
        CHECK(direction_between({ 5, 5 }, Point{ 5, 5 } + offset(d)) == d);
    }
    CHECK_FALSE(direction_between({ 0, 0 }, { 2, 0 }).has_value());
    const Direction steps[] = { Direction::E, Direction::NE, Direction::W };
    CHECK(trace({ 0, 0 }, steps) == GridPath{ { 0, 0 }, { 1, 0 }, { 1, 1 }, { 0, 1 } });
}

TEST_CASE("vertical mirror keeps adjacency and flips rows")
{
    for (auto q : neighbors({ 0, 0 })) {
        CHECK(adjacent(mirror_vertically({ 0, 0 }), mirror_vertically(q)));
        CHECK(mirror_vertically(q).y == -q.y);
        CHECK(mirror_vertically(mirror_vertically(q)) == q);
    }
}
