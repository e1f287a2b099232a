#pragma once

#include "oritatami/fold_engine.hpp"

#include <cstddef>
#include <vector>

namespace oritatami::glider {

// The g-spacer: a delay-3 system whose transcript repeats 579..590 and
// folds into a glider along a height-3 band.

RuleSet rules();

// One transcript period, 579 through 590.
std::vector<BeadType> period();

// Six-bead seed 585..590 in the top-entry orientation: 585 at the origin,
// the band spanning rows 0..-2, the last bead 590 at (1, 0).
Conformation seed();

// Seed reflected so the band spans rows 0..2 (bottom entry).
Conformation bottom_seed();

inline constexpr int delay = 3;
inline constexpr int arity = 2;

// Translation between consecutive periods of the folded glider.
inline constexpr Point period_shift{ 4, 0 };

OritatamiSystem system(std::size_t periods, bool bottom_entry = false);

} // namespace oritatami::glider
