#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace snakes::cyclic {

// Letter ranks used for every comparison of cyclic words:
// D < E, S < L, 0 < 1.
int letter_rank(char c) noexcept;

// Start of the least rotation under letter_rank (Booth's algorithm).
std::size_t least_rotation_start(std::string_view w);
std::string canonical(std::string_view w);

std::string rotate_left(std::string_view w, std::size_t d);
bool is_rotation(std::string_view a, std::string_view b);

// Smallest d dividing |w| with w equal to its rotation by d.
std::size_t primitive_period(std::string_view w);
std::string power(std::string_view w, std::size_t k);
std::size_t count(std::string_view w, char letter);

} // namespace snakes::cyclic
