#pragma once

#include <cstdint>
#include <string>

#include "snakes/classification.hpp"
#include "snakes/report.hpp"
#include "snakes/scroll_engine.hpp"
#include "snakes/sum_vectors.hpp"

namespace snakes {

// Two panels: live entries lettered and coloured by snake, then by co-snake.
std::string render_scroll_ascii(const Scroll& s, const SnakePartition& part, std::int64_t rows, bool ansi);

// Live entries as nodes at (col*u, row*u), successor and co-successor steps
// as edges, and the parallelogram tiles they bound.
std::string render_scroll_svg(const Scroll& s, const SnakePartition& part, std::int64_t rows);

std::string orbit_report_text(const OrbitReport& r);
std::string orbit_report_csv(const OrbitReport& r);

std::string classification_text(const Classification& c);
std::string classification_csv(const Classification& c);

std::string construction_text(const PeriodConstruction& c);
std::string construction_csv(const PeriodConstruction& c);

} // namespace snakes
