#include "dmp/path.hpp"

#include <stdexcept>

namespace dmp {

const char* to_string(Direction d) {
    switch (d) {
        case Direction::nondecreasing: return "nondecreasing";
        case Direction::nonincreasing: return "nonincreasing";
        case Direction::both: return "both";
    }
    return "?";
}

Direction classify_direction(const std::vector<int>& degree_seq) {
    bool up = true, down = true;
    for (std::size_t i = 1; i < degree_seq.size(); ++i) {
        if (degree_seq[i - 1] > degree_seq[i]) up = false;
        if (degree_seq[i - 1] < degree_seq[i]) down = false;
    }
    if (up && down) return Direction::both;
    if (up) return Direction::nondecreasing;
    if (down) return Direction::nonincreasing;
    throw std::invalid_argument("degree sequence is not monotone");
}

bool validate_path(const PathRecord& p, const Graph& g) {
    if (p.vertices.empty()) return false;
    if (p.degree_seq.size() != p.vertices.size()) return false;
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        int v = p.vertices[i];
        if (v < 0 || v >= g.order()) return false;
        if (seen >> v & 1u) return false;
        seen |= 1ull << v;
        if (g.degree(v) != p.degree_seq[i]) return false;
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    try {
        Direction d = classify_direction(p.degree_seq);
        if (d == Direction::both) return p.direction == Direction::both;
        return p.direction == d;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace dmp
