#pragma once

#include <vector>

#include "dmp/graph.hpp"

namespace dmp {

enum class Direction { nondecreasing, nonincreasing, both };

const char* to_string(Direction d);

// A degree monotone path. Length counts vertices: a single edge is a path of
// length 2, an isolated vertex a path of length 1.
struct PathRecord {
    std::vector<int> vertices;
    std::vector<int> degree_seq;
    Direction direction = Direction::both;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Throws std::invalid_argument when the sequence is not monotone either way.
Direction classify_direction(const std::vector<int>& degree_seq);

// True when the record is a real path of g: distinct vertices, consecutive
// ones adjacent, degrees match the host graph and the direction tag fits.
bool validate_path(const PathRecord& p, const Graph& g);

}  // namespace dmp
