#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehpack/params.hpp"

namespace ehpack {

enum class Color { Blue, Red, Small };

const char* color_name(Color c);

struct PlacedItem {
    Rat side;
    std::vector<Rat> anchor;  // minimum corner
    Color color = Color::Blue;
    int typeIndex = 0;
};

struct BinLayout {
    int d = 2;
    std::vector<PlacedItem> items;
};

struct LayoutViolation {
    enum Kind { Overlap, Containment } kind;
    size_t first;
    size_t second;  // equals first for containment
    std::string describe() const;
};

// Digits (c_1..c_d) of cell `slot` in a beta^d grid, c_1 most significant.
std::vector<int> blue_cell(int beta, int d, long slot);
// Cell `slot` among the cells of a beta^d grid with some c_a >= beta - gamma, lexicographic order.
std::vector<int> red_cell(int beta, int gamma, int d, long slot);

// Anchors of type-i blue cells start at the origin corner; red cells hug the far corner (1,...,1).
std::vector<Rat> blue_slot(int i, long slot, const ParameterSet& p);
std::vector<Rat> red_slot(int j, long slot, const ParameterSet& p);

// Exact check: every item inside [0,1]^d and interiors pairwise disjoint.
std::optional<LayoutViolation> verify(const BinLayout& layout);

}  // namespace ehpack
