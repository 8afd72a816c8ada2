#pragma once

#include <string>
#include <vector>

namespace hallq {

using DimVec = std::vector<int>;

struct Arrow {
    int src = 0;  // vertex index h'
    int dst = 0;  // vertex index h''
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// A loop-free quiver. Vertices carry user-facing integer labels; all
// internal indexing is positional.
struct Quiver {
    std::vector<int> labels;
    std::vector<Arrow> arrows;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int arrow_count() const { return static_cast<int>(arrows.size()); }
    // index of a labelled vertex; throws on unknown labels
    int index_of(int label) const;
    void validate() const;  // loop-free, arrow endpoints in range

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

// Built-in presets: "a2" (1 -> 2), "a3" (1 -> 2 -> 3), "two-points"
// (two vertices, no arrows).
Quiver quiver_preset(const std::string& name);

// <a,b> = sum_i a_i b_i - sum_h a_{h'} b_{h''}
long long euler_form(const Quiver& quiver, const DimVec& a, const DimVec& b);

DimVec dim_add(const DimVec& a, const DimVec& b);
bool dim_leq(const DimVec& a, const DimVec& b);  // componentwise
std::string dim_str(const DimVec& d);

}  // namespace hallq
