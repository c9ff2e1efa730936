#pragma once

#include <functional>
#include <vector>

#include "lahkit/weightspec.hpp"

namespace lahkit {

// Increasing ordered forest on the vertex set {1..n}.  Every child label
// exceeds its parent label, child lists are ordered.  For the unordered
// view the roots are kept sorted ascending (each root is the minimum of its
// tree, so this is canonical); for the ordered view the root list order is
// significant.
struct Forest {
    int n = 0;
    std::vector<int> roots;
    // children[v] for v in 1..n; children[0] unused.
    std::vector<std::vector<int>> children;

    Forest() : children(1) {}
    explicit Forest(int n_) : n(n_), children(n_ + 1) {}

    int k() const { return static_cast<int>(roots.size()); }
    int degree(int v) const { return static_cast<int>(children[v].size()); }
    bool valid() const;

    friend bool operator==(const Forest&, const Forest&) = default;
};

// Labeled reversed partial Lukasiewicz path: starts at height k, steps
// s_j >= -1, heights stay >= 1 until the final step lands at 0; labels
// 1 <= xi_j <= h_{j-1}.
struct LukPath {
    int start_height = 0;
    std::vector<int> steps;
    std::vector<int> labels;

    std::vector<int> heights() const; // h_0..h_n
    void validate() const;            // throws invalid_path

    friend bool operator==(const LukPath&, const LukPath&) = default;
};

// Visit every increasing forest on {1..n} with k components exactly once.
// ordered = true visits ordered forests (k! per unordered forest).
// Throws cap_exceeded when n exceeds the cap.
void enumerate_increasing_forests(int n, int k, bool ordered,
                                  const std::function<void(const Forest&)>& visit,
                                  int cap = 8);

// Convenience: all forests with k components collected into a vector.
std::vector<Forest> list_increasing_forests(int n, int k, bool ordered, int cap = 8);

// Level of vertex j (Definition: children of vertices < j with labels > j,
// plus k+1-r_j where r_j counts trees whose minimum vertex is <= j).
int vertex_level(const Forest& f, int j);

// Generic/refined Lah polynomial by direct summation over unordered
// forests: sum over forests of prod_v phi_{deg(v)}^{[lev(v)]} under the
// weight spec's symbol mapping.
MPoly lah_brute(int n, int k, const WeightSpec& w, int cap = 8);

// The forest -> labeled-path bijection and its inverse.
LukPath forest_to_path(const Forest& f);
Forest path_to_forest(const LukPath& p);

// Set partition of {1..n} whose blocks carry Stirling-permutation
// decorations: block i is decorated by a word with exactly `copies` copies
// of each of its letters, subject to the Stirling condition.
struct StirlingSetPartition {
    std::vector<std::vector<int>> blocks;      // each ascending, by minimum
    std::vector<std::vector<int>> decorations; // one word per block
    bool valid(int copies) const;
};

// Visit every set partition of {1..n} decorated with Stirling permutations
// of `copies` copies per letter.
void enumerate_stirling_set_partitions(
    int n, int copies, const std::function<void(const StirlingSetPartition&)>& visit);

// Generating polynomial of (r-1)-Stirling set partitions of [n] in
// x_1..x_r, y: weight y per block; x_i when the i-th occurrence of a letter
// ends a descent (i <= r-1); x_r when the last occurrence of a letter
// begins an ascent.  For r = 1 the decoration is empty and each block of
// size b carries x_1^{b-1} (the homogenized Bell weight).
MPoly stirling_genpoly(int n, int r, int cap = 7);

// Stirling-word validity check: between two occurrences of a letter only
// letters >= it may appear.
bool is_stirling_word(const std::vector<int>& word);

// All set partitions of {1..n} as lists of blocks (each block ascending,
// blocks ordered by minimum).
void enumerate_set_partitions(int n,
                              const std::function<void(const std::vector<std::vector<int>>&)>& visit);

} // namespace lahkit
