#pragma once

#include <optional>
#include <string>
#include <vector>

#include "talex/fox.hpp"

namespace talex {

// Braid word on `strands` strands; letters are ±k for sigma_k^{±1}, 1-based.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
};

// Grammar: `s1`, `s2^-3`, parenthesized groups `( ... )^m`, whitespace
// separated. Strand count defaults to (max index + 1) unless given.
BraidWord parse_braid(const std::string& text, int strands = 0);

struct Crossing {
    int over = -1;       // arc passing over
    int under_in = -1;   // arc ending here
    int under_out = -1;  // arc starting here
    int sign = 0;        // ±1
};

// Oriented link diagram. Arcs are the Wirtinger arcs (cut at under-passes);
// each arc has exactly one successor along its component, except free loops
// (crossing-free unknot components).
//
// Crossing sign convention, pinned by one picture: strands of a braid run
// downward and sigma_k (positive letter) passes the strand in position k OVER
// its right neighbour:
//
//      over  under           sign +1:  the under-strand crosses from the
//        \    /                         right to the left underneath the
//         \  /                          over-strand (both heading down).
//          \/
//          /\
//         /  \
//        v    v
//
// sigma_k^{-1} is the mirror crossing with sign -1.
class LinkDiagram {
public:
    LinkDiagram(int arc_count, std::vector<Crossing> crossings);

    int arc_count() const { return arc_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    // arc cycles in traversal order, one per component, ordered by least arc
    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of(int arc) const { return comp_of_.at(arc); }
    bool is_free_loop(int comp) const;

    // crossing where the arc ends (it is the under_in there); -1 for free loops
    int ending_crossing(int arc) const { return end_crossing_.at(arc); }

private:
    int arc_count_;
    std::vector<Crossing> crossings_;
    std::vector<int> comp_of_;
    std::vector<std::vector<int>> components_;
    std::vector<int> end_crossing_;
};

// Closure of a braid, all strands coherently oriented.
LinkDiagram diagram_from_braid(const BraidWord& b);

// Closure of the braid together with an unknotted axis encircling all
// strands, oriented so that 1/q-surgery on the axis inserts q positive full
// twists on the strands. The axis is the last component and its crossings
// all carry sign +1, so lk(component, axis) = number of strands in the
// component.
LinkDiagram braid_closure_with_axis(const BraidWord& b);

// PD code text: crossings `X[a,b,c,d]` with 1-based edge labels listed
// counterclockwise starting at the incoming under-edge a (so c is the
// outgoing under-edge), plus optional `O[a]` tokens for crossing-free unknot
// components. Edges are numbered consecutively along the orientation within
// each component. At X[a,b,c,d], the over-strand enters at b (sign +1) or at
// d (sign -1), decided by which of b,d is succeeded by the other.
LinkDiagram parse_pd(const std::string& text);

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

// Zero-framed longitude of the component as a word in arc generators,
// starting at the component's first arc. Reads the over-generators (with
// crossing signs) at the component's under-passes, composed in reverse
// traversal order, then appends the framing power of the starting generator
// that kills the self-component exponent.
Word longitude_word(const LinkDiagram& d, int comp);

struct WirtingerPresentation {
    int generator_count = 0;                // arcs; generators x0..x_{n}
    std::vector<Word> relators;             // one per crossing, one omitted
    std::vector<int> relator_crossing;      // crossing index of each relator
    std::vector<int> gen_arc;               // generator index -> arc id
    std::vector<int> arc_gen;               // arc id -> generator index
    std::vector<int> gen_component;         // generator index -> component
    int omitted_crossing = -1;
    int distinguished_meridian = -1;        // generator index of x_n
    int surgery_component = -1;             // -1 when none designated
    const LinkDiagram* diagram = nullptr;   // source diagram (not owned)

    int rank() const { return generator_count; }
};

// Wirtinger presentation with one relator omitted. When a surgery component
// is designated (surgery_component >= 0): x_n is a meridian of it, x0 a
// meridian of the first other component, and the omitted relator avoids the
// surgery component entirely when possible (never its under-strand).
WirtingerPresentation wirtinger(const LinkDiagram& d, int surgery_component = -1);

// Relator at `crossing`: out^{-1} over^{s} in over^{-s} in generator indices.
Word wirtinger_relator(const LinkDiagram& d, const std::vector<int>& arc_gen, int crossing);

}  // namespace talex
