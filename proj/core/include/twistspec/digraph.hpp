#pragma once

#include "twistspec/curves.hpp"
#include "twistspec/linear_map.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistspec {

// How matrix entries translate into directed edges. Under ColumnsAsImages
// the entry M[v][u] counts edges u -> v (column u is the image of u);
// RowsAsImages reads M[u][v] as the count of edges u -> v.
enum class Orientation { ColumnsAsImages, RowsAsImages };

const char* orientation_label(Orientation o);  // "columns" / "rows"

struct Digraph {
    int n = 0;
    Orientation orientation = Orientation::ColumnsAsImages;
    LinearMap adj;                   // adj.at(u, v) = multiplicity of u -> v
    std::vector<std::string> names;  // vertex names, "a0" ... "d7" or "v0" ...
};

Digraph from_matrix(const LinearMap& m, Orientation o);
// same, with curve names attached as vertex labels
Digraph from_matrix(const CurveSystem& sys, const LinearMap& m, Orientation o);

// nonzero diagonal entries (orientation-independent)
std::map<int, Int> self_loop_census(const Digraph& g);

// number of directed edge-paths of length j starting at each vertex
// (row sums of the j-th power of the adjacency matrix)
std::vector<Int> path_counts(const Digraph& g, int j);

// vertices reachable from v by a directed path of length exactly k
std::vector<int> exact_length_cover(const Digraph& g, int v, int k);

// least r <= cap with every entry of M^r positive; nullopt = exceeds cap
std::optional<int> primitivity_exponent(const LinearMap& m, int cap);

bool is_strongly_connected(const Digraph& g);
bool is_strongly_connected(const LinearMap& m);

// gcd of directed cycle lengths (requires strong connectivity);
// primitive <=> strongly connected with period 1
int graph_period(const LinearMap& m);

// one "u v multiplicity" line per edge, sorted by vertex position
std::string to_edge_list(const Digraph& g);

}  // namespace twistspec
