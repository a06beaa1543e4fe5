#ifndef CYCLO_BRATTELI_HPP
#define CYCLO_BRATTELI_HPP

#include <string>
#include <vector>

#include "cyclo/combinatorics.hpp"

namespace cyclo {

struct BratteliEdge {
    std::size_t upper;  // index in level a
    std::size_t lower;  // index in level a+1
    MNode node;         // the added node
    RatFn label;        // its content
};

struct BratteliGraph {
    int m = 1;
    std::vector<std::vector<MPartition>> levels;
    /// edges[a] joins level a to level a+1.
    std::vector<std::vector<BratteliEdge>> edges;

    int depth() const { return static_cast<int>(levels.size()) - 1; }
    /// Throws LookupError when the vertex is absent.
    std::size_t index_of(int level, const MPartition& v) const;
};

BratteliGraph young_graph_power(int m, int depth);

/// Number of descending paths from the root to every vertex, per level.
std::vector<std::vector<BigInt>> path_counts(const BratteliGraph& g);
BigInt vertex_dimension(const BratteliGraph& g, const MPartition& v);

/// dim of each m-partition of size n via the product rule C(a+b,b) dim(x) dim(y),
/// iterated over components with single-component path counts, compared with path counts.
bool check_product_dimension(int m, int n);

BigInt level_square_sum(const BratteliGraph& g, int a);

/// Sum of squared dimensions at level c of the m-th power, through the recursion over
/// the first component: sum_a C(c,a)^2 D_a(1) D_{c-a}(m-1).
BigInt level_square_sum_recursive(int m, int c);

std::string export_dot(const BratteliGraph& g);
std::string export_json(const BratteliGraph& g);

}  // namespace cyclo

#endif
