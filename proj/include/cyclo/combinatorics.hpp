#ifndef CYCLO_COMBINATORICS_HPP
#define CYCLO_COMBINATORICS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

struct Partition {
    std::vector<int> rows;  // weakly decreasing, positive

    int size() const;
    int length() const { return static_cast<int>(rows.size()); }
    bool empty() const { return rows.empty(); }
    /// Number of cells in column c (1-based).
    int column_length(int c) const;
    bool contains(int r, int c) const;
    bool is_valid() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// A node of an m-partition: row r, column s, component p (all 1-based).
struct MNode {
    int row = 1;
    int col = 1;
    int pos = 1;

    bool operator==(const MNode&) const = default;
};

/// Canonical order on nodes: component, then row, then column.
inline std::strong_ordering node_order(const MNode& a, const MNode& b) {
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
}

struct MPartition {
    std::vector<Partition> components;

    MPartition() = default;
    explicit MPartition(std::vector<Partition> c) : components(std::move(c)) {}
    static MPartition empty(int m);

    int m() const { return static_cast<int>(components.size()); }
    int size() const;
    bool contains(const MNode& x) const;
    bool is_valid() const;
    MPartition with_node(const MNode& x) const;
    MPartition without_node(const MNode& x) const;
    std::vector<MNode> nodes() const;

    /// Text form such as [[2,1],[],[1]].
    std::string to_string() const;

    bool operator==(const MPartition&) const = default;
};

/// Parses [[2,1],[],[1]]; throws ParseError with position.
MPartition parse_mpartition(std::string_view text);
/// Parses a partition [2,1] or [[2,1]] into a 1-partition.
MPartition parse_shape(std::string_view text, int m);

enum class BoundaryKind { Removable, Addable };

/// Content pair (k, z) standing for v_k q^{2z}.
struct ContentEntry {
    int k = 1;
    int z = 0;

    bool operator==(const ContentEntry&) const = default;
    auto operator<=>(const ContentEntry&) const = default;
};

struct ContentString {
    std::vector<ContentEntry> entries;

    std::size_t size() const { return entries.size(); }
    bool operator==(const ContentString&) const = default;
    auto operator<=>(const ContentString&) const = default;
    std::string to_string(int m) const;
};

class StandardMTableau {
public:
    StandardMTableau() = default;
    /// nodes[i-1] carries the entry i. Throws PreconditionError when not standard.
    StandardMTableau(MPartition shape, std::vector<MNode> nodes);

    const MPartition& shape() const { return shape_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    int m() const { return shape_.m(); }
    const MNode& node_of(int i) const { return nodes_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<MNode>& nodes() const { return nodes_; }
    /// Entry at node, 0 if absent.
    int entry_at(const MNode& x) const;
    /// The tableau formed by entries 1..size()-1.
    StandardMTableau restricted() const;

    /// Text form such as [[[1,2],[3]],[[4]]].
    std::string to_string() const;

    bool operator==(const StandardMTableau&) const = default;

private:
    MPartition shape_;
    std::vector<MNode> nodes_;
};

/// Lexicographic comparison of the node sequences of entries 1..n.
std::strong_ordering tableau_order(const StandardMTableau& a, const StandardMTableau& b);
bool is_standard(const MPartition& shape, const std::vector<MNode>& nodes);

StandardMTableau parse_tableau(std::string_view text);

std::vector<Partition> enumerate_partitions(int n);
std::vector<MPartition> enumerate_mpartitions(int m, int n);
std::vector<MNode> boundary_nodes(const MPartition& lambda, BoundaryKind kind);

ContentEntry content_entry(const MNode& x);
/// v_p q^{2(s-r)} over m parameters.
RatFn content(const MNode& x, int m);
RatFn content_value(const ContentEntry& c, int m);

std::vector<StandardMTableau> enumerate_standard_tableaux(const MPartition& lambda);

ContentString content_string(const StandardMTableau& t);

struct ContentStringReport {
    enum class Condition { None, StartsAtParameter, HasNeighbour, RepeatSeparated, OutOfRange };
    bool ok = true;
    Condition condition = Condition::None;
    int index = 0;  // 1-based entry at which the violation was detected

    std::string describe() const;
};

ContentStringReport is_content_string(const ContentString& s, int m);
/// Throws ContentStringError carrying the report when s is invalid.
StandardMTableau string_to_tableau(const ContentString& s, int m);

/// nullopt is the non-standard marker.
std::optional<StandardMTableau> apply_adjacent_transposition(const StandardMTableau& t, int i);

BigInt dim_mpartition(const MPartition& lambda);
BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace cyclo

#endif
