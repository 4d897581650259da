#pragma once

#include "ygraph/rational.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ygraph {

/// A cell of a Young diagram; rows and columns are 1-based.
struct Box {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Box&, const Box&) = default;
};

inline int content(const Box& b) { return b.col - b.row; }

/// Young diagram stored as its weakly decreasing positive row lengths.
/// The empty diagram is the empty part list.
class YoungDiagram {
public:
    YoungDiagram() = default;
    /// Throws DomainError unless `parts` is weakly decreasing; trailing zeros are dropped.
    explicit YoungDiagram(std::vector<int> parts);
    YoungDiagram(std::initializer_list<int> parts) : YoungDiagram(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Length of row i (1-based); zero past the last row.
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    /// Length of column j (1-based).
    int column(int j) const;
    bool contains(const Box& b) const { return b.row >= 1 && b.col >= 1 && b.col <= row(b.row); }

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

YoungDiagram conjugate(const YoungDiagram& lambda);

/// h(b) = arm + leg + 1. Throws DomainError when b is not in lambda.
int hook_length(const YoungDiagram& lambda, const Box& b);

/// n! / prod h(b).
Integer dim(const YoungDiagram& lambda);

/// Number of paths from the empty diagram to lambda in the Young graph.
Integer dim_by_paths(const YoungDiagram& lambda);

/// Outer corners, sorted by row.
std::vector<Box> addable(const YoungDiagram& lambda);
/// Inner corners, sorted by row.
std::vector<Box> removable(const YoungDiagram& lambda);

YoungDiagram add_box(const YoungDiagram& lambda, const Box& b);
YoungDiagram remove_box(const YoungDiagram& lambda, const Box& b);

/// The single box of nu \ lambda when lambda -> nu is an edge of the Young graph.
std::optional<Box> edge_box(const YoungDiagram& lambda, const YoungDiagram& nu);

bool is_hook(const YoungDiagram& lambda);

struct FrobeniusCoords {
    std::vector<int> p;  ///< lambda_i - i, strictly decreasing
    std::vector<int> q;  ///< lambda'_i - i, strictly decreasing

    int rank() const { return static_cast<int>(p.size()); }
    /// p_i + 1/2
    std::vector<Rational> modified_p() const;
    /// q_i + 1/2
    std::vector<Rational> modified_q() const;

    friend bool operator==(const FrobeniusCoords&, const FrobeniusCoords&) = default;
};

/// Throws DomainError for the empty diagram.
FrobeniusCoords frobenius(const YoungDiagram& lambda);

/// Number of boxes of content -k.
int level_k(const YoungDiagram& lambda, int k);

struct BlockId {
    int p = 0;
    int q = 0;

    int k() const { return p - q; }
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

/// Diagrams containing the p x q rectangle and not the box (p+1, q+1).
bool in_Ypq(const YoungDiagram& lambda, int p, int q);

/// The block Y(p,q) with p - q = k containing lambda; the empty diagram maps to (0,0).
BlockId block_of(const YoungDiagram& lambda, int k);

/// (lambda+, lambda-) with lambda+_i = lambda_i - q (i <= p), lambda-_j = lambda'_j - p (j <= q).
std::pair<YoungDiagram, YoungDiagram> split_pm(const YoungDiagram& lambda, int p, int q);
/// Inverse of split_pm.
YoungDiagram join_pm(const YoungDiagram& plus, const YoungDiagram& minus, int p, int q);

/// The p x q rectangle, the smallest diagram of Y(p,q).
YoungDiagram rectangle(int p, int q);

/// All partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<YoungDiagram> partitions_of(int n);
/// Partitions of n with at most `max_rows` parts, reverse lexicographic.
std::vector<YoungDiagram> partitions_of(int n, int max_rows);

/// JSON array text, e.g. "[3,1,1]".
std::string to_json(const YoungDiagram& lambda);
YoungDiagram parse_diagram(std::string_view text);

}  // namespace ygraph
