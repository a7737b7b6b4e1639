#ifndef SPECHT_PARTITION_HPP
#define SPECHT_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace specht {

// 1-based cell of N^2.
struct Node {
    int row = 1;
    int col = 1;
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

// residue of a node: (col - row) mod 2, in {0,1}
inline int node_residue(Node n) { return ((n.col - n.row) % 2 + 2) % 2; }

// ladder index of a node: the anti-diagonal i + j = l + 1 it sits on
inline int ladder_index(Node n) { return n.row + n.col - 1; }

// Weakly decreasing sequence of positive integers; trailing zeroes never
// stored, so the empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // text form: comma-separated parts, "-" for the empty partition
    static Partition parse(const std::string& text);
    std::string str() const;

    int size() const { return size_; }               // |λ|
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {                          // λ_i, 1-based, 0 beyond
        return i >= 1 && i <= rows() ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool contains(Node n) const { return n.row >= 1 && n.col >= 1 && n.col <= part(n.row); }
    bool contains_diagram(const Partition& inner) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition conjugate(const Partition& p);

// dominance order; both partitions must have the same size
bool dominates(const Partition& a, const Partition& b);

// addable/removable nodes in increasing row order, optionally filtered by residue
std::vector<Node> addable_nodes(const Partition& p, std::optional<int> residue = std::nullopt);
std::vector<Node> removable_nodes(const Partition& p, std::optional<int> residue = std::nullopt);

// one maximal run of consecutive ladder nodes present in the diagram
struct LadderSegment {
    int top_row = 0;  // row of the highest node of the run
    int length = 0;
};

struct LadderSegmentation {
    int index = 0;  // l
    std::vector<LadderSegment> segments;
    bool disconnected() const { return segments.size() >= 2; }
    std::vector<Node> nodes() const;
    int node_count() const;
};

LadderSegmentation ladder(const Partition& p, int l);

// largest l with a nonempty ladder (0 for the empty partition)
int max_ladder_index(const Partition& p);

// smallest l whose ladder is disconnected, or nullopt
std::optional<int> first_disconnected_ladder(const Partition& p);

// equivalent criterion: exist a < b with λ_a - λ_{a+1} >= 2 and λ_b = λ_{b+1} > 0
bool has_gap_pair(const Partition& p);

// push every ladder's nodes to the topmost positions in that ladder
Partition regularise(const Partition& p);

bool is_regular(const Partition& p, int e = 2);
bool is_restricted(const Partition& p, int e = 2);

// λ^{+i}: add every addable node of residue i
Partition add_full_residue(const Partition& p, int residue);
// λ^{-i}: remove every removable node of residue i
Partition remove_full_residue(const Partition& p, int residue);

Partition add_node(const Partition& p, Node n);
Partition remove_node(const Partition& p, Node n);

// every consecutive pair of parts sums to an odd number (or the next part is 0)
bool is_alternating(const Partition& p);

std::vector<Partition> partitions_of(int n);

}  // namespace specht

#endif
