#include "specht/lr.hpp"

#include "specht/blocks.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace specht {

namespace {

// Cells of outer/left in reverse reading order (rows top to bottom, each row
// right to left). Filling in this order lets every constraint be checked as
// the cell is placed: the row neighbour to the right and the full row above
// are already set, and the lattice prefix counts are exactly the cells so far.
struct SkewFiller {
    const Partition& outer;
    const Partition& left;
    const Partition& right;
    std::vector<std::vector<int>> entry;  // 0 = unfilled
    std::vector<int> used;                // per value, cells placed so far
    long long count = 0;

    SkewFiller(const Partition& o, const Partition& l, const Partition& r)
        : outer(o), left(l), right(r) {
        entry.assign(outer.rows(), {});
        for (int i = 1; i <= outer.rows(); ++i)
            entry[i - 1].assign(outer.part(i), 0);
        used.assign(right.rows() + 1, 0);
    }

    void fill(int row, int col) {
        while (row <= outer.rows() && col <= left.part(row)) {
            ++row;
            col = row <= outer.rows() ? outer.part(row) : 0;
        }
        if (row > outer.rows()) {
            ++count;
            return;
        }
        int lo = 1, hi = right.rows();
        if (col < outer.part(row)) hi = std::min(hi, entry[row - 1][col]);  // right neighbour
        if (row > 1 && col <= outer.part(row - 1) && col > left.part(row - 1))
            lo = std::max(lo, entry[row - 2][col - 1] + 1);  // column strict
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= right.part(v)) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice prefix
            entry[row - 1][col - 1] = v;
            ++used[v];
            if (col > 1)
                fill(row, col - 1);
            else
                fill(row + 1, row + 1 <= outer.rows() ? outer.part(row + 1) : 0);
            --used[v];
            entry[row - 1][col - 1] = 0;
        }
    }
};

std::map<std::tuple<Partition, Partition, Partition>, long long> lr_memo;
std::mutex lr_memo_mutex;

}  // namespace

long long lr_coefficient(const Partition& outer, const Partition& left,
                         const Partition& right) {
    if (outer.size() != left.size() + right.size()) return 0;
    if (!outer.contains_diagram(left)) return 0;
    if (right.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(lr_memo_mutex);
        auto it = lr_memo.find({outer, left, right});
        if (it != lr_memo.end()) return it->second;
    }
    SkewFiller filler(outer, left, right);
    filler.fill(1, outer.part(1));
    std::lock_guard<std::mutex> lock(lr_memo_mutex);
    lr_memo[{outer, left, right}] = filler.count;
    return filler.count;
}

std::vector<Partition> lr_support(const Partition& left, const Partition& right) {
    std::vector<Partition> out;
    for (auto& outer : partitions_of(left.size() + right.size()))
        if (lr_coefficient(outer, left, right) > 0) out.push_back(outer);
    return out;
}

long long rouquier_decomposition_number(const Partition& lambda, const Partition& mu) {
    if (!is_regular(mu))
        throw std::invalid_argument("rouquier_decomposition_number: mu must be 2-regular");
    if (lambda.size() != mu.size() || !same_block(lambda, mu) || !is_rouquier(lambda))
        throw std::invalid_argument(
            "rouquier_decomposition_number: inputs must share a Rouquier block");
    TwoQuotient ql = two_quotient(lambda);
    TwoQuotient qm = two_quotient(mu);
    return lr_coefficient(qm.horizontal, ql.horizontal, ql.vertical);
}

}  // namespace specht
