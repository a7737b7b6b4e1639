#include "specht/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace specht {

namespace {

Partition staircase(int l) {
    std::vector<int> parts;
    for (int i = l; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

// -1 if p is not of the form (l, l-1, ..., 1)
int staircase_length(const Partition& p) {
    int l = p.rows();
    for (int i = 1; i <= l; ++i)
        if (p.part(i) != l + 1 - i) return -1;
    return l;
}

}  // namespace

BlockData core_and_weight(const Partition& p) {
    int rows = p.rows();
    std::vector<long long> beads[2];
    for (int i = 1; i <= rows; ++i) {
        long long beta = p.part(i) + (rows - i);
        beads[beta % 2].push_back(beta / 2);
    }
    int weight = 0;
    std::vector<long long> core_betas;
    for (int r = 0; r < 2; ++r) {
        std::sort(beads[r].begin(), beads[r].end(), std::greater<>());
        long long count = static_cast<long long>(beads[r].size());
        for (long long k = 0; k < count; ++k) {
            weight += static_cast<int>(beads[r][k] - (count - 1 - k));
            core_betas.push_back(2 * (count - 1 - k) + r);
        }
    }
    std::sort(core_betas.begin(), core_betas.end(), std::greater<>());
    std::vector<int> parts;
    for (size_t i = 0; i < core_betas.size(); ++i) {
        int part = static_cast<int>(core_betas[i]) - (rows - 1 - static_cast<int>(i));
        if (part > 0) parts.push_back(part);
    }
    BlockData out;
    out.core = Partition(std::move(parts));
    out.weight = weight;
    out.core_length = staircase_length(out.core);
    if (out.core_length < 0) throw std::logic_error("2-core is not a staircase");
    return out;
}

BlockData core_and_weight_stripped(const Partition& p, bool bottom_up) {
    std::vector<int> parts(p.parts());
    auto part_at = [&](int i) { return i >= 1 && i <= (int)parts.size() ? parts[i - 1] : 0; };
    int weight = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        int n = static_cast<int>(parts.size());
        for (int step = 0; step < n && !progress; ++step) {
            int i = bottom_up ? n - step : 1 + step;
            bool horiz_ok = part_at(i) >= 2 && part_at(i) - 2 >= part_at(i + 1);
            bool vert_ok = part_at(i) >= 1 && part_at(i) == part_at(i + 1) &&
                           part_at(i + 1) > part_at(i + 2);
            if (bottom_up ? vert_ok : horiz_ok) {
                if (bottom_up) {
                    parts[i - 1] -= 1;
                    parts[i] -= 1;
                } else {
                    parts[i - 1] -= 2;
                }
                progress = true;
            } else if (bottom_up ? horiz_ok : vert_ok) {
                if (bottom_up) {
                    parts[i - 1] -= 2;
                } else {
                    parts[i - 1] -= 1;
                    parts[i] -= 1;
                }
                progress = true;
            }
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        if (progress) ++weight;
    }
    BlockData out;
    out.core = Partition(parts);
    out.weight = weight;
    out.core_length = staircase_length(out.core);
    if (out.core_length < 0) throw std::logic_error("stripping did not reach a staircase");
    return out;
}

int weight_of(const Partition& p) { return core_and_weight(p).weight; }

bool same_block(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("same_block requires partitions of equal size");
    return core_and_weight(a).core == core_and_weight(b).core;
}

bool is_rouquier(const Partition& p) {
    BlockData bd = core_and_weight(p);
    return bd.weight <= bd.core_length + 1;
}

TwoQuotient two_quotient(const Partition& p) {
    BlockData bd = core_and_weight(p);
    if (bd.weight > bd.core_length + 1)
        throw std::invalid_argument("two_quotient requires a Rouquier-block partition");
    // Peel removable dominoes down to the core. The tiling of [λ]\[core] is
    // unique here, so any removal order recovers it, and no removable domino
    // ever meets the core (the core diagram is contained in every partition
    // with that core).
    std::vector<int> parts(p.parts());
    auto part_at = [&](int i) { return i >= 1 && i <= (int)parts.size() ? parts[i - 1] : 0; };
    std::vector<int> horiz_per_row, vert_per_col;
    auto bump = [](std::vector<int>& v, int idx) {
        if ((int)v.size() < idx) v.resize(idx, 0);
        v[idx - 1] += 1;
    };
    int removed = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        int n = static_cast<int>(parts.size());
        for (int i = 1; i <= n && !progress; ++i) {
            if (part_at(i) >= 2 && part_at(i) - 2 >= part_at(i + 1)) {
                bump(horiz_per_row, i);
                parts[i - 1] -= 2;
                progress = true;
            } else if (part_at(i) >= 1 && part_at(i) == part_at(i + 1) &&
                       part_at(i + 1) > part_at(i + 2)) {
                bump(vert_per_col, part_at(i));
                parts[i - 1] -= 1;
                parts[i] -= 1;
                progress = true;
            }
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        if (progress) ++removed;
    }
    if (Partition(parts) != bd.core || removed != bd.weight)
        throw std::logic_error("domino peeling did not reach the core");
    TwoQuotient out;
    out.horizontal = Partition(horiz_per_row);
    out.vertical = Partition(vert_per_col);
    return out;
}

Partition from_quotient(const Partition& core, const Partition& horizontal,
                        const Partition& vertical) {
    int l = staircase_length(core);
    if (l < 0) throw std::invalid_argument("from_quotient: core must be a staircase");
    int w = horizontal.size() + vertical.size();
    if (w > l + 1)
        throw std::invalid_argument("from_quotient: weight exceeds the Rouquier bound");
    // Row tails of horizontal dominoes and column tails of vertical dominoes
    // cannot overlap when w <= l+1, so the diagram is just the union.
    std::vector<int> row_len(static_cast<size_t>(l + 1), 0);
    for (int i = 1; i <= l + 1; ++i) row_len[i - 1] = core.part(i) + 2 * horizontal.part(i);
    // extend columns downward
    std::vector<int> col_height(static_cast<size_t>(std::max(core.part(1), vertical.rows())) + 1, 0);
    for (int j = 1; j <= (int)col_height.size(); ++j) {
        int base = 0;
        for (int i = 1; i <= core.rows(); ++i)
            if (core.part(i) >= j) base = i;
        col_height[j - 1] = base + 2 * vertical.part(j);
    }
    int max_rows = l + 1;
    for (int h : col_height) max_rows = std::max(max_rows, h);
    std::vector<int> parts(static_cast<size_t>(max_rows), 0);
    for (int i = 1; i <= l + 1; ++i) parts[i - 1] = row_len[i - 1];
    for (int j = 1; j <= (int)col_height.size(); ++j)
        for (int i = 1; i <= col_height[j - 1]; ++i)
            parts[i - 1] = std::max(parts[i - 1], j);
    Partition result(parts);
    TwoQuotient check = two_quotient(result);
    if (check.horizontal != horizontal || check.vertical != vertical ||
        core_and_weight(result).core != core)
        throw std::logic_error("from_quotient round trip failed");
    return result;
}

}  // namespace specht
