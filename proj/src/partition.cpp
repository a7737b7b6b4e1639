#include "specht/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text == "-") return Partition();
    if (text.empty()) throw std::invalid_argument("empty partition is written '-'");
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition token '" + tok + "'");
        }
        if (used != tok.size() || value <= 0)
            throw std::invalid_argument("bad partition token '" + tok + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool Partition::contains_diagram(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> parts;
    parts.reserve(p.part(1));
    for (int j = 1; j <= p.part(1); ++j) {
        int count = 0;
        for (int i = 1; i <= p.rows(); ++i)
            if (p.part(i) >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance requires partitions of equal size");
    int sa = 0, sb = 0;
    int n = std::max(a.rows(), b.rows());
    for (int i = 1; i <= n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<Node> addable_nodes(const Partition& p, std::optional<int> residue) {
    std::vector<Node> out;
    for (int i = 1; i <= p.rows() + 1; ++i) {
        if (i > 1 && p.part(i) == p.part(i - 1)) continue;
        Node n{i, p.part(i) + 1};
        if (!residue || node_residue(n) == *residue) out.push_back(n);
    }
    return out;
}

std::vector<Node> removable_nodes(const Partition& p, std::optional<int> residue) {
    std::vector<Node> out;
    for (int i = 1; i <= p.rows(); ++i) {
        if (p.part(i) == p.part(i + 1)) continue;
        Node n{i, p.part(i)};
        if (!residue || node_residue(n) == *residue) out.push_back(n);
    }
    return out;
}

std::vector<Node> LadderSegmentation::nodes() const {
    std::vector<Node> out;
    for (const auto& seg : segments)
        for (int r = seg.top_row; r < seg.top_row + seg.length; ++r)
            out.push_back(Node{r, index + 1 - r});
    return out;
}

int LadderSegmentation::node_count() const {
    int c = 0;
    for (const auto& seg : segments) c += seg.length;
    return c;
}

LadderSegmentation ladder(const Partition& p, int l) {
    if (l < 1) throw std::invalid_argument("ladder index must be positive");
    LadderSegmentation out;
    out.index = l;
    int run_start = 0;
    for (int i = 1; i <= l; ++i) {
        bool in = p.contains(Node{i, l + 1 - i});
        if (in && run_start == 0) run_start = i;
        if (!in && run_start != 0) {
            out.segments.push_back({run_start, i - run_start});
            run_start = 0;
        }
    }
    if (run_start != 0) out.segments.push_back({run_start, l + 1 - run_start});
    return out;
}

int max_ladder_index(const Partition& p) {
    if (p.empty()) return 0;
    return p.part(1) + p.rows() - 1;
}

bool has_gap_pair(const Partition& p) {
    int first_gap = 0;
    for (int i = 1; i <= p.rows(); ++i)
        if (p.part(i) - p.part(i + 1) >= 2) {
            first_gap = i;
            break;
        }
    if (first_gap == 0) return false;
    for (int b = first_gap + 1; b < p.rows(); ++b)
        if (p.part(b) == p.part(b + 1)) return true;
    return false;
}

std::optional<int> first_disconnected_ladder(const Partition& p) {
    std::optional<int> found;
    for (int l = 1; l <= max_ladder_index(p); ++l) {
        if (ladder(p, l).disconnected()) {
            found = l;
            break;
        }
    }
    assert(found.has_value() == has_gap_pair(p));
    return found;
}

Partition regularise(const Partition& p) {
    int top = max_ladder_index(p);
    std::vector<int> count(top + 1, 0);
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.part(i); ++j) ++count[i + j - 1];
    std::vector<int> parts;
    for (int i = 1;; ++i) {
        int row = 0;
        for (int l = 1; l <= top; ++l)
            if (count[l] >= i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

bool is_regular(const Partition& p, int e) {
    for (int i = 1; i + e - 1 <= p.rows(); ++i)
        if (p.part(i) == p.part(i + e - 1)) return false;
    return true;
}

bool is_restricted(const Partition& p, int e) {
    for (int i = 1; i <= p.rows(); ++i)
        if (p.part(i) - p.part(i + 1) >= e) return false;
    return true;
}

Partition add_full_residue(const Partition& p, int residue) {
    std::vector<int> parts(p.parts());
    parts.push_back(0);
    for (Node n : addable_nodes(p, residue)) parts[n.row - 1] += 1;
    return Partition(std::move(parts));
}

Partition remove_full_residue(const Partition& p, int residue) {
    std::vector<int> parts(p.parts());
    for (Node n : removable_nodes(p, residue)) parts[n.row - 1] -= 1;
    return Partition(std::move(parts));
}

Partition add_node(const Partition& p, Node n) {
    if (n.col != p.part(n.row) + 1 || (n.row > 1 && p.part(n.row - 1) < n.col))
        throw std::invalid_argument("not an addable node");
    std::vector<int> parts(p.parts());
    if (n.row > p.rows()) parts.push_back(0);
    parts[n.row - 1] += 1;
    return Partition(std::move(parts));
}

Partition remove_node(const Partition& p, Node n) {
    if (n.col != p.part(n.row) || p.part(n.row) == p.part(n.row + 1))
        throw std::invalid_argument("not a removable node");
    std::vector<int> parts(p.parts());
    parts[n.row - 1] -= 1;
    return Partition(std::move(parts));
}

bool is_alternating(const Partition& p) {
    for (int i = 1; i <= p.rows(); ++i) {
        if (p.part(i + 1) == 0) break;
        if ((p.part(i) + p.part(i + 1)) % 2 == 0) return false;
    }
    return true;
}

namespace {
void gen_partitions(int remaining, int cap, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        acc.push_back(next);
        gen_partitions(remaining - next, next, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

}  // namespace specht
