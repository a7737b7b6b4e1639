#include "specht/fock.hpp"

#include "specht/json_io.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace specht {

FockVector fock_unit(const Partition& p) {
    FockVector v;
    v[p] = Laurent::one();
    return v;
}

namespace {

void add_scaled(FockVector& acc, const Partition& p, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = acc.find(p);
    if (it == acc.end()) {
        acc.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void axpy(FockVector& acc, const Laurent& scale, const FockVector& x) {
    for (auto& [p, c] : x) add_scaled(acc, p, scale * c);
}

}  // namespace

FockVector apply_divided_power(const FockVector& x, int residue, int mult) {
    if (residue != 0 && residue != 1)
        throw std::invalid_argument("residue must be 0 or 1");
    if (mult < 1) throw std::invalid_argument("divided power needs multiplicity >= 1");
    FockVector out;
    for (auto& [lam, coeff] : x) {
        std::vector<Node> adds = addable_nodes(lam, residue);
        int k = static_cast<int>(adds.size());
        if (mult > k) continue;
        std::vector<int> pick(mult);
        for (int i = 0; i < mult; ++i) pick[i] = i;
        while (true) {
            std::vector<int> parts(lam.parts());
            parts.push_back(0);
            std::vector<int> added_rows;
            for (int idx : pick) {
                parts[adds[idx].row - 1] += 1;
                added_rows.push_back(adds[idx].row);
            }
            Partition mu(parts);
            long long deg = 0;
            for (int j = 1; j <= mu.rows(); ++j) {
                if (lam.part(j) != mu.part(j)) continue;
                int below = 0;
                for (int r : added_rows)
                    if (r > j) ++below;
                if (below == 0) continue;
                int eps = node_residue({j, lam.part(j) + 1}) == residue ? 1 : -1;
                deg += eps * below;
            }
            add_scaled(out, mu, coeff * Laurent::monomial(1, static_cast<int>(deg)));
            // next mult-subset of the addable nodes
            int pos = mult - 1;
            while (pos >= 0 && pick[pos] == k - mult + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < mult; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return out;
}

FockVector apply_word(FockVector x, const LadderWord& word) {
    for (const WordStep& step : word) x = apply_divided_power(x, step.residue, step.mult);
    return x;
}

LadderWord ladder_word(const Partition& base, const Partition& target, int x) {
    if (x != 0 && x != 1) throw std::invalid_argument("residue must be 0 or 1");
    if (!target.contains_diagram(base))
        throw std::invalid_argument("ladder_word: base must fit inside target");
    for (int i = 1; i <= target.rows(); ++i)
        if (node_residue({i, base.part(i) + 1}) != x)
            throw std::invalid_argument("ladder_word: row " + std::to_string(i) +
                                        " is not aligned with residue " +
                                        std::to_string(x));
    LadderWord word;
    Partition cur = base;
    int step_residue = x;
    while (cur != target) {
        std::vector<int> parts(cur.parts());
        parts.push_back(0);
        int added = 0;
        for (Node n : addable_nodes(cur)) {
            if (!target.contains(n)) continue;
            assert(node_residue(n) == step_residue);
            parts[n.row - 1] += 1;
            ++added;
        }
        if (added == 0) throw std::logic_error("ladder_word: no progress");
        word.push_back({step_residue, added});
        cur = Partition(parts);
        step_residue = 1 - step_residue;
    }
    return word;
}

long long ladder_fill_degree(const Partition& base, const Partition& target, int x) {
    ladder_word(base, target, x);  // validate the alignment condition
    // label every cell of target \ base with the step that adds it
    std::vector<std::vector<int>> label(target.rows());
    for (int i = 1; i <= target.rows(); ++i) label[i - 1].assign(target.part(i), 0);
    Partition cur = base;
    for (int step = 1; cur != target; ++step) {
        std::vector<int> parts(cur.parts());
        parts.push_back(0);
        for (Node n : addable_nodes(cur)) {
            if (!target.contains(n)) continue;
            parts[n.row - 1] += 1;
            label[n.row - 1][n.col - 1] = step;
        }
        cur = Partition(parts);
    }
    std::vector<int> end_label(target.rows());
    for (int m = 1; m <= target.rows(); ++m) end_label[m - 1] = label[m - 1].back();
    long long total = 0;
    for (int k = 1; k <= target.rows(); ++k)
        for (int h = 1; h <= target.part(k); ++h) {
            int j = label[k - 1][h - 1];
            if (j == 0) continue;
            for (int m = 1; m < k; ++m) {
                int e = end_label[m - 1];
                if (e >= j) continue;
                total += (e % 2 != j % 2) ? 1 : -1;
            }
        }
    return total;
}

LadderWord regular_fill_word(const Partition& mu) {
    if (!is_regular(mu))
        throw std::invalid_argument("regular_fill_word needs a 2-regular partition");
    LadderWord word;
    for (int l = 1; l <= max_ladder_index(mu); ++l) {
        int count = ladder(mu, l).node_count();
        if (count > 0) word.push_back({(l + 1) % 2, count});
    }
    return word;
}

const Laurent& DecompositionMatrix::entry(const Partition& row, const Partition& col) const {
    static const Laurent zero;
    auto cit = columns.find(col);
    if (cit == columns.end()) throw std::invalid_argument("unknown canonical basis column");
    auto rit = cit->second.find(row);
    return rit == cit->second.end() ? zero : rit->second;
}

DecompositionMatrix canonical_basis(int n) {
    if (n < 0) throw std::invalid_argument("canonical_basis: negative size");
    DecompositionMatrix m;
    m.n = n;
    m.rows = partitions_of(n);  // generated in decreasing lexicographic order
    for (auto& p : m.rows)
        if (is_regular(p)) m.cols.push_back(p);

    // Increasing lexicographic order refines increasing dominance, so every
    // column that can appear in a reduction is already available.
    for (auto it = m.cols.rbegin(); it != m.cols.rend(); ++it) {
        const Partition& mu = *it;
        FockVector a = apply_word(fock_unit(Partition()), regular_fill_word(mu));
        auto diag = a.find(mu);
        if (diag == a.end() || diag->second != Laurent::one())
            throw std::logic_error("canonical basis: ladder monomial lost its lead term");
        size_t guard = m.cols.size() + 2;
        while (true) {
            if (guard-- == 0)
                throw std::logic_error("canonical basis: reduction did not terminate");
            // candidate rows whose coefficient is not yet divisible by v,
            // processed in decreasing dominance order
            std::vector<const Partition*> offenders;
            for (auto& [nu, coeff] : a)
                if (nu != mu && !coeff.divisible_by_v()) offenders.push_back(&nu);
            if (offenders.empty()) break;
            const Partition* pick = nullptr;
            for (const Partition* cand : offenders) {
                bool maximal = true;
                for (const Partition* other : offenders)
                    if (other != cand && dominates(*other, *cand) && *other != *cand) {
                        maximal = false;
                        break;
                    }
                if (maximal) {
                    pick = cand;
                    break;
                }
            }
            Partition nu = *pick;
            auto gcol = m.columns.find(nu);
            if (gcol == m.columns.end())
                throw std::logic_error("canonical basis: reduction hit an unknown column");
            Laurent beta;
            for (auto& [e, c] : a.find(nu)->second.terms()) {
                if (e > 0) continue;
                beta.add_term(e, c);
                if (e < 0) beta.add_term(-e, c);
            }
            axpy(a, Laurent::monomial(-1, 0) * beta, gcol->second);
            auto cleared = a.find(nu);
            if (cleared != a.end() && !cleared->second.divisible_by_v())
                throw std::logic_error("canonical basis: reduction failed to clear a row");
        }
        for (auto& [nu, coeff] : a) {
            if (!coeff.is_polynomial() || (nu != mu && !coeff.divisible_by_v()))
                throw std::logic_error("canonical basis: reduced vector is not canonical");
        }
        m.columns.emplace(mu, std::move(a));
    }
    return m;
}

std::string DecompCache::file_name(int n) {
    return "decomp_e2_n" + std::to_string(n) + ".json";
}

const DecompositionMatrix& DecompCache::get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = mem_.find(n);
    if (it != mem_.end()) return it->second;
    if (!dir_.empty()) {
        auto loaded = load_decomposition_matrix(dir_ / file_name(n), n);
        if (loaded) return mem_.emplace(n, std::move(*loaded)).first->second;
    }
    DecompositionMatrix computed = canonical_basis(n);
    if (!dir_.empty()) save_decomposition_matrix(computed, dir_ / file_name(n));
    return mem_.emplace(n, std::move(computed)).first->second;
}

Laurent v_decomposition_number(const Partition& lambda, const Partition& mu,
                               DecompCache& cache) {
    if (!is_regular(mu))
        throw std::invalid_argument("v_decomposition_number: mu must be 2-regular");
    if (lambda.size() != mu.size())
        throw std::invalid_argument("v_decomposition_number: sizes differ");
    return cache.get(lambda.size()).entry(lambda, mu);
}

long long composition_length(const Partition& lambda, DecompCache& cache) {
    const DecompositionMatrix& m = cache.get(lambda.size());
    long long total = 0;
    for (auto& mu : m.cols) total += m.entry(lambda, mu).at_one();
    return total;
}

std::optional<std::pair<long long, long long>> degree_mismatch_witness(
    const Partition& lambda, const Partition& base_x, const LadderWord& word_x,
    const Partition& base_y, const LadderWord& word_y, DecompCache& cache) {
    auto inner = [&](const Partition& base, const LadderWord& word) -> Laurent {
        const DecompositionMatrix& m = cache.get(base.size());
        auto col = m.columns.find(base);
        if (col == m.columns.end())
            throw std::invalid_argument("degree_mismatch_witness: base must be 2-regular");
        FockVector image = apply_word(col->second, word);
        auto it = image.find(lambda);
        return it == image.end() ? Laurent() : it->second;
    };
    auto dx = inner(base_x, word_x).monic_monomial_degree();
    auto dy = inner(base_y, word_y).monic_monomial_degree();
    if (!dx || !dy || *dx == *dy) return std::nullopt;
    return std::make_pair(static_cast<long long>(*dx), static_cast<long long>(*dy));
}

}  // namespace specht
