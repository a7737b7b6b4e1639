#include "specht/sweeps.hpp"

#include "specht/blocks.hpp"
#include "specht/lr.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace specht {

namespace {

// work-stealing loop over a list of partitions; failures are collected and
// sorted so the output order is independent of scheduling
void parallel_check(const std::vector<Partition>& items, int jobs,
                    const std::function<bool(const Partition&)>& ok,
                    SweepResult& result) {
    jobs = std::max(1, jobs);
    std::atomic<size_t> next{0};
    std::mutex merge;
    auto worker = [&]() {
        std::vector<std::string> local;
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= items.size()) break;
            if (!ok(items[idx])) local.push_back(items[idx].str());
        }
        std::lock_guard<std::mutex> lock(merge);
        result.counterexamples.insert(result.counterexamples.end(), local.begin(),
                                      local.end());
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    result.checked += static_cast<long long>(items.size());
    std::sort(result.counterexamples.begin(), result.counterexamples.end());
    result.counterexamples.erase(
        std::unique(result.counterexamples.begin(), result.counterexamples.end()),
        result.counterexamples.end());
    result.pass = result.counterexamples.empty();
}

void warm(DecompCache& cache, int max_n) {
    for (int n = 0; n <= max_n; ++n) cache.get(n);
}

}  // namespace

SweepResult sweep_theorem_main(int max_n, DecompCache& cache, int jobs) {
    warm(cache, max_n);
    SweepResult result;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> items;
        for (auto& p : partitions_of(n))
            if (first_disconnected_ladder(p)) items.push_back(p);
        parallel_check(items, jobs,
                       [&](const Partition& p) { return composition_length(p, cache) >= 2; },
                       result);
    }
    return result;
}

SweepResult sweep_conjecture(int max_n, DecompCache& cache, int jobs) {
    warm(cache, max_n);
    SweepResult result;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> items;
        for (auto& p : partitions_of(n))
            if (!is_regular(p) && !is_restricted(p)) items.push_back(p);
        parallel_check(items, jobs,
                       [&](const Partition& p) {
                           bool fm = conjecture_classifier(p) == Verdict::Irreducible;
                           bool irr = oracle_classifier(p, cache) == Verdict::Irreducible;
                           return fm == irr;
                       },
                       result);
    }
    return result;
}

SweepResult sweep_carter(int max_n, DecompCache& cache, int jobs) {
    warm(cache, max_n);
    SweepResult result;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> items;
        for (auto& p : partitions_of(n))
            if (is_regular(p)) items.push_back(p);
        parallel_check(items, jobs,
                       [&](const Partition& p) {
                           bool alt = is_alternating(p);
                           bool irr = oracle_classifier(p, cache) == Verdict::Irreducible;
                           return alt == irr;
                       },
                       result);
    }
    return result;
}

SweepResult sweep_rouquier(int max_n, DecompCache& cache, int jobs) {
    warm(cache, max_n);
    SweepResult result;
    for (int n = 0; n <= max_n; ++n) {
        std::map<Partition, std::vector<Partition>> blocks;
        for (auto& p : partitions_of(n)) blocks[core_and_weight(p).core].push_back(p);
        std::vector<Partition> items;
        for (auto& [core, members] : blocks)
            if (is_rouquier(members.front()))
                items.insert(items.end(), members.begin(), members.end());
        parallel_check(items, jobs,
                       [&](const Partition& lam) {
                           const DecompositionMatrix& m = cache.get(lam.size());
                           for (auto& mu : m.cols) {
                               if (!same_block(lam, mu)) continue;
                               if (m.entry(lam, mu).at_one() !=
                                   rouquier_decomposition_number(lam, mu))
                                   return false;
                           }
                           return true;
                       },
                       result);
    }
    return result;
}

SweepResult sweep_witness(int max_n, DecompCache& cache, int jobs) {
    warm(cache, max_n);
    SweepResult result;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> items;
        for (auto& p : partitions_of(n))
            if (first_disconnected_ladder(p)) items.push_back(p);
        parallel_check(items, jobs,
                       [&](const Partition& p) {
                           try {
                               Witness w = build_witness(p);
                               if (!verify_witness(p, w).ok) return false;
                           } catch (const std::exception&) {
                               return false;
                           }
                           return oracle_classifier(p, cache) == Verdict::Reducible;
                       },
                       result);
    }
    return result;
}

}  // namespace specht
