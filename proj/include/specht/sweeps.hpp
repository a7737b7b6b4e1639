#ifndef SPECHT_SWEEPS_HPP
#define SPECHT_SWEEPS_HPP

#include "specht/classify.hpp"
#include "specht/fock.hpp"

#include <string>
#include <vector>

namespace specht {

struct SweepResult {
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> counterexamples;  // sorted, deduplicated
};

// every disconnected-ladder partition has composition length >= 2
SweepResult sweep_theorem_main(int max_n, DecompCache& cache, int jobs);

// for partitions neither 2-regular nor 2-restricted: oracle irreducibility
// iff the partition or its conjugate passes the FM conditions
SweepResult sweep_conjecture(int max_n, DecompCache& cache, int jobs);

// for 2-regular partitions: oracle irreducibility iff alternating
SweepResult sweep_carter(int max_n, DecompCache& cache, int jobs);

// in every Rouquier block: d_{λμ}(1) equals the quotient LR coefficient
SweepResult sweep_rouquier(int max_n, DecompCache& cache, int jobs);

// every disconnected-ladder partition yields a witness that verifies, with
// the oracle agreeing on reducibility
SweepResult sweep_witness(int max_n, DecompCache& cache, int jobs);

}  // namespace specht

#endif
