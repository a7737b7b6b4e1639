#ifndef SPECHT_BLOCKS_HPP
#define SPECHT_BLOCKS_HPP

#include "specht/partition.hpp"

namespace specht {

// 2-core (always a staircase (l,l-1,...,1)) and number of dominoes removed
struct BlockData {
    Partition core;
    int weight = 0;
    int core_length = 0;  // l, with core = (l,...,1)
};

// beta-number runner computation; independent of any removal order
BlockData core_and_weight(const Partition& p);

// reference implementation by literally stripping removable dominoes;
// bottom_up toggles the greedy scan direction (used for invariance checks)
BlockData core_and_weight_stripped(const Partition& p, bool bottom_up);

int weight_of(const Partition& p);

// same size and same 2-core
bool same_block(const Partition& a, const Partition& b);

// weight at most core length + 1
bool is_rouquier(const Partition& p);

struct TwoQuotient {
    Partition horizontal;  // λ^h: horizontal dominoes per row of [λ]\[core]
    Partition vertical;    // λ^v: vertical dominoes per column of [λ]\[core]
    friend bool operator==(const TwoQuotient&, const TwoQuotient&) = default;
};

// requires is_rouquier(p): the domino tiling of [λ]\[core] is then unique
TwoQuotient two_quotient(const Partition& p);

// inverse of two_quotient for staircase cores with |h|+|v| <= core_length+1
Partition from_quotient(const Partition& core, const Partition& horizontal,
                        const Partition& vertical);

}  // namespace specht

#endif
