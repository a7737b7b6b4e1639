#ifndef SPECHT_LR_HPP
#define SPECHT_LR_HPP

#include "specht/partition.hpp"

namespace specht {

// Littlewood-Richardson coefficient c^{outer}_{left,right}: the number of
// semistandard fillings of outer/left with content right whose reverse
// reading word is a lattice word. 0 on size mismatch or left ⊄ outer.
long long lr_coefficient(const Partition& outer, const Partition& left,
                         const Partition& right);

// all outer with |outer| = |left|+|right| and positive coefficient
std::vector<Partition> lr_support(const Partition& left, const Partition& right);

// decomposition number in a Rouquier block via quotients:
// c^{mu^h}_{lambda^h, lambda^v}; requires a common Rouquier block and mu 2-regular
long long rouquier_decomposition_number(const Partition& lambda, const Partition& mu);

}  // namespace specht

#endif
