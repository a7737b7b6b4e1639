#ifndef SPECHT_CLASSIFY_HPP
#define SPECHT_CLASSIFY_HPP

#include "specht/fock.hpp"
#include "specht/partition.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace specht {

enum class Verdict { Irreducible, Reducible };

// disconnected-ladder test: a reducibility certificate on its own
enum class LadderVerdict { ReducibleByLadder, NotCovered };
LadderVerdict ladder_criterion(const Partition& lambda);

// alternating criterion for 2-regular (or, via conjugation, 2-restricted)
// partitions; rejects everything else
Verdict carter_classifier(const Partition& lambda);

struct FMReport {
    bool is_fm = false;
    int a = 0;  // last row with a gap of at least 2
    int b = 0;  // last row repeated below
    int c = 0;  // rows remaining strictly below row a
    std::optional<std::string> failed_condition;
};

// requires lambda neither 2-regular nor 2-restricted
FMReport fm_report(const Partition& lambda);

// irreducible iff lambda or its conjugate passes the FM shape conditions
Verdict conjecture_classifier(const Partition& lambda);

// ground truth: irreducible iff the composition length from the canonical
// basis specialisation is 1
Verdict oracle_classifier(const Partition& lambda, DecompCache& cache);

enum class StepKind { Conjugate, AddResidue, RemoveResidue };

struct ReductionStep {
    StepKind kind = StepKind::Conjugate;
    int residue = -1;  // for AddResidue / RemoveResidue
    std::string justification;
};

struct RouquierCert {
    Partition horizontal, vertical;
    long long support_size = 0;
};

struct CarterPayneCert {
    Partition mu;
    int removable_ladder = 0;  // l
    int addable_ladder = 0;    // m > l, same parity
};

struct PermHomCert {
    Partition nu, xi, mu;
};

struct FockDegreeCert {
    Partition mu, mu_hat;
    int x = 0;
    long long degree = 0, degree_hat = 0;
};

using TerminalCert = std::variant<RouquierCert, CarterPayneCert, PermHomCert, FockDegreeCert>;

struct Witness {
    Partition lambda;
    std::vector<ReductionStep> steps;
    TerminalCert terminal;

    // partition the terminal certificate talks about
    Partition reduced() const;
};

// replay of the case analysis proving reducibility for a disconnected-ladder
// partition; throws std::invalid_argument when no ladder is disconnected
Witness build_witness(const Partition& lambda);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // set when !ok
};

// re-derives every step and the terminal certificate from scratch; for
// perm-hom terminals with |λ| <= 14 the homomorphism is rebuilt and its
// image checked inside the Specht module symbolically
VerifyResult verify_witness(const Partition& lambda, const Witness& witness);

const char* step_kind_name(StepKind k);
const char* terminal_type_name(const TerminalCert& t);

}  // namespace specht

#endif
