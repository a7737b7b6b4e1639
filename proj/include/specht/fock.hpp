#ifndef SPECHT_FOCK_HPP
#define SPECHT_FOCK_HPP

#include "specht/laurent.hpp"
#include "specht/partition.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace specht {

// element of the level-1 Fock space: sparse combination of basis vectors s(λ)
using FockVector = std::map<Partition, Laurent>;

FockVector fock_unit(const Partition& p);

// f_i^{(a)} x: each s(λ) maps to Σ v^{N(λ,μ)} s(μ) over the ways of adding
// a addable nodes of residue i, where N counts added nodes below unchanged
// rows, signed by the residue of the row's next cell
FockVector apply_divided_power(const FockVector& x, int residue, int mult);

struct WordStep {
    int residue = 0;
    int mult = 1;
    friend bool operator==(const WordStep&, const WordStep&) = default;
};

// divided powers applied left to right (front() acts first)
using LadderWord = std::vector<WordStep>;

FockVector apply_word(FockVector x, const LadderWord& word);

// Word that grows base into target by repeatedly adding every addable node
// inside [target]. Requires base ⊆ target and that for every row i with
// target_i > 0 the cell (i, base_i + 1) has residue x; the step residues
// then alternate x, 1-x, ...
LadderWord ladder_word(const Partition& base, const Partition& target, int x);

// degree N with <(word) s(base), s(target)> = v^N, computed from the step
// filling alone, with no Fock arithmetic
long long ladder_fill_degree(const Partition& base, const Partition& target, int x);

// word adding the ladders of a 2-regular partition one ladder at a time
LadderWord regular_fill_word(const Partition& mu);

// columns G(mu) of the canonical basis at one size; rows and cols are kept
// in decreasing lexicographic order
struct DecompositionMatrix {
    int n = 0;
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::map<Partition, FockVector> columns;

    const Laurent& entry(const Partition& row, const Partition& col) const;
};

DecompositionMatrix canonical_basis(int n);

// in-memory store of decomposition matrices, optionally mirrored on disk as
// decomp_e2_n{N}.json (written atomically via a temp file + rename)
class DecompCache {
public:
    DecompCache() = default;
    explicit DecompCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const DecompositionMatrix& get(int n);
    static std::string file_name(int n);
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
    std::map<int, DecompositionMatrix> mem_;
    std::mutex mutex_;
};

// d_{λμ}(v); mu must be 2-regular of the same size
Laurent v_decomposition_number(const Partition& lambda, const Partition& mu,
                               DecompCache& cache);

// Σ_mu d_{λμ}(1) over 2-regular mu
long long composition_length(const Partition& lambda, DecompCache& cache);

// Inner products <word_x G(base_x), s(lambda)> and <word_y G(base_y), s(lambda)>,
// computed with full Fock arithmetic; returns the degree pair when both are
// monic monomials of distinct degrees (each input is bar-invariant by
// construction, so distinct degrees certify reducibility).
std::optional<std::pair<long long, long long>> degree_mismatch_witness(
    const Partition& lambda, const Partition& base_x, const LadderWord& word_x,
    const Partition& base_y, const LadderWord& word_y, DecompCache& cache);

}  // namespace specht

#endif
