#ifndef SPECHT_HOMS_HPP
#define SPECHT_HOMS_HPP

#include "specht/bigint.hpp"
#include "specht/partition.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace specht {

// Row-equivalence class of a row-standard tableau, stored as the matrix of
// entry multiplicities: counts[i][j] = number of entries equal to j+1 in row
// i+1. Rows sum to the shape, columns sum to the content.
struct CountTableau {
    Partition shape;
    std::vector<std::vector<int>> counts;

    int width() const { return counts.empty() ? 0 : static_cast<int>(counts[0].size()); }
    int count(int row, int value) const {  // 1-based
        if (row < 1 || row > (int)counts.size()) return 0;
        if (value < 1 || value > (int)counts[row - 1].size()) return 0;
        return counts[row - 1][value - 1];
    }
    std::vector<int> content() const;
    std::vector<int> reading_word() const;

    friend bool operator==(const CountTableau&, const CountTableau&) = default;
    friend bool operator<(const CountTableau& a, const CountTableau& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        return a.reading_word() < b.reading_word();
    }
};

// all count tableaux of the given shape and content, sorted by reading word
std::vector<CountTableau> tableaux(const Partition& shape, const std::vector<int>& content);

enum class QMode { MinusOne, One };

// Gaussian binomial evaluated at the chosen q; 0 outside 0 <= b <= a.
// At q = -1: binom(floor(a/2), floor(b/2)) when a is odd or b is even, else 0.
long long quantum_binomial(int a, int b, QMode mode);
long long binomial(int a, int b);

// content after moving t entries from value d+1 to value d
std::vector<int> move_content(const std::vector<int>& content, int d, int t);

// integer combination of count tableaux sharing one shape and content
struct HomElement {
    Partition shape;
    std::vector<int> content;
    std::map<CountTableau, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const CountTableau& t, const Rational& c);
};

// expansion of the row-move composition: replaces t entries equal to d+1 by d
// in all ways, with Gaussian binomial coefficients and the sign exponent
// x = Σ_i (moved_i · Σ_{k>i} count(k,d))
HomElement psi_compose(const CountTableau& t, int d, int move, QMode q);
HomElement apply_move(const HomElement& h, int d, int move, QMode q);

// The unique (up to scalar) combination θ = Σ a_T Θ_T over tableaux of shape
// and content ν that is annihilated by every row move at q = 1; coefficients
// are coprime integers with the reading-word-first tableau positive.
HomElement specht_seed(const Partition& nu);

// doubled tableau: counts 2T+1 on the first ξ'_i columns of row i, 2T beyond
CountTableau hat_tableau(const CountTableau& t, const Partition& xi, int rows, int width);

struct PermSpechtHom {
    Partition lambda;  // λ_i = ξ_i + 2ν_i
    Partition mu;      // μ_i = ξ'_i + 2ν_i
    HomElement theta;
};

// homomorphism from the permutation module of mu into the Specht module of
// lambda at q = -1; requires ξ_{l-1} >= l for l = ν'_1 >= 1
PermSpechtHom build_perm_specht_hom(const Partition& nu, const Partition& xi);

// true iff every valid row move annihilates theta at the given q, i.e. the
// image lies inside the Specht module of lambda
bool kernel_check(const HomElement& theta, const Partition& lambda, QMode q);

// first (by rows) addable/removable pair of equal residue with the addable
// node strictly higher; the resulting partition carries a nonzero Specht
// homomorphism into lambda's Specht module
std::optional<std::pair<Node, Node>> carter_payne_pair(const Partition& lambda);
std::optional<Partition> carter_payne_target(const Partition& lambda);

}  // namespace specht

#endif
