#include "specht/homs.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace specht {

std::vector<int> CountTableau::content() const {
    std::vector<int> c(width(), 0);
    for (auto& row : counts)
        for (size_t j = 0; j < row.size(); ++j) c[j] += row[j];
    return c;
}

std::vector<int> CountTableau::reading_word() const {
    std::vector<int> w;
    for (auto& row : counts)
        for (size_t j = 0; j < row.size(); ++j)
            for (int k = 0; k < row[j]; ++k) w.push_back(static_cast<int>(j) + 1);
    return w;
}

namespace {

void enumerate_rows(const Partition& shape, int row, std::vector<int>& remaining,
                    std::vector<std::vector<int>>& acc, std::vector<CountTableau>& out) {
    if (row > shape.rows()) {
        out.push_back(CountTableau{shape, acc});
        return;
    }
    int width = static_cast<int>(remaining.size());
    std::vector<int> current(width, 0);
    // fill row `row` with shape.part(row) entries distributed over the values
    auto rec = [&](auto&& self, int value, int left) -> void {
        if (value > width) {
            if (left == 0) {
                acc.push_back(current);
                enumerate_rows(shape, row + 1, remaining, acc, out);
                acc.pop_back();
            }
            return;
        }
        int cap = std::min(left, remaining[value - 1]);
        for (int take = 0; take <= cap; ++take) {
            current[value - 1] = take;
            remaining[value - 1] -= take;
            self(self, value + 1, left - take);
            remaining[value - 1] += take;
        }
        current[value - 1] = 0;
    };
    rec(rec, 1, shape.part(row));
}

}  // namespace

std::vector<CountTableau> tableaux(const Partition& shape, const std::vector<int>& content) {
    int total = std::accumulate(content.begin(), content.end(), 0);
    std::vector<CountTableau> out;
    if (total != shape.size()) return out;
    for (int c : content)
        if (c < 0) return out;
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> acc;
    enumerate_rows(shape, 1, remaining, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long quantum_binomial(int a, int b, QMode mode) {
    if (b < 0 || b > a) return 0;
    if (mode == QMode::One) return binomial(a, b);
    if (a % 2 == 0 && b % 2 == 1) return 0;
    return binomial(a / 2, b / 2);
}

std::vector<int> move_content(const std::vector<int>& content, int d, int t) {
    if (d < 1 || d + 1 > (int)content.size() || t < 1 || t > content[d])
        throw std::invalid_argument("invalid row move");
    std::vector<int> out = content;
    out[d - 1] += t;
    out[d] -= t;
    return out;
}

void HomElement::add_term(const CountTableau& t, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

HomElement psi_compose(const CountTableau& t, int d, int move, QMode q) {
    std::vector<int> content = t.content();
    HomElement out;
    out.shape = t.shape;
    out.content = move_content(content, d, move);
    int rows = static_cast<int>(t.counts.size());
    std::vector<int> beta(rows, 0);
    auto emit = [&]() {
        CountTableau v = t;
        long long x = 0;
        long long coeff = 1;
        for (int i = 1; i <= rows; ++i) {
            if (beta[i - 1] == 0) continue;
            v.counts[i - 1][d - 1] += beta[i - 1];
            v.counts[i - 1][d] -= beta[i - 1];
            long long tail = 0;
            for (int k = i + 1; k <= rows; ++k) tail += t.count(k, d);
            x += static_cast<long long>(beta[i - 1]) * tail;
        }
        for (int i = 1; i <= rows; ++i)
            coeff *= quantum_binomial(v.count(i, d), t.count(i, d), q);
        if (q == QMode::MinusOne && (x % 2) != 0) coeff = -coeff;
        out.add_term(v, Rational(coeff));
    };
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row > rows) {
            if (left == 0) emit();
            return;
        }
        int cap = std::min(left, t.count(row, d + 1));
        for (int take = 0; take <= cap; ++take) {
            beta[row - 1] = take;
            self(self, row + 1, left - take);
        }
        beta[row - 1] = 0;
    };
    rec(rec, 1, move);
    return out;
}

HomElement apply_move(const HomElement& h, int d, int move, QMode q) {
    HomElement out;
    out.shape = h.shape;
    out.content = move_content(h.content, d, move);
    for (auto& [tab, c] : h.terms) {
        HomElement part = psi_compose(tab, d, move, q);
        for (auto& [v, b] : part.terms) out.add_term(v, c * b);
    }
    return out;
}

namespace {

using SparseRow = std::vector<std::pair<int, BigInt>>;  // sorted by index

void strip_content(SparseRow& row) {
    if (row.empty()) return;
    BigInt g;
    for (auto& [i, c] : row) g = BigInt::gcd(g, c);
    if (row.front().second.sign() < 0) g = -g;
    for (auto& [i, c] : row) c = c.div_exact(g);
}

SparseRow combine(const SparseRow& a, const BigInt& ca, const SparseRow& b,
                  const BigInt& cb) {
    SparseRow out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, a[i].second * ca);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, b[j].second * cb);
            ++j;
        } else {
            BigInt c = a[i].second * ca + b[j].second * cb;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

HomElement specht_seed(const Partition& nu) {
    std::vector<CountTableau> tabs = tableaux(nu, nu.parts());
    if (tabs.empty()) {
        // only the empty partition reaches here
        HomElement out;
        out.shape = nu;
        out.content = nu.parts();
        out.add_term(CountTableau{nu, {}}, Rational(1));
        return out;
    }
    std::map<CountTableau, int> index;
    for (size_t i = 0; i < tabs.size(); ++i) index[tabs[i]] = static_cast<int>(i);

    // fraction-free sparse elimination over the move equations
    std::map<int, SparseRow> pivots;
    auto insert_equation = [&](SparseRow row) {
        while (!row.empty()) {
            auto pivot = pivots.find(row.front().first);
            if (pivot == pivots.end()) break;
            row = combine(row, pivot->second.front().second, pivot->second,
                          -row.front().second);
            strip_content(row);
        }
        if (!row.empty()) {
            strip_content(row);
            pivots.emplace(row.front().first, std::move(row));
        }
    };

    std::vector<std::pair<int, int>> moves;
    for (int d = 1; d < nu.rows(); ++d)
        for (int t = 1; t <= nu.part(d + 1); ++t) moves.emplace_back(d, t);

    std::vector<std::map<CountTableau, std::map<int, long long>>> equations;
    for (auto [d, t] : moves) {
        std::map<CountTableau, std::map<int, long long>> per_target;
        for (size_t ti = 0; ti < tabs.size(); ++ti) {
            HomElement expansion = psi_compose(tabs[ti], d, t, QMode::One);
            for (auto& [v, c] : expansion.terms)
                per_target[v][static_cast<int>(ti)] += c.num().to_ll();
        }
        for (auto& [v, coeffs] : per_target) {
            SparseRow row;
            for (auto& [ti, c] : coeffs)
                if (c != 0) row.emplace_back(ti, BigInt(c));
            if (!row.empty()) insert_equation(std::move(row));
        }
        equations.push_back(std::move(per_target));
    }

    std::vector<int> free_vars;
    for (int i = 0; i < (int)tabs.size(); ++i)
        if (!pivots.count(i)) free_vars.push_back(i);
    if (free_vars.size() != 1)
        throw std::logic_error("specht_seed: solution space is not one-dimensional");

    std::vector<Rational> solution(tabs.size(), Rational(0));
    solution[free_vars[0]] = Rational(1);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rational acc(0);
        const SparseRow& row = it->second;
        for (size_t k = 1; k < row.size(); ++k)
            acc += Rational(row[k].second) * solution[row[k].first];
        solution[it->first] = -acc / Rational(row.front().second);
    }

    // scale to coprime integers, reading-word-first coefficient positive
    BigInt den_lcm(1);
    for (auto& r : solution) {
        BigInt d = r.den();
        den_lcm = den_lcm.div_exact(BigInt::gcd(den_lcm, d)) * d;
    }
    std::vector<BigInt> ints(tabs.size());
    BigInt num_gcd;
    for (size_t i = 0; i < solution.size(); ++i) {
        ints[i] = solution[i].num() * den_lcm.div_exact(solution[i].den());
        num_gcd = BigInt::gcd(num_gcd, ints[i]);
    }
    for (auto& c : ints) c = c.div_exact(num_gcd);
    for (auto& c : ints) {
        if (c.is_zero()) continue;
        if (c.sign() < 0)
            for (auto& x : ints) x = -x;
        break;
    }

    // re-substitute into every equation
    for (auto& per_target : equations)
        for (auto& [v, coeffs] : per_target) {
            BigInt acc;
            for (auto& [ti, c] : coeffs) acc += ints[ti] * BigInt(c);
            if (!acc.is_zero())
                throw std::logic_error("specht_seed: candidate fails re-substitution");
        }

    HomElement out;
    out.shape = nu;
    out.content = nu.parts();
    for (size_t i = 0; i < tabs.size(); ++i)
        if (!ints[i].is_zero()) out.add_term(tabs[i], Rational(ints[i]));
    return out;
}

CountTableau hat_tableau(const CountTableau& t, const Partition& xi, int rows, int width) {
    Partition xi_conj = conjugate(xi);
    CountTableau out;
    std::vector<int> shape_parts;
    out.counts.assign(rows, std::vector<int>(width, 0));
    for (int i = 1; i <= rows; ++i) {
        int total = 0;
        for (int j = 1; j <= width; ++j) {
            int v = 2 * t.count(i, j) + (j <= xi_conj.part(i) ? 1 : 0);
            out.counts[i - 1][j - 1] = v;
            total += v;
        }
        shape_parts.push_back(total);
    }
    out.shape = Partition(shape_parts);
    return out;
}

PermSpechtHom build_perm_specht_hom(const Partition& nu, const Partition& xi) {
    int l = nu.rows();
    if (l < 1)
        throw std::invalid_argument("build_perm_specht_hom: nu must be nonempty");
    if (l >= 2 && xi.part(l - 1) < l)
        throw std::invalid_argument(
            "build_perm_specht_hom: need xi_{l-1} >= l for l = nu'_1");
    Partition xi_conj = conjugate(xi);
    std::vector<int> lam_parts, mu_parts;
    int lam_rows = std::max(xi.rows(), l);
    for (int i = 1; i <= lam_rows; ++i) lam_parts.push_back(xi.part(i) + 2 * nu.part(i));
    int mu_rows = std::max(xi_conj.rows(), l);
    for (int i = 1; i <= mu_rows; ++i) mu_parts.push_back(xi_conj.part(i) + 2 * nu.part(i));
    PermSpechtHom out;
    out.lambda = Partition(lam_parts);
    out.mu = Partition(mu_parts);

    HomElement seed = specht_seed(nu);
    out.theta.shape = out.mu;
    out.theta.content = out.lambda.parts();
    for (auto& [t, c] : seed.terms)
        out.theta.add_term(hat_tableau(t, xi, out.mu.rows(), out.lambda.rows()), c);
    if (out.theta.is_zero())
        throw std::logic_error("build_perm_specht_hom: built a zero homomorphism");
    return out;
}

bool kernel_check(const HomElement& theta, const Partition& lambda, QMode q) {
    if (!theta.is_zero()) {
        std::vector<int> content = theta.content;
        while (!content.empty() && content.back() == 0) content.pop_back();
        if (content != lambda.parts())
            throw std::invalid_argument("kernel_check: content does not match lambda");
    }
    for (int d = 1; d <= lambda.rows() - 1; ++d)
        for (int t = 1; t <= lambda.part(d + 1); ++t)
            if (!apply_move(theta, d, t, q).is_zero()) return false;
    return true;
}

std::optional<std::pair<Node, Node>> carter_payne_pair(const Partition& lambda) {
    for (Node add : addable_nodes(lambda))
        for (Node rem : removable_nodes(lambda))
            if (add.row < rem.row && node_residue(add) == node_residue(rem))
                return std::make_pair(add, rem);
    return std::nullopt;
}

std::optional<Partition> carter_payne_target(const Partition& lambda) {
    auto pair = carter_payne_pair(lambda);
    if (!pair) return std::nullopt;
    return remove_node(add_node(lambda, pair->first), pair->second);
}

}  // namespace specht
