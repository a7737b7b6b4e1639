#include "specht/classify.hpp"

#include "specht/blocks.hpp"
#include "specht/homs.hpp"
#include "specht/lr.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace specht {

namespace {
constexpr const char* kConjugateWhy = "conjugate-equivalence";
constexpr const char* kAddWhy = "residue-addition-monotonicity";
constexpr const char* kRemoveWhy = "residue-removal-monotonicity";
}  // namespace

LadderVerdict ladder_criterion(const Partition& lambda) {
    return first_disconnected_ladder(lambda) ? LadderVerdict::ReducibleByLadder
                                             : LadderVerdict::NotCovered;
}

Verdict carter_classifier(const Partition& lambda) {
    if (is_regular(lambda))
        return is_alternating(lambda) ? Verdict::Irreducible : Verdict::Reducible;
    if (is_restricted(lambda))
        return is_alternating(conjugate(lambda)) ? Verdict::Irreducible : Verdict::Reducible;
    throw std::invalid_argument(
        "carter_classifier needs a 2-regular or 2-restricted partition");
}

FMReport fm_report(const Partition& lambda) {
    if (is_regular(lambda) || is_restricted(lambda))
        throw std::invalid_argument(
            "fm_report needs a partition that is neither 2-regular nor 2-restricted");
    FMReport rep;
    for (int i = 1; i <= lambda.rows(); ++i) {
        if (lambda.part(i) - lambda.part(i + 1) >= 2) rep.a = i;
        if (lambda.part(i) == lambda.part(i + 1) && lambda.part(i) > 0) rep.b = i;
    }
    rep.c = lambda.rows() - rep.a;
    auto fail = [&](const char* tag) {
        rep.is_fm = false;
        rep.failed_condition = tag;
        return rep;
    };
    for (int i = 1; i <= lambda.rows(); ++i)
        if (i != rep.a && lambda.part(i) - lambda.part(i + 1) >= 2)
            return fail("gap-outside-a");
    if (!(lambda.part(rep.b) >= rep.a - 1 && rep.a - 1 >= rep.b)) return fail("a-b-bounds");
    for (int i = 1; i < rep.c; ++i)
        if (lambda.part(i) <= lambda.part(i + 1)) return fail("head-not-strict");
    std::vector<Node> adds = addable_nodes(lambda);
    if (rep.c == 0) {
        std::vector<Node> filtered;
        for (Node n : adds)
            if (n.row != 1 && n.col != 1) filtered.push_back(n);
        adds = filtered;
    }
    for (size_t i = 1; i < adds.size(); ++i)
        if (node_residue(adds[i]) != node_residue(adds[0]))
            return fail("addable-residues-differ");
    rep.is_fm = true;
    return rep;
}

Verdict conjecture_classifier(const Partition& lambda) {
    if (fm_report(lambda).is_fm || fm_report(conjugate(lambda)).is_fm)
        return Verdict::Irreducible;
    return Verdict::Reducible;
}

Verdict oracle_classifier(const Partition& lambda, DecompCache& cache) {
    return composition_length(lambda, cache) == 1 ? Verdict::Irreducible
                                                  : Verdict::Reducible;
}

const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::Conjugate: return "conjugate";
        case StepKind::AddResidue: return "add_residue";
        case StepKind::RemoveResidue: return "remove_residue";
    }
    return "?";
}

const char* terminal_type_name(const TerminalCert& t) {
    if (std::holds_alternative<RouquierCert>(t)) return "rouquier";
    if (std::holds_alternative<CarterPayneCert>(t)) return "carter_payne";
    if (std::holds_alternative<PermHomCert>(t)) return "perm_hom";
    return "fock_degree";
}

namespace {

Partition apply_step(const Partition& p, const ReductionStep& s) {
    switch (s.kind) {
        case StepKind::Conjugate: return conjugate(p);
        case StepKind::AddResidue: return add_full_residue(p, s.residue);
        case StepKind::RemoveResidue: return remove_full_residue(p, s.residue);
    }
    throw std::logic_error("unknown step kind");
}

const char* why_for(StepKind k) {
    switch (k) {
        case StepKind::Conjugate: return kConjugateWhy;
        case StepKind::AddResidue: return kAddWhy;
        case StepKind::RemoveResidue: return kRemoveWhy;
    }
    return "?";
}

struct WitnessBuilder {
    Witness w;
    Partition cur;
    int step_budget;
    int loop_budget = 100000;

    explicit WitnessBuilder(const Partition& lambda)
        : cur(lambda), step_budget(4 * lambda.size() + 8) {
        w.lambda = lambda;
    }

    void spend() {
        if (--loop_budget <= 0)
            throw std::logic_error("build_witness: case analysis did not terminate");
    }

    void push(StepKind kind, int residue) {
        Partition next = apply_step(cur, ReductionStep{kind, residue, ""});
        if (kind != StepKind::Conjugate && next == cur)
            throw std::logic_error("build_witness: degenerate reduction step");
        if (--step_budget <= 0)
            throw std::logic_error("build_witness: reduction step budget exhausted");
        w.steps.push_back(ReductionStep{kind, residue, why_for(kind)});
        cur = next;
    }

    // ladder l meets both the first row and the first column and is
    // disconnected: grow towards a Rouquier block
    void run_two_end(int l) {
        int j = l % 2;
        while (true) {
            spend();
            if (is_rouquier(cur)) {
                TwoQuotient q = two_quotient(cur);
                long long support = static_cast<long long>(
                    lr_support(q.horizontal, q.vertical).size());
                w.terminal = RouquierCert{q.horizontal, q.vertical, support};
                return;
            }
            if (!addable_nodes(cur, j).empty()) {
                push(StepKind::AddResidue, j);
            } else {
                assert(cur.contains(Node{1, l + 1}) && cur.contains(Node{l + 1, 1}));
                assert(ladder(cur, l + 1).disconnected());
                l += 1;
                j = 1 - j;
            }
        }
    }

    // ladder l meets the first row but not the first column: shrink the
    // shortest lower segment with full-residue additions
    void run_one_end(int l) {
        while (true) {
            spend();
            LadderSegmentation seg = ladder(cur, l);
            assert(seg.disconnected());
            assert(seg.segments.front().top_row == 1);
            assert(!cur.contains(Node{l, 1}));
            int s = 0, srow = 0;
            for (size_t k = 1; k < seg.segments.size(); ++k)
                if (s == 0 || seg.segments[k].length < s) {
                    s = seg.segments[k].length;
                    srow = seg.segments[k].top_row;
                }
            int j = (l + 1) % 2;
            Partition plus = add_full_residue(cur, 1 - j);
            if (plus != cur) push(StepKind::AddResidue, 1 - j);
            if (s == 1) {
                Node removable{srow, l + 1 - srow};
                Node addable{1, cur.part(1) + 1};
                assert(cur.part(srow) == removable.col &&
                       cur.part(srow + 1) < removable.col);
                assert(node_residue(addable) == j);
                Partition mu = remove_node(add_node(cur, addable), removable);
                w.terminal = CarterPayneCert{mu, l, ladder_index(addable)};
                return;
            }
            l += 1;
        }
    }

    // square-ish shape, disconnected ladder above the first row: permutation
    // module homomorphism terminal
    void run_square(int m) {
        LadderSegmentation seg = ladder(cur, m);
        assert(seg.disconnected());
        int i = seg.segments[0].top_row + seg.segments[0].length - 1;
        int k = seg.segments[1].top_row;
        if (i + 1 > m - i) {
            push(StepKind::Conjugate, -1);
            int ni = m + 1 - k, nk = m + 1 - i;
            i = ni;
            k = nk;
            assert(i + 1 <= m - i);
        }
        (void)k;
        assert(cur.part(i) - cur.part(i + 1) >= 2);
        std::vector<int> nu_parts(i, 1);
        std::vector<int> xi_parts;
        for (int r = 1; r <= cur.rows(); ++r)
            xi_parts.push_back(r <= i ? cur.part(r) - 2 : cur.part(r));
        Partition nu(nu_parts), xi(xi_parts);
        Partition xic = conjugate(xi);
        std::vector<int> mu_parts;
        for (int r = 1; r <= std::max(xic.rows(), nu.rows()); ++r)
            mu_parts.push_back(xic.part(r) + 2 * nu.part(r));
        w.terminal = PermHomCert{nu, xi, Partition(mu_parts)};
    }

    // wide shape with every row long enough: degree-mismatch terminal from
    // two staircase-like bases
    void run_fock_degree(int m) {
        int l = cur.rows();
        LadderSegmentation seg = ladder(cur, m);
        assert(seg.disconnected());
        int i = seg.segments[0].top_row + seg.segments[0].length;
        std::vector<int> mu_parts, hat_parts;
        for (int r = 1; r <= l; ++r) mu_parts.push_back(l + 2 - r);
        for (int r = 1; r <= i - 1; ++r) hat_parts.push_back(l + 2 - r);
        for (int r = i; r <= l - 1; ++r) hat_parts.push_back(l - r);
        Partition mu(mu_parts), mu_hat(hat_parts);
        int x = (l + 1) % 2;
        long long deg = ladder_fill_degree(mu, cur, x);
        long long deg_hat = ladder_fill_degree(mu_hat, cur, x);
        if (deg == deg_hat)
            throw std::logic_error("build_witness: expected distinct fill degrees");
        w.terminal = FockDegreeCert{mu, mu_hat, x, deg, deg_hat};
    }

    Witness build() {
        while (true) {
            spend();
            Partition conj = conjugate(cur);
            if (cur.part(1) < conj.part(1)) {
                push(StepKind::Conjugate, -1);
                continue;
            }
            auto dis = first_disconnected_ladder(cur);
            assert(dis.has_value());
            int m = *dis;
            if (m <= cur.part(1)) {
                if (cur.contains(Node{m, 1}))
                    run_two_end(m);
                else
                    run_one_end(m);
                return w;
            }
            int l = cur.rows();  // λ'_1, and now λ_1 >= λ'_1
            if (cur.part(1) == l) {
                run_square(m);
                return w;
            }
            if (cur.part(l) >= 2) {
                run_fock_degree(m);
                return w;
            }
            // last part is a single box; its removal node has residue j
            int j = (l + 1) % 2;
            if ((m - l) % 2 == 0) {
                LadderSegmentation seg = ladder(cur, m);
                int i = seg.segments[0].top_row + seg.segments[0].length - 1;
                Node addable{i + 1, m - i};
                Node removable{l, 1};
                assert(cur.part(i + 1) == m - i - 1);
                Partition mu = remove_node(add_node(cur, addable), removable);
                w.terminal = CarterPayneCert{mu, l, m};
                return w;
            }
            push(StepKind::RemoveResidue, j);
        }
    }
};

}  // namespace

Partition Witness::reduced() const {
    Partition p = lambda;
    for (const ReductionStep& s : steps) p = apply_step(p, s);
    return p;
}

Witness build_witness(const Partition& lambda) {
    if (!first_disconnected_ladder(lambda))
        throw std::invalid_argument("build_witness: no ladder of lambda is disconnected");
    WitnessBuilder builder(lambda);
    return builder.build();
}

namespace {

VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }

VerifyResult verify_rouquier(const Partition& cur, const RouquierCert& cert) {
    BlockData bd = core_and_weight(cur);
    if (bd.weight > bd.core_length + 1) return fail("terminal is not in a Rouquier block");
    if (is_regular(cur) || is_restricted(cur))
        return fail("terminal partition is 2-regular or 2-restricted");
    TwoQuotient q = two_quotient(cur);
    if (q.horizontal != cert.horizontal || q.vertical != cert.vertical)
        return fail("quotient mismatch");
    long long support = static_cast<long long>(
        lr_support(cert.horizontal, cert.vertical).size());
    if (support != cert.support_size) return fail("support size mismatch");
    if (support < 2) return fail("support has fewer than two shapes");
    return {true, ""};
}

VerifyResult verify_carter_payne(const Partition& cur, const CarterPayneCert& cert) {
    if (cert.addable_ladder <= cert.removable_ladder)
        return fail("addable ladder does not exceed removable ladder");
    if ((cert.addable_ladder - cert.removable_ladder) % 2 != 0)
        return fail("ladder parity mismatch");
    bool found = false;
    for (Node add : addable_nodes(cur)) {
        if (ladder_index(add) != cert.addable_ladder) continue;
        for (Node rem : removable_nodes(cur)) {
            if (ladder_index(rem) != cert.removable_ladder) continue;
            if (add.row >= rem.row) continue;
            if (node_residue(add) != node_residue(rem)) continue;
            if (remove_node(add_node(cur, add), rem) == cert.mu) found = true;
        }
    }
    if (!found) return fail("no addable/removable pair produces mu");
    if (dominates(regularise(cur), regularise(cert.mu)))
        return fail("regularisation dominance rules nothing out");
    return {true, ""};
}

VerifyResult verify_perm_hom(const Partition& cur, const PermHomCert& cert) {
    int l = cert.nu.rows();
    if (l < 1) return fail("nu is empty");
    for (int i = 1; i <= l; ++i)
        if (cert.nu.part(i) != 1) return fail("nu is not a column");
    if (l >= 2 && cert.xi.part(l - 1) < l) return fail("xi precondition fails");
    Partition xic = conjugate(cert.xi);
    for (int i = 1; i <= std::max({cur.rows(), cert.xi.rows(), l}); ++i)
        if (cur.part(i) != cert.xi.part(i) + 2 * cert.nu.part(i))
            return fail("lambda does not split as xi + 2 nu");
    for (int i = 1; i <= std::max({cert.mu.rows(), xic.rows(), l}); ++i)
        if (cert.mu.part(i) != xic.part(i) + 2 * cert.nu.part(i))
            return fail("mu does not match xi' + 2 nu");
    if (cur.size() != cert.mu.size()) return fail("size mismatch");
    if (dominates(regularise(cur), cert.mu))
        return fail("regularisation dominance rules nothing out");
    if (cur.size() <= 14) {
        PermSpechtHom hom = build_perm_specht_hom(cert.nu, cert.xi);
        if (hom.lambda != cur || hom.mu != cert.mu) return fail("rebuilt hom mismatch");
        if (hom.theta.is_zero()) return fail("hom is zero");
        if (!kernel_check(hom.theta, cur, QMode::MinusOne))
            return fail("image is not inside the Specht module");
    }
    return {true, ""};
}

VerifyResult verify_fock_degree(const Partition& cur, const FockDegreeCert& cert) {
    if (cert.x != 0 && cert.x != 1) return fail("bad residue");
    if (cert.degree == cert.degree_hat) return fail("degrees are equal");
    int l = cur.rows();
    struct Side {
        const Partition* base;
        long long degree;
    } sides[2] = {{&cert.mu, cert.degree}, {&cert.mu_hat, cert.degree_hat}};
    for (auto& side : sides) {
        const Partition& base = *side.base;
        if (!is_regular(base)) return fail("base is not 2-regular");
        if (base.rows() > l) return fail("base has too many rows");
        BlockData bd = core_and_weight(base);
        if (bd.core_length != l - 1) return fail("base core is not the guard staircase");
        if (!cur.contains_diagram(base)) return fail("base does not fit inside lambda");
        try {
            if (ladder_fill_degree(base, cur, cert.x) != side.degree)
                return fail("fill degree mismatch");
        } catch (const std::invalid_argument&) {
            return fail("base rows are not aligned with the residue");
        }
    }
    return {true, ""};
}

}  // namespace

VerifyResult verify_witness(const Partition& lambda, const Witness& witness) {
    if (witness.lambda != lambda) return fail("witness was built for another partition");
    Partition cur = lambda;
    for (const ReductionStep& s : witness.steps) {
        switch (s.kind) {
            case StepKind::Conjugate:
                if (s.justification != kConjugateWhy) return fail("bad step justification");
                break;
            case StepKind::AddResidue:
                if (s.justification != kAddWhy) return fail("bad step justification");
                break;
            case StepKind::RemoveResidue:
                if (s.justification != kRemoveWhy) return fail("bad step justification");
                break;
        }
        if (s.kind != StepKind::Conjugate && s.residue != 0 && s.residue != 1)
            return fail("bad step residue");
        Partition next = apply_step(cur, s);
        if (s.kind != StepKind::Conjugate && next == cur)
            return fail("reduction step changed nothing");
        cur = next;
    }
    try {
        return std::visit(
            [&](const auto& cert) -> VerifyResult {
                using T = std::decay_t<decltype(cert)>;
                if constexpr (std::is_same_v<T, RouquierCert>)
                    return verify_rouquier(cur, cert);
                else if constexpr (std::is_same_v<T, CarterPayneCert>)
                    return verify_carter_payne(cur, cert);
                else if constexpr (std::is_same_v<T, PermHomCert>)
                    return verify_perm_hom(cur, cert);
                else
                    return verify_fock_degree(cur, cert);
            },
            witness.terminal);
    } catch (const std::exception& e) {
        // malformed certificates must report, never throw
        return fail(std::string("terminal data is malformed: ") + e.what());
    }
}

}  // namespace specht
