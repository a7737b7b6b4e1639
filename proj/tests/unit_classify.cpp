#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "specht/classify.hpp"
#include "specht/blocks.hpp"
#include "specht/json_io.hpp"

using namespace specht;

namespace {
Partition P(const std::string& s) { return Partition::parse(s); }
}

TEST_CASE("ladder criterion") {
    CHECK(ladder_criterion(P("4,2,2,2")) == LadderVerdict::ReducibleByLadder);
    CHECK(ladder_criterion(P("2,2")) == LadderVerdict::NotCovered);
    CHECK(ladder_criterion(P("5,3,2")) == LadderVerdict::NotCovered);
}

TEST_CASE("carter classifier") {
    CHECK(carter_classifier(P("2,1")) == Verdict::Irreducible);
    CHECK(carter_classifier(P("3,1")) == Verdict::Reducible);
    CHECK(carter_classifier(P("1,1,1,1")) == Verdict::Irreducible);
    CHECK(carter_classifier(P("-")) == Verdict::Irreducible);
    CHECK_THROWS_AS(carter_classifier(P("2,2")), std::invalid_argument);
}

TEST_CASE("fm reports") {
    FMReport rep = fm_report(P("2,2"));
    CHECK(rep.is_fm);
    CHECK(rep.a == 2);
    CHECK(rep.b == 1);
    CHECK(rep.c == 0);

    rep = fm_report(P("4,4,2,2"));
    CHECK_FALSE(rep.is_fm);
    CHECK(rep.failed_condition == "gap-outside-a");

    rep = fm_report(P("3,3,1"));
    CHECK(rep.is_fm);
    CHECK(rep.a == 2);
    CHECK(rep.b == 1);
    CHECK(rep.c == 1);

    CHECK_THROWS_AS(fm_report(P("2,1")), std::invalid_argument);
    CHECK_THROWS_AS(fm_report(P("2,1,1")), std::invalid_argument);
}

TEST_CASE("conjecture classifier on worked shapes") {
    CHECK(conjecture_classifier(P("2,2")) == Verdict::Irreducible);
    CHECK(conjecture_classifier(P("4,4,2,2")) == Verdict::Reducible);
    CHECK(conjecture_classifier(P("5,3,3,2")) == Verdict::Reducible);
    CHECK(conjecture_classifier(P("3,3,1")) == Verdict::Irreducible);
}

TEST_CASE("rectangles label irreducibles") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            std::vector<int> parts(b, a);
            Partition rect(parts);
            if (is_regular(rect) || is_restricted(rect)) continue;
            CHECK(conjecture_classifier(rect) == Verdict::Irreducible);
        }
}

TEST_CASE("oracle classifier") {
    DecompCache cache;
    CHECK(oracle_classifier(P("2,1"), cache) == Verdict::Irreducible);
    CHECK(oracle_classifier(P("4,2,2,2"), cache) == Verdict::Reducible);
    CHECK(oracle_classifier(P("3,2,1"), cache) == Verdict::Irreducible);
    CHECK(oracle_classifier(P("4,3,2,1"), cache) == Verdict::Irreducible);
    CHECK(oracle_classifier(P("2,2"), cache) == Verdict::Irreducible);
}

TEST_CASE("oracle is conjugation symmetric") {
    DecompCache cache;
    for (int n = 0; n <= 16; ++n)
        for (auto& p : partitions_of(n))
            CHECK(oracle_classifier(p, cache) == oracle_classifier(conjugate(p), cache));
}

TEST_CASE("fm partitions never have disconnected ladders") {
    for (int n = 0; n <= 20; ++n)
        for (auto& p : partitions_of(n)) {
            if (is_regular(p) || is_restricted(p)) continue;
            if (fm_report(p).is_fm || fm_report(conjugate(p)).is_fm)
                CHECK_FALSE(first_disconnected_ladder(p).has_value());
        }
}

TEST_CASE("witness for the one-end chain") {
    Witness w = build_witness(P("5,3,3,2"));
    REQUIRE(w.steps.size() == 2);
    CHECK(w.steps[0].kind == StepKind::AddResidue);
    CHECK(w.steps[0].residue == 1);
    CHECK(w.steps[1].kind == StepKind::AddResidue);
    CHECK(w.steps[1].residue == 0);
    CHECK(w.reduced() == P("7,4,3,3,1"));
    REQUIRE(std::holds_alternative<CarterPayneCert>(w.terminal));
    auto cert = std::get<CarterPayneCert>(w.terminal);
    CHECK(cert.mu == P("8,4,3,2,1"));
    CHECK(cert.removable_ladder == 6);
    CHECK(cert.addable_ladder == 8);
    CHECK(verify_witness(P("5,3,3,2"), w).ok);
}

TEST_CASE("witness for the square case") {
    Witness w = build_witness(P("4,4,2,2"));
    CHECK(w.steps.empty());
    REQUIRE(std::holds_alternative<PermHomCert>(w.terminal));
    auto cert = std::get<PermHomCert>(w.terminal);
    CHECK(cert.nu == P("1,1"));
    CHECK(cert.xi == P("2,2,2,2"));
    CHECK(cert.mu == P("6,6"));
    CHECK_FALSE(dominates(regularise(P("4,4,2,2")), cert.mu));
    CHECK(verify_witness(P("4,4,2,2"), w).ok);
}

TEST_CASE("witness for the wide case") {
    Witness w = build_witness(P("5,5,3,3"));
    REQUIRE(std::holds_alternative<FockDegreeCert>(w.terminal));
    auto cert = std::get<FockDegreeCert>(w.terminal);
    CHECK(cert.mu == P("5,4,3,2"));
    CHECK(cert.mu_hat == P("5,4,1"));
    CHECK(cert.x == 1);
    CHECK(cert.degree == 3);
    CHECK(cert.degree_hat == 4);
    CHECK(cert.degree_hat > cert.degree);
    CHECK(verify_witness(P("5,5,3,3"), w).ok);
}

TEST_CASE("witness for the two-end case") {
    Witness w = build_witness(P("4,2,2,2"));
    REQUIRE(std::holds_alternative<RouquierCert>(w.terminal));
    auto cert = std::get<RouquierCert>(w.terminal);
    CHECK(w.reduced() == P("5,2,2,2,1"));
    CHECK(cert.horizontal == P("1"));
    CHECK(cert.vertical == P("1,1"));
    CHECK(cert.support_size == 2);
    CHECK(verify_witness(P("4,2,2,2"), w).ok);
}

TEST_CASE("witness when the growth residue runs out of addable nodes") {
    // (7,1,1) exhausts its addable nodes of the ladder residue after one
    // addition, so the builder moves to the next ladder before continuing
    Witness w = build_witness(P("7,1,1"));
    REQUIRE(std::holds_alternative<RouquierCert>(w.terminal));
    CHECK(verify_witness(P("7,1,1"), w).ok);
}

TEST_CASE("witness when the full residue addition changes nothing") {
    // (5,2,2) has no addable node of the complementary residue at all, so
    // the shrink loop records no step before the terminal
    Witness w = build_witness(P("5,2,2"));
    CHECK(w.steps.empty());
    REQUIRE(std::holds_alternative<CarterPayneCert>(w.terminal));
    auto cert = std::get<CarterPayneCert>(w.terminal);
    CHECK(cert.mu == P("6,2,1"));
    CHECK(cert.removable_ladder == 4);
    CHECK(cert.addable_ladder == 6);
    CHECK(verify_witness(P("5,2,2"), w).ok);
}

TEST_CASE("witness for the residue removal path") {
    // smallest case whose removable corner has the opposite residue to the
    // first disconnected ladder
    Witness w = build_witness(P("7,7,5,5,1"));
    REQUIRE(!w.steps.empty());
    CHECK(w.steps[0].kind == StepKind::RemoveResidue);
    CHECK(w.steps[0].residue == 0);
    REQUIRE(std::holds_alternative<FockDegreeCert>(w.terminal));
    CHECK(verify_witness(P("7,7,5,5,1"), w).ok);

    // every disconnected-ladder partition of size 25 still round-trips
    for (auto& p : partitions_of(25)) {
        if (!first_disconnected_ladder(p)) continue;
        Witness big = build_witness(p);
        VerifyResult res = verify_witness(p, big);
        CHECK_MESSAGE(res.ok, p.str(), ": ", res.reason);
    }
}

TEST_CASE("witness rejections and tampering") {
    CHECK_THROWS_AS(build_witness(P("2,2")), std::invalid_argument);
    CHECK_THROWS_AS(build_witness(P("5,3,2")), std::invalid_argument);

    Witness w = build_witness(P("5,3,3,2"));
    Witness bad = w;
    std::get<CarterPayneCert>(bad.terminal).mu = P("9,4,3,2,1,1");
    VerifyResult res = verify_witness(P("5,3,3,2"), bad);
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.reason.empty());

    bad = w;
    bad.steps[0].justification = "made-up";
    CHECK_FALSE(verify_witness(P("5,3,3,2"), bad).ok);

    bad = w;
    bad.steps[0].residue = 0;  // this residue addition changes nothing useful
    CHECK_FALSE(verify_witness(P("5,3,3,2"), bad).ok);

    Witness wide = build_witness(P("5,5,3,3"));
    Witness badwide = wide;
    std::get<FockDegreeCert>(badwide.terminal).degree_hat =
        std::get<FockDegreeCert>(badwide.terminal).degree;
    CHECK_FALSE(verify_witness(P("5,5,3,3"), badwide).ok);

    Witness sq = build_witness(P("4,4,2,2"));
    Witness badsq = sq;
    std::get<PermHomCert>(badsq.terminal).mu = P("7,5");
    CHECK_FALSE(verify_witness(P("4,4,2,2"), badsq).ok);

    // size-mismatched certificate data must report, not throw
    bad = w;
    std::get<CarterPayneCert>(bad.terminal).mu = P("2,1");
    CHECK_FALSE(verify_witness(P("5,3,3,2"), bad).ok);
    badsq = sq;
    std::get<PermHomCert>(badsq.terminal).nu = P("3,2");
    CHECK_FALSE(verify_witness(P("4,4,2,2"), badsq).ok);

    CHECK_FALSE(verify_witness(P("4,4,2,2"), w).ok);  // wrong lambda entirely
}

TEST_CASE("witness engine sweep up to size 11") {
    DecompCache cache;
    for (int n = 0; n <= 11; ++n)
        for (auto& p : partitions_of(n)) {
            if (!first_disconnected_ladder(p)) continue;
            Witness w = build_witness(p);
            VerifyResult res = verify_witness(p, w);
            CHECK_MESSAGE(res.ok, p.str(), ": ", res.reason);
            CHECK(oracle_classifier(p, cache) == Verdict::Reducible);
        }
}

TEST_CASE("witness json schema") {
    Witness w = build_witness(P("5,3,3,2"));
    json j = witness_to_json(w, true);
    CHECK(j["format"] == 1);
    CHECK(j["lambda"] == "5,3,3,2");
    CHECK(j["steps"].size() == 2);
    CHECK(j["steps"][0]["kind"] == "add_residue");
    CHECK(j["steps"][0]["residue"] == 1);
    CHECK(j["terminal"]["type"] == "carter_payne");
    CHECK(j["terminal"]["mu"] == "8,4,3,2,1");
    CHECK(j["verified"] == true);
    CHECK(j["reduced"] == "7,4,3,3,1");
}
