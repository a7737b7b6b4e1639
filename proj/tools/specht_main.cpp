#include "specht/blocks.hpp"
#include "specht/classify.hpp"
#include "specht/fock.hpp"
#include "specht/json_io.hpp"
#include "specht/lr.hpp"
#include "specht/sweeps.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace specht;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
    std::string cache_dir;
    int jobs = 1;
    std::string output = "json";  // json | table
    int max_n = 30;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("SPECHT_CACHE_DIR")) return env;
    return "specht-cache";
}

void emit(const RunConfig& cfg, const json& j,
          const std::function<void(std::ostream&)>& table) {
    if (cfg.output == "table")
        table(std::cout);
    else
        std::cout << j.dump(2) << '\n';
}

int cmd_classify(const RunConfig& cfg, const std::string& text, bool want_witness,
                 bool want_oracle, bool want_conjecture) {
    Partition lambda = Partition::parse(text);
    DecompCache cache(cfg.cache_dir);
    json j;
    j["format"] = 1;
    j["lambda"] = lambda.str();
    j["regular"] = is_regular(lambda);
    j["restricted"] = is_restricted(lambda);
    bool by_ladder = ladder_criterion(lambda) == LadderVerdict::ReducibleByLadder;
    j["ladder_criterion"] = by_ladder ? "reducible_by_ladder" : "not_covered";

    std::string engine;
    Verdict v;
    if (is_regular(lambda) || is_restricted(lambda)) {
        engine = "carter";
        v = carter_classifier(lambda);
    } else {
        engine = "conjecture";
        v = conjecture_classifier(lambda);
    }
    j["engine"] = engine;
    j["classification"] = v == Verdict::Reducible ? "reducible" : "irreducible";

    if (want_conjecture) {
        if (is_regular(lambda) || is_restricted(lambda)) {
            j["conjecture"] = nullptr;
        } else {
            FMReport rep = fm_report(lambda);
            FMReport repc = fm_report(conjugate(lambda));
            json fm;
            fm["verdict"] = conjecture_classifier(lambda) == Verdict::Reducible
                                ? "reducible"
                                : "irreducible";
            fm["lambda_fm"] = rep.is_fm;
            fm["conjugate_fm"] = repc.is_fm;
            fm["a"] = rep.a;
            fm["b"] = rep.b;
            fm["c"] = rep.c;
            if (rep.failed_condition) fm["failed_condition"] = *rep.failed_condition;
            j["conjecture"] = fm;
        }
    }
    if (want_oracle) {
        j["oracle"] = oracle_classifier(lambda, cache) == Verdict::Reducible
                          ? "reducible"
                          : "irreducible";
        j["composition_length"] = composition_length(lambda, cache);
    }
    if (want_witness) {
        if (by_ladder) {
            Witness w = build_witness(lambda);
            bool ok = verify_witness(lambda, w).ok;
            j["witness"] = witness_to_json(w, ok);
            if (!ok) throw std::logic_error("freshly built witness failed verification");
        } else {
            j["witness"] = nullptr;
        }
    }
    emit(cfg, j, [&](std::ostream& out) {
        out << "lambda: " << lambda.str() << '\n';
        out << "classification: " << j["classification"].get<std::string>() << " ("
            << engine << ")\n";
        out << "ladder criterion: " << j["ladder_criterion"].get<std::string>() << '\n';
        if (j.contains("oracle"))
            out << "oracle: " << j["oracle"].get<std::string>()
                << " (length " << j["composition_length"].get<long long>() << ")\n";
        if (j.contains("witness") && !j["witness"].is_null())
            out << "witness: " << j["witness"]["terminal"]["type"].get<std::string>()
                << " terminal, verified="
                << (j["witness"]["verified"].get<bool>() ? "true" : "false") << '\n';
    });
    return kExitPass;
}

int cmd_decompose(const RunConfig& cfg, int n, const std::string& block_core,
                  bool check_rouquier) {
    if (n < 0 || n > cfg.max_n)
        throw CLI::ValidationError("n must lie between 0 and --max-n");
    DecompCache cache(cfg.cache_dir);
    const DecompositionMatrix& m = cache.get(n);
    std::map<Partition, std::pair<int, int>> blocks;  // core -> (rows, cols)
    std::map<Partition, int> weights;
    for (auto& r : m.rows) {
        BlockData bd = core_and_weight(r);
        blocks[bd.core].first += 1;
        weights[bd.core] = bd.weight;
    }
    for (auto& c : m.cols) blocks[core_and_weight(c).core].second += 1;
    json j;
    j["format"] = 1;
    j["n"] = n;
    if (!cfg.cache_dir.empty())
        j["file"] = (std::filesystem::path(cfg.cache_dir) / DecompCache::file_name(n))
                        .string();
    json blist = json::array();
    for (auto& [core, counts] : blocks) {
        if (!block_core.empty() && Partition::parse(block_core) != core) continue;
        json b;
        b["core"] = core.str();
        b["weight"] = weights[core];
        b["rows"] = counts.first;
        b["columns"] = counts.second;
        blist.push_back(b);
    }
    j["blocks"] = blist;
    bool check_pass = true;
    if (check_rouquier) {
        long long checked = 0;
        json bad = json::array();
        for (auto& [core, counts] : blocks) {
            (void)counts;
            if (weights[core] > core.rows() + 1) continue;
            for (auto& lam : m.rows) {
                if (core_and_weight(lam).core != core) continue;
                for (auto& mu : m.cols) {
                    if (core_and_weight(mu).core != core) continue;
                    ++checked;
                    if (m.entry(lam, mu).at_one() != rouquier_decomposition_number(lam, mu)) {
                        check_pass = false;
                        bad.push_back(lam.str() + "|" + mu.str());
                    }
                }
            }
        }
        j["rouquier_check"] = {{"pass", check_pass},
                               {"checked", checked},
                               {"counterexamples", bad}};
    }
    emit(cfg, j, [&](std::ostream& out) {
        out << "n " << n << ", " << blist.size() << " block(s)\n";
        for (auto& b : blist)
            out << "  core " << b["core"].get<std::string>() << "  weight "
                << b["weight"].get<int>() << "  rows " << b["rows"].get<int>()
                << "  columns " << b["columns"].get<int>() << '\n';
        if (check_rouquier)
            out << "rouquier check: " << (check_pass ? "pass" : "FAIL") << '\n';
    });
    return check_pass ? kExitPass : kExitCounterexample;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int max_n) {
    DecompCache cache(cfg.cache_dir);
    SweepResult result;
    std::cerr << "running " << suite << " sweep up to n = " << max_n << '\n';
    if (suite == "theorem-main")
        result = sweep_theorem_main(max_n, cache, cfg.jobs);
    else if (suite == "conjecture")
        result = sweep_conjecture(max_n, cache, cfg.jobs);
    else if (suite == "carter")
        result = sweep_carter(max_n, cache, cfg.jobs);
    else if (suite == "rouquier")
        result = sweep_rouquier(max_n, cache, cfg.jobs);
    else if (suite == "witness")
        result = sweep_witness(max_n, cache, cfg.jobs);
    else
        throw CLI::ValidationError("unknown suite '" + suite + "'");
    json j;
    j["format"] = 1;
    j["suite"] = suite;
    j["max_n"] = max_n;
    j["checked"] = result.checked;
    j["pass"] = result.pass;
    j["counterexamples"] = result.counterexamples;
    emit(cfg, j, [&](std::ostream& out) {
        out << "suite " << suite << ": " << (result.pass ? "PASS" : "FAIL") << " ("
            << result.checked << " checked)\n";
        for (auto& c : result.counterexamples) out << "  counterexample " << c << '\n';
    });
    return result.pass ? kExitPass : kExitCounterexample;
}

int cmd_lr(const RunConfig& cfg, const std::vector<std::string>& shapes, bool support) {
    json j;
    j["format"] = 1;
    if (support) {
        if (shapes.size() != 2)
            throw CLI::ValidationError("--support needs LEFT and RIGHT");
        Partition left = Partition::parse(shapes[0]);
        Partition right = Partition::parse(shapes[1]);
        j["left"] = left.str();
        j["right"] = right.str();
        json sup = json::array();
        for (auto& a : lr_support(left, right)) sup.push_back(a.str());
        j["support"] = sup;
        j["count"] = sup.size();
        emit(cfg, j, [&](std::ostream& out) {
            out << "support size " << sup.size() << '\n';
            for (auto& a : sup) out << "  " << a.get<std::string>() << '\n';
        });
    } else {
        if (shapes.size() != 3)
            throw CLI::ValidationError("need OUTER LEFT RIGHT");
        Partition outer = Partition::parse(shapes[0]);
        Partition left = Partition::parse(shapes[1]);
        Partition right = Partition::parse(shapes[2]);
        long long c = lr_coefficient(outer, left, right);
        j["outer"] = outer.str();
        j["left"] = left.str();
        j["right"] = right.str();
        j["coefficient"] = c;
        emit(cfg, j, [&](std::ostream& out) { out << "c = " << c << '\n'; });
    }
    return kExitPass;
}

LadderWord parse_word(const std::string& text) {
    LadderWord word;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t colon = tok.find(':');
        try {
            int residue = std::stoi(tok.substr(0, colon));
            int mult = colon == std::string::npos ? 1 : std::stoi(tok.substr(colon + 1));
            if ((residue != 0 && residue != 1) || mult < 1) throw std::invalid_argument(tok);
            word.push_back({residue, mult});
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad word token '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return word;
}

int cmd_fock_apply(const RunConfig& cfg, const std::string& start_text,
                   const std::string& word_text) {
    Partition start = Partition::parse(start_text);
    LadderWord word = parse_word(word_text);
    FockVector image = apply_word(fock_unit(start), word);
    json j;
    j["format"] = 1;
    j["start"] = start.str();
    json ws = json::array();
    for (auto& s : word) ws.push_back({{"residue", s.residue}, {"mult", s.mult}});
    j["word"] = ws;
    j["entries"] = fock_vector_to_json(image);
    emit(cfg, j, [&](std::ostream& out) {
        for (auto& e : j["entries"])
            out << "  " << e["partition"].get<std::string>() << ": "
                << laurent_from_json(e["poly"]).str() << '\n';
    });
    return kExitPass;
}

int cmd_block(const RunConfig& cfg, const std::string& text) {
    Partition lambda = Partition::parse(text);
    BlockData bd = core_and_weight(lambda);
    json j;
    j["format"] = 1;
    j["lambda"] = lambda.str();
    j["core"] = bd.core.str();
    j["weight"] = bd.weight;
    j["core_length"] = bd.core_length;
    bool rq = bd.weight <= bd.core_length + 1;
    j["rouquier"] = rq;
    if (rq) {
        TwoQuotient q = two_quotient(lambda);
        j["quotient"] = {{"horizontal", q.horizontal.str()},
                         {"vertical", q.vertical.str()}};
    }
    emit(cfg, j, [&](std::ostream& out) {
        out << "core " << bd.core.str() << ", weight " << bd.weight
            << (rq ? ", rouquier" : "") << '\n';
        if (rq)
            out << "quotient (" << j["quotient"]["horizontal"].get<std::string>() << " | "
                << j["quotient"]["vertical"].get<std::string>() << ")\n";
    });
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of Specht module reducibility at q = -1"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.cache_dir = default_cache_dir();
    app.add_option("--cache-dir", cfg.cache_dir, "decomposition matrix cache directory");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--max-n", cfg.max_n, "largest size decompose accepts");

    auto* classify = app.add_subcommand("classify", "decide reducibility of a partition");
    classify->fallthrough();
    std::string classify_partition;
    bool want_witness = false, want_oracle = false, want_conjecture = false;
    classify->add_option("partition", classify_partition, "partition, e.g. 4,2,2,2 or -")
        ->required();
    classify->add_flag("--witness", want_witness, "build and verify a witness");
    classify->add_flag("--oracle", want_oracle, "also run the canonical basis oracle");
    classify->add_flag("--conjecture", want_conjecture, "report the FM shape analysis");

    auto* decompose = app.add_subcommand("decompose", "compute a decomposition matrix");
    decompose->fallthrough();
    int decompose_n = 0;
    std::string decompose_block;
    bool decompose_check = false;
    decompose->add_option("n", decompose_n, "size")->required();
    decompose->add_option("--block", decompose_block, "restrict the summary to one core");
    decompose->add_flag("--check-rouquier", decompose_check,
                        "cross-validate Rouquier blocks against LR coefficients");

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->fallthrough();
    std::string suite;
    int verify_max_n = -1;
    verify->add_option("suite", suite, "theorem-main|conjecture|carter|rouquier|witness")
        ->required();
    verify->add_option("--max-n", verify_max_n, "sweep bound");

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lr->fallthrough();
    std::vector<std::string> lr_shapes;
    bool lr_support_flag = false;
    lr->add_option("shapes", lr_shapes, "OUTER LEFT RIGHT, or LEFT RIGHT with --support");
    lr->add_flag("--support", lr_support_flag, "list every outer shape with c > 0");

    auto* fock = app.add_subcommand("fock", "Fock space computations");
    fock->fallthrough();
    auto* fock_apply = fock->add_subcommand("apply", "apply a divided power word");
    fock_apply->fallthrough();
    std::string fock_start = "-", fock_word;
    fock_apply->add_option("--start", fock_start, "basis partition the word acts on");
    fock_apply->add_option("--word", fock_word, "steps i:a,... applied left to right")
        ->required();

    auto* block = app.add_subcommand("block", "core, weight and quotient report");
    block->fallthrough();
    std::string block_partition;
    block->add_option("partition", block_partition)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*classify)
            return cmd_classify(cfg, classify_partition, want_witness, want_oracle,
                                want_conjecture);
        if (*decompose)
            return cmd_decompose(cfg, decompose_n, decompose_block, decompose_check);
        if (*verify) {
            if (verify_max_n < 0) {
                if (suite == "rouquier")
                    verify_max_n = 18;
                else if (suite == "witness")
                    verify_max_n = 16;
                else
                    verify_max_n = 20;
            }
            return cmd_verify(cfg, suite, verify_max_n);
        }
        if (*lr) return cmd_lr(cfg, lr_shapes, lr_support_flag);
        if (*fock_apply) return cmd_fock_apply(cfg, fock_start, fock_word);
        if (*block) return cmd_block(cfg, block_partition);
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
