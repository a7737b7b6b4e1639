#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specht/blocks.hpp"
#include "specht/classify.hpp"
#include "specht/fock.hpp"
#include "specht/homs.hpp"
#include "specht/json_io.hpp"
#include "specht/lr.hpp"
#include "specht/sweeps.hpp"

namespace py = pybind11;

namespace {

using namespace specht;

Partition from_parts(const std::vector<int>& parts) { return Partition(parts); }

std::vector<int> to_parts(const Partition& p) { return p.parts(); }

py::dict laurent_to_dict(const Laurent& poly) {
    py::dict d;
    for (auto& [e, c] : poly.terms()) d[py::int_(e)] = c;
    return d;
}

LadderWord word_from_pairs(const std::vector<std::pair<int, int>>& steps) {
    LadderWord word;
    for (auto& [residue, mult] : steps) word.push_back({residue, mult});
    return word;
}

const char* verdict_name(Verdict v) {
    return v == Verdict::Reducible ? "reducible" : "irreducible";
}

}  // namespace

PYBIND11_MODULE(pyspecht, m) {
    m.doc() = "exact combinatorics of Specht module reducibility at q = -1 (e = 2)";

    m.def("conjugate",
          [](const std::vector<int>& p) { return to_parts(conjugate(from_parts(p))); });
    m.def("dominates", [](const std::vector<int>& a, const std::vector<int>& b) {
        return dominates(from_parts(a), from_parts(b));
    });
    m.def("is_regular",
          [](const std::vector<int>& p, int e) { return is_regular(from_parts(p), e); },
          py::arg("parts"), py::arg("e") = 2);
    m.def("is_restricted",
          [](const std::vector<int>& p, int e) { return is_restricted(from_parts(p), e); },
          py::arg("parts"), py::arg("e") = 2);
    m.def("is_alternating",
          [](const std::vector<int>& p) { return is_alternating(from_parts(p)); });
    m.def("regularise",
          [](const std::vector<int>& p) { return to_parts(regularise(from_parts(p))); });
    m.def("first_disconnected_ladder", [](const std::vector<int>& p) -> py::object {
        auto l = first_disconnected_ladder(from_parts(p));
        return l ? py::cast(*l) : py::none();
    });
    m.def("add_residue", [](const std::vector<int>& p, int i) {
        return to_parts(add_full_residue(from_parts(p), i));
    });
    m.def("remove_residue", [](const std::vector<int>& p, int i) {
        return to_parts(remove_full_residue(from_parts(p), i));
    });

    m.def("core_and_weight", [](const std::vector<int>& p) {
        BlockData bd = core_and_weight(from_parts(p));
        return py::make_tuple(to_parts(bd.core), bd.weight);
    });
    m.def("is_rouquier",
          [](const std::vector<int>& p) { return is_rouquier(from_parts(p)); });
    m.def("two_quotient", [](const std::vector<int>& p) {
        TwoQuotient q = two_quotient(from_parts(p));
        return py::make_tuple(to_parts(q.horizontal), to_parts(q.vertical));
    });
    m.def("from_quotient", [](const std::vector<int>& core, const std::vector<int>& h,
                              const std::vector<int>& v) {
        return to_parts(from_quotient(from_parts(core), from_parts(h), from_parts(v)));
    });

    m.def("lr_coefficient", [](const std::vector<int>& outer, const std::vector<int>& left,
                               const std::vector<int>& right) {
        return lr_coefficient(from_parts(outer), from_parts(left), from_parts(right));
    });
    m.def("lr_support", [](const std::vector<int>& left, const std::vector<int>& right) {
        std::vector<std::vector<int>> out;
        for (auto& a : lr_support(from_parts(left), from_parts(right)))
            out.push_back(to_parts(a));
        return out;
    });

    m.def("apply_word",
          [](const std::vector<int>& start,
             const std::vector<std::pair<int, int>>& steps) {
              FockVector image = apply_word(fock_unit(from_parts(start)),
                                            word_from_pairs(steps));
              py::list out;
              for (auto& [p, c] : image)
                  out.append(py::make_tuple(to_parts(p), laurent_to_dict(c)));
              return out;
          });
    m.def("ladder_fill_degree",
          [](const std::vector<int>& base, const std::vector<int>& target, int x) {
              return ladder_fill_degree(from_parts(base), from_parts(target), x);
          });

    m.def("v_decomposition_number",
          [](const std::vector<int>& lam, const std::vector<int>& mu,
             const std::string& cache_dir) {
              DecompCache cache{std::filesystem::path(cache_dir)};
              return laurent_to_dict(
                  v_decomposition_number(from_parts(lam), from_parts(mu), cache));
          },
          py::arg("lam"), py::arg("mu"), py::arg("cache_dir") = "");
    m.def("composition_length",
          [](const std::vector<int>& lam, const std::string& cache_dir) {
              DecompCache cache{std::filesystem::path(cache_dir)};
              return composition_length(from_parts(lam), cache);
          },
          py::arg("lam"), py::arg("cache_dir") = "");
    m.def("decomposition_matrix",
          [](int n, const std::string& cache_dir) {
              DecompCache cache{std::filesystem::path(cache_dir)};
              return py::module_::import("json").attr("loads")(
                  matrix_to_json(cache.get(n)).dump());
          },
          py::arg("n"), py::arg("cache_dir") = "");

    m.def("classify", [](const std::vector<int>& parts) {
        Partition lam = from_parts(parts);
        if (is_regular(lam) || is_restricted(lam))
            return std::string(verdict_name(carter_classifier(lam)));
        return std::string(verdict_name(conjecture_classifier(lam)));
    });
    m.def("oracle_classify",
          [](const std::vector<int>& parts, const std::string& cache_dir) {
              DecompCache cache{std::filesystem::path(cache_dir)};
              return std::string(
                  verdict_name(oracle_classifier(from_parts(parts), cache)));
          },
          py::arg("parts"), py::arg("cache_dir") = "");
    m.def("witness_json", [](const std::vector<int>& parts) {
        Partition lam = from_parts(parts);
        Witness w = build_witness(lam);
        bool ok = verify_witness(lam, w).ok;
        return witness_to_json(w, ok).dump();
    });
    m.def("verify_suite",
          [](const std::string& suite, int max_n, int jobs, const std::string& cache_dir) {
              DecompCache cache{std::filesystem::path(cache_dir)};
              SweepResult r;
              if (suite == "theorem-main")
                  r = sweep_theorem_main(max_n, cache, jobs);
              else if (suite == "conjecture")
                  r = sweep_conjecture(max_n, cache, jobs);
              else if (suite == "carter")
                  r = sweep_carter(max_n, cache, jobs);
              else if (suite == "rouquier")
                  r = sweep_rouquier(max_n, cache, jobs);
              else if (suite == "witness")
                  r = sweep_witness(max_n, cache, jobs);
              else
                  throw std::invalid_argument("unknown suite '" + suite + "'");
              return py::make_tuple(r.pass, r.checked, r.counterexamples);
          },
          py::arg("suite"), py::arg("max_n"), py::arg("jobs") = 1,
          py::arg("cache_dir") = "");
}
