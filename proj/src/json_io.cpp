#include "specht/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace specht {

json laurent_to_json(const Laurent& p) {
    json j = json::object();
    for (auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
    return j;
}

Laurent laurent_from_json(const json& j) {
    Laurent p;
    for (auto it = j.begin(); it != j.end(); ++it)
        p.add_term(std::stoi(it.key()), it.value().get<long long>());
    return p;
}

json fock_vector_to_json(const FockVector& v) {
    json entries = json::array();
    for (auto& [p, c] : v)
        entries.push_back({{"partition", p.str()}, {"poly", laurent_to_json(c)}});
    return entries;
}

json matrix_to_json(const DecompositionMatrix& m) {
    json j;
    j["format"] = 1;
    j["n"] = m.n;
    json cols = json::array(), rows = json::array();
    for (auto& c : m.cols) cols.push_back(c.str());
    for (auto& r : m.rows) rows.push_back(r.str());
    j["columns"] = cols;
    j["rows"] = rows;
    json entries = json::array();
    for (auto& r : m.rows)
        for (auto& c : m.cols) {
            const Laurent& e = m.entry(r, c);
            if (e.is_zero()) continue;
            entries.push_back(
                {{"row", r.str()}, {"col", c.str()}, {"poly", laurent_to_json(e)}});
        }
    j["entries"] = entries;
    return j;
}

DecompositionMatrix matrix_from_json(const json& j) {
    if (!j.contains("format") || j["format"].get<int>() != 1)
        throw std::invalid_argument("decomposition matrix file has unknown format");
    DecompositionMatrix m;
    m.n = j["n"].get<int>();
    for (auto& r : j["rows"]) m.rows.push_back(Partition::parse(r.get<std::string>()));
    for (auto& c : j["columns"]) {
        Partition col = Partition::parse(c.get<std::string>());
        m.columns.emplace(col, FockVector{});
        m.cols.push_back(std::move(col));
    }
    for (auto& e : j["entries"]) {
        Partition row = Partition::parse(e["row"].get<std::string>());
        Partition col = Partition::parse(e["col"].get<std::string>());
        m.columns.at(col)[row] = laurent_from_json(e["poly"]);
    }
    return m;
}

void save_decomposition_matrix(const DecompositionMatrix& m,
                               const std::filesystem::path& path) {
    std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << matrix_to_json(m).dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<DecompositionMatrix> load_decomposition_matrix(
    const std::filesystem::path& path, int expected_n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        DecompositionMatrix m = matrix_from_json(j);
        if (m.n != expected_n) return std::nullopt;
        return m;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

json witness_to_json(const Witness& w, bool verified) {
    json j;
    j["format"] = 1;
    j["lambda"] = w.lambda.str();
    json steps = json::array();
    for (const ReductionStep& s : w.steps) {
        json step;
        step["kind"] = step_kind_name(s.kind);
        if (s.kind != StepKind::Conjugate) step["residue"] = s.residue;
        step["justification"] = s.justification;
        steps.push_back(step);
    }
    j["steps"] = steps;
    json t;
    t["type"] = terminal_type_name(w.terminal);
    std::visit(
        [&](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, RouquierCert>) {
                t["horizontal"] = cert.horizontal.str();
                t["vertical"] = cert.vertical.str();
                t["support_size"] = cert.support_size;
            } else if constexpr (std::is_same_v<T, CarterPayneCert>) {
                t["mu"] = cert.mu.str();
                t["removable_ladder"] = cert.removable_ladder;
                t["addable_ladder"] = cert.addable_ladder;
            } else if constexpr (std::is_same_v<T, PermHomCert>) {
                t["nu"] = cert.nu.str();
                t["xi"] = cert.xi.str();
                t["mu"] = cert.mu.str();
            } else {
                t["mu"] = cert.mu.str();
                t["mu_hat"] = cert.mu_hat.str();
                t["x"] = cert.x;
                t["degree"] = cert.degree;
                t["degree_hat"] = cert.degree_hat;
            }
        },
        w.terminal);
    j["terminal"] = t;
    j["reduced"] = w.reduced().str();
    j["verified"] = verified;
    return j;
}

}  // namespace specht
