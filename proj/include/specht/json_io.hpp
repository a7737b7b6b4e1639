#ifndef SPECHT_JSON_IO_HPP
#define SPECHT_JSON_IO_HPP

#include "specht/classify.hpp"
#include "specht/fock.hpp"
#include "specht/laurent.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>

namespace specht {

using json = nlohmann::ordered_json;

json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json fock_vector_to_json(const FockVector& v);

// cache schema: {format, n, columns, rows, entries:[{row, col, poly}]}
json matrix_to_json(const DecompositionMatrix& m);
DecompositionMatrix matrix_from_json(const json& j);

// write-then-rename so concurrent readers never see a torn file
void save_decomposition_matrix(const DecompositionMatrix& m,
                               const std::filesystem::path& path);
std::optional<DecompositionMatrix> load_decomposition_matrix(
    const std::filesystem::path& path, int expected_n);

json witness_to_json(const Witness& w, bool verified);

}  // namespace specht

#endif
