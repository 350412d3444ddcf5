#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <equivar/charclass.hpp>
#include <equivar/formal_model.hpp>

namespace equivar {

/// Base-space data used by the locally free pipeline: a Todd form and the
/// integrals of top-degree base monomials.
struct BaseData {
    std::string todd;
    std::map<std::string, std::string> integrals;
};

struct ModelFile {
    ModelSpec spec;
    std::vector<FixedLocusDatum> fixed_loci;
    std::optional<PipelineCase> pipeline_case;
    std::optional<BaseData> base;
};

/// Throws EngineError(parse_error) with line and column for malformed JSON
/// and with the JSON path for schema violations.
ModelFile parse_model_file(std::string_view json_text, std::string_view origin = "<memory>");
ModelFile read_model_file(const std::filesystem::path &path);

std::string model_file_to_json(const ModelFile &file);

/// Built-in model by name ("s1-on-s1", optionally with ".json").
std::vector<std::string> builtin_model_names();
std::optional<ModelFile> find_builtin_model(std::string_view name);
ModelFile builtin_model(std::string_view name);

/// An existing file path, else a built-in name.
ModelFile load_model(std::string_view path_or_name);

/// T^l acting on itself: frame dη_1..dη_l with iota_a(deta_j) = delta_aj.
ModelSpec torus_model_spec(int rank);

} // namespace equivar
