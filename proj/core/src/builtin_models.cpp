#include <equivar/error.hpp>
#include <equivar/model_io.hpp>

#include "builtin_models_data.hpp"

namespace equivar {

std::vector<std::string> builtin_model_names()
{
    std::vector<std::string> names;
    for (const auto &[name, text] : detail::builtin_model_table()) {
        names.emplace_back(name);
    }
    return names;
}

std::optional<ModelFile> find_builtin_model(std::string_view name)
{
    if (name.size() > 5 && name.substr(name.size() - 5) == ".json") {
        name.remove_suffix(5);
    }
    if (const auto slash = name.find_last_of('/'); slash != std::string_view::npos) {
        name.remove_prefix(slash + 1);
    }
    for (const auto &[n, text] : detail::builtin_model_table()) {
        if (n == name) {
            return parse_model_file(text, std::string(n) + ".json");
        }
    }
    return std::nullopt;
}

ModelFile builtin_model(std::string_view name)
{
    if (auto m = find_builtin_model(name)) {
        return *m;
    }
    fail(Errc::unknown_example, "no built-in model named '" + std::string(name) + "'");
}

} // namespace equivar
