#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <equivar/report.hpp>

namespace equivar {

inline constexpr std::uint64_t default_seed = 20240601;

struct VerifyOptions {
    std::uint64_t seed = default_seed;
    int frame_trials = 200;
};

struct IndexOptions {
    int max_degree = 20;
    int twist = 0;
    int rank = 1;
};

/// EQUIVAR_MAX_DEGREE when set and valid, otherwise 20.
int default_max_degree();

std::vector<std::string> index_example_names();

/// `model` is a file path or the name of a built-in model.
Report run_verify(std::string_view model, const VerifyOptions &opts = {});
Report run_index(std::string_view example, const IndexOptions &opts);

/// Full command line: exit 0 when every check passes, 1 on a failed check,
/// 2 on usage or engine errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace equivar
