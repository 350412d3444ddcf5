#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <equivar/laurent.hpp>

namespace equivar {

enum class Status { pass, fail, skipped_out_of_scope };

std::string_view status_name(Status s) noexcept;
std::optional<Status> parse_status(std::string_view text) noexcept;

struct CheckResult {
    std::string check;
    Status status = Status::pass;
    std::optional<std::string> witness;

    friend bool operator==(const CheckResult &, const CheckResult &) = default;
};

struct CharacterEntry {
    Weight weight;
    Integer coefficient;

    friend bool operator==(const CharacterEntry &a, const CharacterEntry &b)
    {
        return a.weight == b.weight && a.coefficient == b.coefficient;
    }
};

struct Conventions {
    std::string two_pi_policy;
    std::string fourier_sign;
    std::string orientation_rule;

    static Conventions engine();
    friend bool operator==(const Conventions &, const Conventions &) = default;
};

struct Report {
    std::string command;
    std::string model;
    Conventions conventions = Conventions::engine();
    std::vector<CheckResult> results;
    std::optional<std::vector<CharacterEntry>> characters;

    /// No result has status fail.
    bool passed() const;
    void add(std::string check, bool ok, std::optional<std::string> witness = std::nullopt);
    void skip(std::string check, std::string reason);
    /// A passing result that carries a value, e.g. the computed form.
    void record(std::string check, std::string value);

    friend bool operator==(const Report &, const Report &) = default;
};

/// Deterministic, pretty-printed JSON with a trailing newline.
std::string to_json(const Report &r);
Report report_from_json(std::string_view text);

} // namespace equivar
