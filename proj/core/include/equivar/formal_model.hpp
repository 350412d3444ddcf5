#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <equivar/linalg.hpp>
#include <equivar/superalg.hpp>

namespace equivar {

struct GeneratorSpec {
    std::string name;
    Parity parity = Parity::even;
    int form_degree = 0;
    GeneratorKind kind = GeneratorKind::plain_form;
    std::string frame;
    int slot = 0;
    bool basic = false;
};

struct FrameSpec {
    std::string id;
    int rank = 0;
    std::vector<std::string> slots;
    std::vector<RationalMatrix> moment_samples;
    std::vector<std::string> curvature;
};

/// Unvalidated description of a model, as read from a model file. Table
/// values are element expressions.
struct ModelSpec {
    std::string name;
    int manifold_dim = 0;
    std::optional<int> base_dim;
    std::vector<std::string> parameters;
    std::vector<GeneratorSpec> generators;
    std::map<std::string, std::string> d_table;
    std::map<std::string, std::vector<std::string>> iota_table;
    std::vector<FrameSpec> frames;
};

struct FrameDecl {
    std::string id;
    int rank = 0;
    std::vector<GenId> slots;
    std::vector<GenId> closed_args;
    std::vector<GenId> fibre_coords;
    std::vector<GenId> fibre_coforms;
    std::vector<RationalMatrix> moment_samples;
    /// f_{ja} = -iota_a(alpha_j) when every entry is a declared constant.
    std::optional<RationalMatrix> moment_matrix;
    std::vector<GenId> curvature;
};

class FormalModel {
public:
    /// Validates the presentation; throws EngineError(invariant_violation or
    /// parse_error) naming the first failing check.
    static FormalModel build(ModelSpec spec);

    const ModelSpec &spec() const noexcept { return spec_; }
    const std::string &name() const noexcept { return spec_.name; }
    int manifold_dim() const noexcept { return spec_.manifold_dim; }
    std::optional<int> base_dim() const noexcept { return spec_.base_dim; }

    int parameter_count() const noexcept { return static_cast<int>(spec_.parameters.size()); }
    const std::vector<std::string> &parameters() const noexcept { return spec_.parameters; }
    std::optional<int> find_parameter(std::string_view name) const;

    const std::vector<Generator> &generators() const noexcept { return generators_; }
    const Generator &generator(GenId id) const { return generators_.at(static_cast<std::size_t>(id)); }
    std::optional<GenId> find_generator(std::string_view name) const;
    GenId generator_id(std::string_view name) const;

    const std::vector<FrameDecl> &frames() const noexcept { return frames_; }
    const FrameDecl &frame(int index) const { return frames_.at(static_cast<std::size_t>(index)); }
    std::optional<int> find_frame(std::string_view id) const;
    int frame_index(std::string_view id) const;

    /// nullptr when the value is unknown (frame forms without a declared entry).
    const Element *d_value(GenId g) const;
    const Element *iota_value(GenId g, int parameter) const;
    const Element &D_value(GenId g) const { return D_table_.at(static_cast<std::size_t>(g)); }

    Element one() const { return Element::constant(1); }
    Element gen(GenId g) const;
    Element gen(std::string_view name) const { return gen(generator_id(name)); }
    Element param(int a) const;
    Element delta(int frame, MultiIndex deriv, DeltaArgument argument = DeltaArgument::closed) const;

private:
    FormalModel() = default;

    void validate() const;
    void check_truncation_consistency() const;

    ModelSpec spec_;
    std::vector<Generator> generators_;
    std::unordered_map<std::string, GenId> by_name_;
    std::vector<FrameDecl> frames_;
    std::vector<std::optional<Element>> d_table_;
    std::vector<std::vector<std::optional<Element>>> iota_table_;
    std::vector<Element> D_table_;
};

} // namespace equivar
