#include <equivar/characters.hpp>
#include <equivar/cli.hpp>
#include <equivar/element_text.hpp>
#include <equivar/error.hpp>
#include <equivar/genco.hpp>
#include <equivar/jform.hpp>
#include <equivar/model_io.hpp>
#include <equivar/random_models.hpp>
#include <equivar/render.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

namespace equivar {

int default_max_degree()
{
    if (const char *env = std::getenv("EQUIVAR_MAX_DEGREE")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 1000) {
            return static_cast<int>(v);
        }
    }
    return 20;
}

std::vector<std::string> index_example_names()
{
    return {"torus-zero", "cp1-dolbeault", "cp1-l2", "hopf", "s3-contact"};
}

Report run_verify(std::string_view model, const VerifyOptions &opts)
{
    const ModelFile file = load_model(model);
    const FormalModel m = FormalModel::build(file.spec);
    Report r;
    r.command = "verify";
    r.model = m.name();
    for (std::size_t fi = 0; fi < m.frames().size(); ++fi) {
        const FrameDecl &F = m.frames()[fi];
        const std::string tag = "[" + F.id + "]";
        const TransversalityResult tr = check_transversality(m, F.id);
        r.add("transversality" + tag, tr.transverse,
              tr.witness ? std::optional<std::string>("sample " + std::to_string(tr.witness_index) + " = " +
                                                      tr.witness->to_string() + " has rank below " +
                                                      std::to_string(F.rank))
                         : std::nullopt);
        if (!tr.transverse) {
            continue;
        }
        const JForm j = j_form(m, F.id);
        r.record("j-form" + tag, to_text(j.value, m));
        r.add("closedness" + tag, check_closed(j, m), to_text(equivariant_differential(j.value, m), m));
        r.add("absorption" + tag, check_absorption(j, m));

        std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ULL * (fi + 1));
        std::optional<std::string> witness;
        for (int t = 0; t < opts.frame_trials && !witness; ++t) {
            const RationalMatrix A = random_gl_plus(rng, F.rank);
            if (!frame_change_compare(m, F.id, A)) {
                witness = "A = " + A.to_string();
            }
        }
        r.add("frame-independence" + tag, !witness, witness);

        const FormalModel fm = with_fibre(m, F.id);
        const Element fourier = fourier_fibre_integrate(fm, F.id);
        const Element expected = transfer(j.value, m, fm);
        r.add("fourier-fibre" + tag, fourier == expected,
              fourier == expected ? std::nullopt : std::optional<std::string>(to_text(fourier, fm)));
    }
    return r;
}

Report run_index(std::string_view example, const IndexOptions &opts)
{
    SeriesPolicy policy;
    policy.max_degree = opts.max_degree;
    if (example == "torus-zero") {
        return index_torus_zero_pipeline(opts.rank, policy);
    }
    if (example == "cp1-dolbeault") {
        return index_cp1_pipeline(Cp1Case::etm, opts.twist, policy);
    }
    if (example == "cp1-l2") {
        return index_cp1_pipeline(Cp1Case::e0, opts.twist, policy);
    }
    if (example == "hopf") {
        return index_hopf_pipeline(policy);
    }
    if (example == "s3-contact") {
        return index_s3_contact_pipeline(policy);
    }
    fail(Errc::unknown_example, "unknown example '" + std::string(example) + "'");
}

namespace {

void print_summary(const Report &r, std::ostream &out)
{
    out << r.command << " " << r.model << "\n";
    for (const auto &c : r.results) {
        out << "  " << status_name(c.status) << "  " << c.check;
        if (c.witness && c.status != Status::pass) {
            out << "  (" << *c.witness << ")";
        }
        out << "\n";
    }
    if (r.characters) {
        out << "  characters: " << r.characters->size() << " nonzero weights\n";
    }
    out << (r.passed() ? "PASS" : "FAIL") << "\n";
}

void emit(const Report &r, const std::string &json_path, std::ostream &out)
{
    if (json_path == "-") {
        out << to_json(r);
        return;
    }
    print_summary(r, out);
    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            fail(Errc::out_of_range, "cannot write '" + json_path + "'");
        }
        f << to_json(r);
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Equivariant forms with delta coefficients: verification and index pipelines", "equivar"};
    app.require_subcommand(1);

    std::string model;
    std::string json_path;
    VerifyOptions vopts;
    auto *verify = app.add_subcommand("verify", "Run the property suite on a model file or built-in model");
    verify->add_option("model", model, "Model file or built-in name")->required();
    verify->add_option("--seed", vopts.seed, "Seed for randomized frame changes");
    verify->add_option("--frame-trials", vopts.frame_trials, "Random GL+ frame changes per frame")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");

    std::string example;
    IndexOptions iopts;
    iopts.max_degree = default_max_degree();
    auto *index = app.add_subcommand("index", "Run an index pipeline against its oracle");
    index->add_option("example", example, "torus-zero, cp1-dolbeault, cp1-l2, hopf or s3-contact")->required();
    index->add_option("--max-degree", iopts.max_degree, "Expansion window")->check(CLI::NonNegativeNumber);
    index->add_option("--twist", iopts.twist, "Line bundle twist n");
    index->add_option("--rank", iopts.rank, "Torus rank for torus-zero")->check(CLI::PositiveNumber);
    index->add_option("--json", json_path, "Write the JSON report to a file ('-' for stdout)");

    std::string format = "text";
    auto *render = app.add_subcommand("render", "Print J and its Taylor display for every frame");
    render->add_option("model", model, "Model file or built-in name")->required();
    render->add_option("--format", format, "latex or text")->check(CLI::IsMember({"latex", "text"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (*verify) {
            const Report r = run_verify(model, vopts);
            emit(r, json_path, out);
            return r.passed() ? 0 : 1;
        }
        if (*index) {
            const Report r = run_index(example, iopts);
            emit(r, json_path, out);
            return r.passed() ? 0 : 1;
        }
        const ModelFile file = load_model(model);
        out << render_j_forms(FormalModel::build(file.spec), *parse_render_format(format));
        return 0;
    } catch (const EngineError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace equivar
