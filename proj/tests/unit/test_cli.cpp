#include <doctest.h>

#include "../support/checks.hpp"

#include <equivar/cli.hpp>
#include <equivar/element_text.hpp>
#include <equivar/model_io.hpp>
#include <equivar/render.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace equivar;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name, const std::string &text)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

} // namespace

TEST_CASE("verify on the circle passes and renders the delta class")
{
    const Run r = cli({"verify", "s1-on-s1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    const Run j = cli({"verify", "s1-on-s1", "--json", "-"});
    const Report rep = report_from_json(j.out);
    CHECK(rep.passed());
    bool found = false;
    for (const auto &c : rep.results) {
        if (c.check == "j-form[E0]") {
            found = true;
            CHECK(c.witness == "delta[E0]*deta");
        }
    }
    CHECK(found);
}

TEST_CASE("verify with a zero moment row fails at transversality")
{
    ModelFile f = builtin_model("s3-contact");
    f.spec.frames[0].moment_samples.push_back(RationalMatrix(1, 2, {0, 0}));
    const auto path = temp_file("equivar-zero-row.json", model_file_to_json(f));
    const Report rep = run_verify(path.string());
    CHECK_FALSE(rep.passed());
    REQUIRE_FALSE(rep.results.empty());
    CHECK(rep.results[0].check == "transversality[E0]");
    CHECK(rep.results[0].status == Status::fail);
    CHECK(rep.results[0].witness->find("[[0, 0]]") != std::string::npos);
    CHECK(cli({"verify", path.string()}).code == 1);
}

TEST_CASE("seeded verify reports are byte identical")
{
    const Run a = cli({"verify", "t2-on-t2", "--seed", "7", "--frame-trials", "200", "--json", "-"});
    const Run b = cli({"verify", "t2-on-t2", "--seed", "7", "--frame-trials", "200", "--json", "-"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Run c = cli({"index", "s3-contact", "--json", "-"});
    CHECK(c.out == cli({"index", "s3-contact", "--json", "-"}).out);
}

TEST_CASE("report JSON round trips")
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"index", "cp1-dolbeault", "--twist", "1", "--json", "-"},
             {"index", "cp1-l2", "--json", "-"},
             {"index", "torus-zero", "--rank", "2", "--max-degree", "3", "--json", "-"},
             {"verify", "hopf", "--frame-trials", "5", "--json", "-"}}) {
        const Run r = cli(args);
        const Report rep = report_from_json(r.out);
        CHECK(to_json(rep) == r.out);
        CHECK(report_from_json(to_json(rep)) == rep);
    }
}

TEST_CASE("index examples")
{
    const Report cp1 = report_from_json(cli({"index", "cp1-dolbeault", "--twist", "1", "--json", "-"}).out);
    CHECK(cp1.passed());
    REQUIRE(cp1.characters);
    CHECK(*cp1.characters == std::vector<CharacterEntry>{{{-1}, 1}, {{1}, 1}});

    const Report hopf = run_index("hopf", {.max_degree = 20});
    CHECK(hopf.passed());
    for (int k = 0; k <= 20; ++k) {
        bool seen = false;
        for (const auto &e : *hopf.characters) {
            if (e.weight == Weight{k}) {
                seen = true;
                CHECK(e.coefficient == k + 1);
            }
        }
        CHECK(seen);
    }

    const Report l2 = run_index("cp1-l2", {.twist = 0});
    CHECK(l2.passed());
    bool skipped = false;
    for (const auto &c : l2.results) {
        skipped = skipped || (c.check == "formula-side" && c.status == Status::skipped_out_of_scope);
    }
    CHECK(skipped);
    CHECK(check::engine_error([] { (void)run_index("nope", {}); })->code == Errc::unknown_example);
}

TEST_CASE("exit codes")
{
    CHECK(cli({"index", "nope"}).code == 2);
    CHECK(cli({"index", "nope"}).err.find("UnknownExample") != std::string::npos);
    CHECK(cli({"verify", "no/such/file.json"}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"index", "hopf", "--max-degree", "-1"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("malformed model files report line and column")
{
    const auto path = temp_file("equivar-bad.json", "{\n  \"name\": \"x\",\n  \"manifoldDim\": ,\n}");
    const Run r = cli({"verify", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);

    auto err = check::engine_error([] { (void)parse_model_file(R"({"name": "x", "manifoldDim": "three"})"); });
    REQUIRE(err);
    CHECK(err->code == Errc::parse_error);
    CHECK(err->message.find("manifoldDim") != std::string::npos);
}

TEST_CASE("model files round trip")
{
    for (const auto &name : builtin_model_names()) {
        const ModelFile f = builtin_model(name);
        const std::string text = model_file_to_json(f);
        CHECK(model_file_to_json(parse_model_file(text)) == text);
    }
}

TEST_CASE("EQUIVAR_MAX_DEGREE overrides the default window")
{
    CHECK(default_max_degree() == 20);
    setenv("EQUIVAR_MAX_DEGREE", "5", 1);
    CHECK(default_max_degree() == 5);
    const Report r = report_from_json(cli({"index", "torus-zero", "--json", "-"}).out);
    CHECK(r.characters->size() == 11);
    setenv("EQUIVAR_MAX_DEGREE", "junk", 1);
    CHECK(default_max_degree() == 20);
    unsetenv("EQUIVAR_MAX_DEGREE");
}

TEST_CASE("render")
{
    const Run text = cli({"render", "s3-contact", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out == "J[E0] = delta[E0]*alpha\nJ[E0] (display) = delta[E0;f]*alpha + delta[E0;f]^(1)*alpha*dalpha\n");
    const Run latex = cli({"render", "s1-on-s1", "--format", "latex"});
    CHECK(latex.out.find("\\delta(u) d\\eta") != std::string::npos);
    CHECK(cli({"render", "s1-on-s1", "--format", "html"}).code == 2);
}
