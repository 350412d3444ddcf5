#include <doctest.h>

#include "../support/checks.hpp"
#include "../support/generators.hpp"

#include <equivar/element_text.hpp>
#include <equivar/model_io.hpp>
#include <equivar/random_models.hpp>

using namespace equivar;

namespace {

ModelSpec plain_spec()
{
    ModelSpec s;
    s.name = "plain";
    s.manifold_dim = 3;
    s.parameters = {"X"};
    return s;
}

} // namespace

TEST_CASE("d squared must vanish")
{
    ModelSpec s = plain_spec();
    s.generators = {{"a", Parity::even, 0}, {"b", Parity::odd, 1}, {"c", Parity::even, 2}};
    s.d_table = {{"a", "b"}, {"b", "c"}};
    auto err = check::engine_error([&] { (void)FormalModel::build(s); });
    REQUIRE(err);
    CHECK(err->code == Errc::invariant_violation);
    CHECK(err->message.find("d(d(a))") != std::string::npos);
}

TEST_CASE("contractions must make generators invariant")
{
    ModelSpec s = plain_spec();
    s.generators = {{"beta", Parity::odd, 1}, {"phi", Parity::even, 0}, {"psi", Parity::odd, 1}};
    s.d_table = {{"phi", "psi"}};
    s.iota_table = {{"beta", {"phi"}}};
    auto err = check::engine_error([&] { (void)FormalModel::build(s); });
    REQUIRE(err);
    CHECK(err->message.find("'beta' is not invariant") != std::string::npos);
}

TEST_CASE("table entries are type checked")
{
    ModelSpec s = plain_spec();
    s.generators = {{"beta", Parity::odd, 1}, {"gamma", Parity::even, 2}};
    s.d_table = {{"beta", "beta"}};
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::invariant_violation);
    s.d_table = {{"beta", "nosuch"}};
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::parse_error);
    s.d_table = {{"beta", "gamma"}};
    s.iota_table = {{"gamma", {"0", "0"}}};
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::invariant_violation);
    s.generators.push_back({"odd0", Parity::odd, 2});
    s.iota_table.clear();
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::invariant_violation);
}

TEST_CASE("moment matrix is derived from constant contractions")
{
    const FormalModel m = FormalModel::build(builtin_model("s1-on-s1").spec);
    REQUIRE(m.frame(0).moment_matrix);
    CHECK(*m.frame(0).moment_matrix == RationalMatrix(1, 1, {-1}));

    ModelSpec bad = builtin_model("s1-on-s1").spec;
    bad.frames[0].moment_samples = {RationalMatrix(1, 1, {2})};
    auto err = check::engine_error([&] { (void)FormalModel::build(bad); });
    REQUIRE(err);
    CHECK(err->message.find("disagree") != std::string::npos);

    const FormalModel contact = FormalModel::build(builtin_model("s3-contact").spec);
    CHECK_FALSE(contact.frame(0).moment_matrix);
    CHECK(contact.iota_value(contact.generator_id("alpha"), 0) == nullptr);
}

TEST_CASE("frame declarations are checked")
{
    ModelSpec s = builtin_model("s1-on-s1").spec;
    s.frames[0].slots = {"u"};
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::invariant_violation);
    s = builtin_model("s1-on-s1").spec;
    s.frames[0].rank = 2;
    CHECK(check::engine_error([&] { (void)FormalModel::build(s); })->code == Errc::invariant_violation);
}

TEST_CASE("built-in torus models agree with the generated torus spec")
{
    for (int rank : {1, 2}) {
        const FormalModel generated = FormalModel::build(torus_model_spec(rank));
        const FormalModel stored =
            FormalModel::build(builtin_model(rank == 1 ? "s1-on-s1" : "t2-on-t2").spec);
        CHECK(generated.name() == stored.name());
        CHECK(generated.manifold_dim() == stored.manifold_dim());
        CHECK(generated.parameters() == stored.parameters());
        REQUIRE(generated.generators().size() == stored.generators().size());
        for (GenId g = 0; g < static_cast<GenId>(generated.generators().size()); ++g) {
            CHECK(generated.generator(g).name == stored.generator(g).name);
            CHECK(to_text(generated.D_value(g), generated) == to_text(stored.D_value(g), stored));
        }
        CHECK(*generated.frame(0).moment_matrix == *stored.frame(0).moment_matrix);
    }
}

TEST_CASE("random models are deterministic and valid")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ModelSpec a = random_model_spec(seed);
        const ModelSpec b = random_model_spec(seed);
        CHECK(a.generators.size() == b.generators.size());
        CHECK(a.iota_table == b.iota_table);
        CHECK(a.d_table == b.d_table);
        const FormalModel m = FormalModel::build(a);
        CHECK(m.manifold_dim() <= 6);
        CHECK(m.frame(0).rank <= 3);
        CHECK(m.frame(0).rank <= m.parameter_count());
    }
    std::mt19937_64 r1(3);
    std::mt19937_64 r2(3);
    for (int i = 0; i < 20; ++i) {
        CHECK(draw(r1, -5, 5) == draw(r2, -5, 5));
        CHECK(random_gl_plus(r1, 3).determinant() > 0);
        (void)random_gl_plus(r2, 3);
    }
}
