#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "relbel/discrete_model.hpp"
#include "relbel/errors.hpp"
#include "relbel/model_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace relbel;
using namespace relbel::testing;

TEST_CASE("construction rejects broken invariants with indexed messages") {
    CHECK_THROWS_AS(DiscreteModel({"a", "a"}, {0.5, 0.5}, {"x"}, {{1.0}, {1.0}}), ValidationError);
    CHECK_THROWS_AS(DiscreteModel({"a", "b"}, {0.5, 0.6}, {"x"}, {{1.0}, {1.0}}), ValidationError);
    CHECK_THROWS_AS(DiscreteModel({"a", "b"}, {0.5, 0.5}, {"x", "y"}, {{0.7, 0.2}, {0.5, 0.5}}),
                    ValidationError);
    CHECK_THROWS_AS(DiscreteModel({"a", "b"}, {0.5, 0.5}, {"x", "y"}, {{0.7, 0.3}}),
                    ValidationError);
    CHECK_THROWS_AS(DiscreteModel({"a", "b"}, {-0.5, 1.5}, {"x"}, {{1.0}, {1.0}}), ValidationError);

    try {
        DiscreteModel({"a", "b"}, {0.5, 0.5}, {"x", "y"}, {{0.7, 0.3}, {0.6, 0.3}});
        CHECK(false);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("row 1") != std::string::npos);
    }
}

TEST_CASE("zero-prior theta points are allowed") {
    const DiscreteModel m({"a", "b"}, {1.0, 0.0}, {"x1", "x2"}, {{0.8, 0.2}, {0.2, 0.8}});
    const Distribution post = posterior(m, Label("x1"));
    CHECK(post[0] == 1.0);
    CHECK(post[1] == 0.0);
}

TEST_CASE("posterior on M1") {
    const DiscreteModel m1 = model_m1();
    const Distribution post = posterior(m1, Label("x1"));
    CHECK(post[0] == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(post[1] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("identical likelihood rows give posterior equal to prior") {
    const DiscreteModel flat = model_flat();
    const Distribution post = posterior(flat, Label("x2"));
    CHECK(post[0] == 0.5);
    CHECK(post[1] == 0.5);
}

TEST_CASE("posterior under impossible observation throws ZeroPredictive") {
    const DiscreteModel m({"a", "b"}, {0.5, 0.5}, {"x1", "x2"}, {{0.0, 1.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(posterior(m, Label("x1")), ZeroPredictive);
}

TEST_CASE("prior predictive on M1 and degenerate priors") {
    const Distribution m = prior_predictive(model_m1());
    CHECK(m[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(m[1] == doctest::Approx(0.5).epsilon(1e-14));

    const DiscreteModel degen({"a", "b"}, {1.0, 0.0}, {"x1", "x2"}, {{0.8, 0.2}, {0.2, 0.8}});
    const Distribution md = prior_predictive(degen);
    CHECK(md[0] == 0.8);
    CHECK(md[1] == 0.2);
}

TEST_CASE("marginal prior on M2") {
    const Distribution mp = marginal_prior(model_m2(), marg_m2());
    CHECK(mp[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mp[1] == doctest::Approx(0.5).epsilon(1e-14));

    const Marginalization ident = Marginalization::identity(model_m2());
    const Distribution mi = marginal_prior(model_m2(), ident);
    CHECK(mi[0] == 0.25);
    CHECK(mi[2] == 0.5);

    const Marginalization one({"p", "p", "p"});
    CHECK(marginal_prior(model_m2(), one)[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("conditional prior on M2") {
    const Distribution cond = conditional_prior(model_m2(), marg_m2(), "p0");
    CHECK(cond[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cond[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cond[2] == 0.0);

    // singleton preimage is a point mass
    const Distribution point = conditional_prior(model_m2(), marg_m2(), "p1");
    CHECK(point[2] == 1.0);

    // identity marginalization: point mass at theta0
    const Distribution ident = conditional_prior(model_m2(), Marginalization::identity(model_m2()), "b");
    CHECK(ident[1] == 1.0);

    const DiscreteModel zero({"a", "b"}, {1.0, 0.0}, {"x"}, {{1.0}, {1.0}});
    CHECK_THROWS_AS(conditional_prior(zero, Marginalization::identity(zero), "b"), ZeroPriorMass);
}

TEST_CASE("conditional prior predictive on M2") {
    CHECK(conditional_prior_predictive(model_m2(), marg_m2(), "p0", "x1") ==
          doctest::Approx(0.4).epsilon(1e-14));

    // identity marginalization reduces to the likelihood value
    CHECK(conditional_prior_predictive(model_m2(), Marginalization::identity(model_m2()), "a",
                                       "x1") == doctest::Approx(0.6).epsilon(1e-14));

    // all theta in one psi reduces to the prior predictive
    const Marginalization one({"p", "p", "p"});
    CHECK(conditional_prior_predictive(model_m2(), one, "p", "x1") ==
          doctest::Approx(0.65).epsilon(1e-14));
}

TEST_CASE("law of total probability over psi") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 200; ++rep) {
        const DiscreteModel model = random_model(rng);
        const Marginalization marg = random_marginalization(rng, model);
        const Distribution m = prior_predictive(model);
        const Distribution psi_prior = marginal_prior(model, marg);
        for (std::size_t j = 0; j < model.n_x(); ++j) {
            double total = 0.0;
            for (std::size_t k = 0; k < marg.n_psi(); ++k) {
                total += psi_prior[k] * conditional_prior_predictive(
                                            model, marg, marg.psi_labels()[k], model.x_labels()[j]);
            }
            CHECK(std::abs(total - m[j]) <= 1e-12);
        }
    }
}

TEST_CASE("posterior is equivariant under theta relabeling") {
    std::mt19937_64 rng(55);
    for (int rep = 0; rep < 100; ++rep) {
        const DiscreteModel model = random_model(rng);
        std::vector<std::size_t> perm(model.n_theta());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<Label> theta(perm.size());
        std::vector<double> prior(perm.size());
        std::vector<std::vector<double>> lik(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            theta[i] = model.theta_labels()[perm[i]];
            prior[i] = model.prior_at(perm[i]);
            lik[i] = model.likelihood_row(perm[i]);
        }
        const DiscreteModel shuffled(theta, prior, model.x_labels(), lik);

        const std::size_t j = std::uniform_int_distribution<std::size_t>(0, model.n_x() - 1)(rng);
        const Distribution a = posterior(model, j);
        const Distribution b = posterior(shuffled, j);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            CHECK(std::abs(b[i] - a[perm[i]]) <= 1e-12);
        }
    }
}

TEST_CASE("normalize helper is explicit and validating") {
    const std::vector<double> w = normalized({2.0, 6.0});
    CHECK(w[0] == 0.25);
    CHECK(w[1] == 0.75);
    CHECK_THROWS_AS(normalized({0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS(normalized({-1.0, 2.0}), ValidationError);
}

TEST_CASE("model file parsing: happy path and first-violation reporting") {
    const char* good = R"({
      "theta": ["t1", "t2"], "prior": [0.5, 0.5],
      "x": ["x1", "x2"],
      "likelihood": [[0.8, 0.2], [0.2, 0.8]],
      "psi": ["g", "g"]
    })";
    const LoadedModel loaded = parse_model_json(good, "inline");
    CHECK(loaded.model.n_theta() == 2);
    CHECK(loaded.marg.n_psi() == 1);
    CHECK(loaded.marg.psi_labels()[0] == "g");

    const char* no_psi = R"({
      "theta": ["t1", "t2"], "prior": [0.5, 0.5],
      "x": ["x1"], "likelihood": [[1.0], [1.0]]
    })";
    CHECK(parse_model_json(no_psi, "inline").marg.n_psi() == 2);

    auto expect_message = [](const char* text, const char* needle) {
        try {
            parse_model_json(text, "inline");
            CHECK(false);
        } catch (const ValidationError& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_message(R"({"theta": ["a"], "x": ["x"], "likelihood": [[1.0]]})", "prior");
    expect_message(R"({"theta": ["a"], "prior": [1.0], "x": ["x"], "likelihood": [[0.9]]})",
                   "row 0");
    expect_message(
        R"({"theta": ["a"], "prior": [1.0], "x": ["x"], "likelihood": [[1.0]], "psi": ["p","q"]})",
        "psi");
    expect_message("not json at all", "JSON");
}

TEST_CASE("marginalization invariants") {
    const Marginalization m({"p1", "p0", "p1"});
    CHECK(m.n_psi() == 2);
    CHECK(m.psi_labels()[0] == "p1");  // canonical order is first appearance
    CHECK(m.psi_labels()[1] == "p0");
    CHECK(m.preimage(0).size() == 2);
    CHECK(m.preimage(1).size() == 1);
    CHECK_THROWS_AS(m.psi_index("nope"), ValidationError);
    CHECK_THROWS_AS(check_compatible(model_m1(), m), ValidationError);
}
