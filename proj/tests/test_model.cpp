#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "recsim/distributions.hpp"
#include "recsim/model.hpp"
#include "recsim/rng.hpp"

using namespace recsim;

TEST_CASE("select_item picks argmax of scores + theta") {
    std::vector<double> s1 = {0.9, 0.1}, t0 = {0.0, 0.0};
    CHECK(select_item(s1, t0) == 0);
    std::vector<double> s0 = {0.0, 0.0}, t1 = {0.2, 0.9};
    CHECK(select_item(s0, t1) == 1);
    std::vector<double> tie = {0.5, 0.5};
    CHECK(select_item(tie, t0) == 0); // tie -> lowest index
}

TEST_CASE("select_item rejects mismatched lengths") {
    std::vector<double> a = {1.0, 2.0}, b = {1.0};
    CHECK_THROWS_AS(select_item(a, b), std::invalid_argument);
    CHECK_THROWS_AS(select_item({}, {}), std::invalid_argument);
}

TEST_CASE("realize_value sums the three components") {
    CHECK(realize_value({{0.7}}, {{0.2}, {-0.1}}, 0) == doctest::Approx(0.8));
    CHECK(realize_value({{0.3, 0.6}}, {{0.0, 0.0}, {0.0, 0.0}}, 1) == doctest::Approx(0.6));
    CHECK(realize_value({{0.0}}, {{1.0}, {0.0}}, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(realize_value({{0.5}}, {{0.0}, {0.0}}, 1), std::out_of_range);
}

TEST_CASE("step_regret compares Q + theta only") {
    Catalog cat{{1.0, 0.0}};
    std::vector<double> zero = {0.0, 0.0};
    CHECK(step_regret(cat, zero, 1) == doctest::Approx(1.0));
    CHECK(step_regret(cat, zero, 0) == doctest::Approx(0.0));
    Catalog flat{{0.5, 0.5}};
    std::vector<double> t = {0.0, 0.3};
    CHECK(step_regret(flat, t, 0) == doctest::Approx(0.3));
}

TEST_CASE("make_feedback per channel") {
    CHECK(make_feedback(FeedbackChannel::AbsoluteBiased, 0.8, 0.2, 0.5) ==
          doctest::Approx(0.8));
    CHECK(make_feedback(FeedbackChannel::UnbiasedQuality, 0.8, 0.2, 0.5) ==
          doctest::Approx(0.6));
    CHECK(make_feedback(FeedbackChannel::RelativeToExpectation, 0.8, 0.2, 0.5) ==
          doctest::Approx(0.1));
}

TEST_CASE("property: regret non-negative and zero under oracle scores") {
    RngStream rng(2024, 0);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + static_cast<int>(rng.next_below(8));
        Catalog cat;
        std::vector<double> theta(k);
        for (int i = 0; i < k; ++i) {
            cat.qualities.push_back(rng.next_uniform(-2.0, 2.0));
            theta[i] = rng.next_uniform(-3.0, 3.0);
        }
        int any = static_cast<int>(rng.next_below(k));
        CHECK(step_regret(cat, theta, any) >= 0.0);
        // scores == qualities => chosen item is the agent's true optimum
        int chosen = select_item(cat.qualities, theta);
        CHECK(step_regret(cat, theta, chosen) == doctest::Approx(0.0));
    }
}

TEST_CASE("property: score-shift invariance") {
    RngStream rng(77, 0);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 2 + static_cast<int>(rng.next_below(6));
        std::vector<double> scores(k), theta(k), shifted(k);
        double shift = rng.next_uniform(-10.0, 10.0);
        for (int i = 0; i < k; ++i) {
            scores[i] = rng.next_uniform(-1.0, 1.0);
            theta[i] = rng.next_uniform(-1.0, 1.0);
            shifted[i] = scores[i] + shift;
        }
        CHECK(select_item(scores, theta) == select_item(shifted, theta));
    }
}

TEST_CASE("property: unbiased channel recovers epsilon exactly") {
    RngStream rng(31, 0);
    Catalog cat{{0.1, 0.4, 0.9}};
    double eps_sum = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        AgentDraw draw;
        for (int j = 0; j < 3; ++j) {
            draw.theta.push_back(rng.next_normal());
            draw.epsilon.push_back(rng.next_normal());
        }
        int chosen = static_cast<int>(rng.next_below(3));
        double v = realize_value(cat, draw, chosen);
        double w = make_feedback(FeedbackChannel::UnbiasedQuality, v, draw.theta[chosen], 0.0);
        CHECK(w - cat.qualities[chosen] == doctest::Approx(draw.epsilon[chosen]));
        eps_sum += w - cat.qualities[chosen];
    }
    CHECK(std::fabs(eps_sum / n) < 5.0 / std::sqrt(static_cast<double>(n)));
}
