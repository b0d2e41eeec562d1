#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sombor/graph.hpp"
#include "sombor/inequalities.hpp"

using namespace sombor;
using doctest::Approx;

namespace {

const CheckResult& row(const std::vector<CheckResult>& rows, int case_index) {
    for (const CheckResult& r : rows)
        if (r.case_index == case_index) return r;
    REQUIRE(false);
    return rows.front();
}

Graph k3() { return complete_graph(3); }
Graph k3_p2() { return disjoint_union(complete_graph(3), path_graph(2)); }

}  // namespace

TEST_CASE("ka chain on a regular graph: upper bound tight") {
    const auto rows = check_ka_power_chain(k3(), 2, 1, 0.5);
    REQUIRE(rows.size() == 2);
    CHECK(row(rows, 0).verdict == Verdict::holds_strict);
    const CheckResult& upper = row(rows, 1);
    CHECK(upper.verdict == Verdict::tight);
    CHECK(*upper.tightness_predicted);
    CHECK(*upper.tightness_observed);
    CHECK(upper.tightness_iff);
}

TEST_CASE("ka chain on a path: strict and slack values match the oracle") {
    const auto rows = check_ka_power_chain(path_graph(3), 2, 1, 0.5);
    const CheckResult& strict = row(rows, 0);
    CHECK(strict.lhs == Approx(2.0 * std::sqrt(17.0)).epsilon(1e-12));  // KA(4, 1/2)
    CHECK(strict.rhs == Approx(10.0).epsilon(1e-12));                   // KA(2, 1)
    CHECK(strict.verdict == Verdict::holds_strict);
    const CheckResult& upper = row(rows, 1);
    CHECK(upper.rhs == Approx(std::exp2(0.5) * 2.0 * std::sqrt(17.0)).epsilon(1e-12));
    CHECK(upper.verdict == Verdict::holds_strict);
    CHECK_FALSE(*upper.tightness_observed);
}

TEST_CASE("ka chain single-bound regimes") {
    // beta < 0 < lambda
    const auto neg = check_ka_power_chain(path_graph(3), 2, -0.5, 0.5);
    REQUIRE(neg.size() == 1);
    const CheckResult& r = row(neg, 4);
    CHECK(r.lhs == Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));        // mSO(P_3)
    CHECK(r.rhs == Approx(0.5 * std::sqrt(5.0)).epsilon(1e-12));        // BSO(P_3) / 2
    CHECK(r.verdict == Verdict::holds_strict);
    // lambda < 0 < beta
    const auto pos = check_ka_power_chain(path_graph(3), 2, 0.5, -0.5);
    REQUIRE(pos.size() == 1);
    CHECK(row(pos, 5).verdict != Verdict::violated);
}

TEST_CASE("ka chain hypothesis handling") {
    const auto same = check_ka_power_chain(k3(), 2, 1, 1);
    REQUIRE(same.size() == 1);
    CHECK(same[0].verdict == Verdict::hypothesis_unmet);
    CHECK(check_ka_power_chain(k3(), 0, 1, 2)[0].verdict == Verdict::hypothesis_unmet);
    const Graph isolated = Graph::from_edge_list(3, {{0, 1}});
    CHECK(check_ka_power_chain(isolated, 2, 1, 0.5)[0].verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("reduced chain: cycles tight, pendants gate the negative regimes") {
    const std::vector<std::array<double, 3>> points = {
        {2, 1, 0.5}, {1, 2, 1}, {-1, -2, -1}, {2, -1, 1}};
    for (const auto& [a, b, l] : points) {
        for (const CheckResult& r : check_reduced_ka_power_chain(cycle_graph(4), a, b, l)) {
            REQUIRE(r.verdict != Verdict::violated);
            if (!r.strict && r.verdict != Verdict::hypothesis_unmet)
                REQUIRE(r.verdict == Verdict::tight);
        }
    }
    // alpha < 0 with pendants present
    const auto gated = check_reduced_ka_power_chain(path_graph(3), -1, 1, 0.5);
    REQUIRE(gated.size() == 1);
    CHECK(gated[0].verdict == Verdict::hypothesis_unmet);
    // alpha*beta*lambda < 0 with pendants present
    CHECK(check_reduced_ka_power_chain(path_graph(3), 1, -1, 0.5)[0].verdict ==
          Verdict::hypothesis_unmet);

    // near-complete graph, all hypotheses met
    const Graph k4_minus = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    const auto rows = check_reduced_ka_power_chain(k4_minus, 1, 2, 1);
    CHECK(row(rows, 0).lhs == Approx(28.0).epsilon(1e-12));  // reduced KA(2,1)
    CHECK(row(rows, 0).rhs == Approx(52.0).epsilon(1e-12));  // reduced KA(1,2)
    CHECK(row(rows, 0).verdict == Verdict::holds_strict);
    CHECK(row(rows, 1).rhs == Approx(56.0).epsilon(1e-12));
    CHECK(row(rows, 1).verdict == Verdict::holds_strict);
}

TEST_CASE("so_alpha chain spot checks") {
    const auto reg = check_so_alpha_chain(k3(), 1, 2);
    CHECK(row(reg, 0).lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(reg, 0).rhs == Approx(12.0).epsilon(1e-12));
    CHECK(row(reg, 1).verdict == Verdict::tight);

    const auto path = check_so_alpha_chain(path_graph(3), 1, 2);
    CHECK(row(path, 0).lhs == Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(row(path, 0).rhs == Approx(6.0).epsilon(1e-12));
    CHECK(row(path, 1).rhs == Approx(2.0 * std::sqrt(10.0)).epsilon(1e-12));
    CHECK(row(path, 1).verdict == Verdict::holds_strict);

    const auto single = check_so_alpha_chain(path_graph(2), -1, 2);
    REQUIRE(single.size() == 1);
    CHECK(row(single, 4).verdict == Verdict::tight);  // P_2 is regular

    CHECK(check_so_alpha_chain(k3(), 2, 2)[0].verdict == Verdict::hypothesis_unmet);
    CHECK(check_so_alpha_chain(k3(), 2, -1)[0].verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("so_alpha against the first Zagreb index") {
    const auto p3 = check_so_alpha_vs_zagreb(path_graph(3), 2);
    CHECK(row(p3, 2).lhs == Approx(6.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(p3, 2).rhs == Approx(2.0 * std::sqrt(5.0)).epsilon(1e-12));
    CHECK(row(p3, 2).verdict == Verdict::holds_strict);
    CHECK(row(p3, 3).verdict == Verdict::holds_strict);

    const auto reg = check_so_alpha_vs_zagreb(k3(), 2);
    CHECK(row(reg, 2).verdict == Verdict::tight);  // 2^(-1/2) M1 = SO on a regular graph

    const auto half = check_so_alpha_vs_zagreb(k3(), 0.5);
    CHECK(row(half, 0).lhs == Approx(12.0).epsilon(1e-12));
    CHECK(row(half, 0).rhs == Approx(24.0).epsilon(1e-12));  // SO_{1/2}(K_3) = 3 (2 sqrt2)^2
    CHECK(row(half, 1).verdict == Verdict::tight);           // 2^{1/a-1} M1 = 2 M1 = 24

    CHECK(check_so_alpha_vs_zagreb(k3(), 1)[0].verdict == Verdict::hypothesis_unmet);
    CHECK(check_so_alpha_vs_zagreb(k3(), 0)[0].verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("modified Sombor vs Banhatti-Sombor") {
    const CheckResult p2 = check_modified_sombor_vs_banhatti(path_graph(2));
    CHECK(p2.verdict == Verdict::tight);
    CHECK(p2.lhs == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));

    const CheckResult star = check_modified_sombor_vs_banhatti(star_graph(3));
    CHECK(star.lhs == Approx(3.0 / std::sqrt(10.0)).epsilon(1e-12));
    CHECK(star.rhs == Approx(0.5 * std::sqrt(10.0)).epsilon(1e-12));
    CHECK(star.verdict == Verdict::holds_strict);

    const CheckResult mixed = check_modified_sombor_vs_banhatti(k3_p2());
    CHECK(mixed.verdict == Verdict::tight);  // regular components
    CHECK(*mixed.tightness_predicted);
}

TEST_CASE("ka vs variable Zagreb lower bound") {
    const CheckResult reg = check_ka_vs_variable_zagreb(k3(), 2, 0.5);
    CHECK(reg.case_index == 1);
    CHECK(reg.lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(reg.verdict == Verdict::tight);
    CHECK(*reg.tightness_predicted);

    const CheckResult star = check_ka_vs_variable_zagreb(star_graph(3), 2, 0.5);
    CHECK(star.lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));  // (30 + 18)/(4 sqrt2)
    CHECK(star.rhs == Approx(3.0 * std::sqrt(10.0)).epsilon(1e-12));
    CHECK(star.verdict == Verdict::holds_strict);
    CHECK_FALSE(*star.tightness_predicted);

    const CheckResult quarter = check_ka_vs_variable_zagreb(path_graph(3), 2, 0.25);
    CHECK(quarter.case_index == 0);
    CHECK(quarter.rhs == Approx(2.0 * std::pow(5.0, 0.25)).epsilon(1e-12));
    CHECK(quarter.lhs == Approx(std::pow(18.0 / (3.0 * std::sqrt(2.0)), 0.5)).epsilon(1e-12));
    CHECK(quarter.verdict == Verdict::holds_strict);
    CHECK_FALSE(quarter.tightness_predicted.has_value());  // no claim in this regime

    CHECK(check_ka_vs_variable_zagreb(k3(), 2, 0).verdict == Verdict::hypothesis_unmet);
    CHECK(check_ka_vs_variable_zagreb(k3(), 2, -1).verdict == Verdict::hypothesis_unmet);
    CHECK(check_ka_vs_variable_zagreb(k3(), 0, 1).verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("Sombor vs forgotten index bound is tight exactly on regular graphs") {
    const CheckResult reg = check_sombor_vs_forgotten(k3());
    CHECK(reg.lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(reg.verdict == Verdict::tight);
    const CheckResult star = check_sombor_vs_forgotten(star_graph(3));
    CHECK(star.verdict == Verdict::holds_strict);
    CHECK_FALSE(*star.tightness_predicted);
}

TEST_CASE("reversed-Holder constant") {
    for (double p : {1.5, 2.0, 3.0})
        for (double a : {0.25, 1.0, 7.0})
            CHECK(std::fabs(holder_constant(p, a, a) - 1.0) <= 1e-12);
    CHECK(holder_constant(2, 1, 4) == Approx(1.0606601717798212).epsilon(1e-14));
    // branch for 1 < p < 2 with q = 3
    CHECK(holder_constant(1.5, 1, 2) ==
          Approx((2.0 / 3.0) * std::pow(0.5, 1.0 / 6.0) + (1.0 / 3.0) * std::cbrt(2.0))
              .epsilon(1e-14));
    CHECK_THROWS_AS(holder_constant(1.0, 1, 2), DomainError);
    CHECK_THROWS_AS(holder_constant(2.0, 2, 1), DomainError);
    CHECK_THROWS_AS(holder_constant(2.0, 0, 1), DomainError);
}

TEST_CASE("reversed-Holder inequality over random ratio-bounded vectors") {
    std::mt19937 rng(99);
    for (double p : {1.5, 2.0, 3.0}) {
        const double q = p / (p - 1.0);
        for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 4}, {0.5, 2}, {2, 3}}) {
            const double constant = holder_constant(p, a, b);
            for (int trial = 0; trial < 10000; ++trial) {
                const int len = std::uniform_int_distribution<int>(1, 24)(rng);
                double wp = 0, zq = 0, wz = 0;
                for (int k = 0; k < len; ++k) {
                    const double z = std::uniform_real_distribution<double>(0.05, 2.0)(rng);
                    const double ratio = std::uniform_real_distribution<double>(a, b)(rng);
                    const double w = std::pow(ratio * std::pow(z, q), 1.0 / p);
                    wp += std::pow(w, p);
                    zq += std::pow(z, q);
                    wz += w * z;
                }
                const double lhs = std::pow(wp, 1.0 / p) * std::pow(zq, 1.0 / q);
                REQUIRE(lhs <= constant * wz * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("Holder product chain") {
    // biregular: upper bound tight
    const auto star = check_holder_product_chain(star_graph(3), 2, 1, 0.5, 2);
    CHECK(row(star, 0).lhs == Approx(900.0).epsilon(1e-12));
    CHECK(row(star, 0).rhs == Approx(900.0).epsilon(1e-12));
    CHECK(row(star, 0).verdict == Verdict::tight);
    CHECK(*row(star, 0).tightness_predicted);
    CHECK_FALSE(row(star, 0).tightness_iff);  // sufficient condition only

    // regular: lower bound tight, characterized both ways
    const auto reg = check_holder_product_chain(k3(), 2, 1, 0.25, 2);
    CHECK(row(reg, 1).lhs == Approx(576.0).epsilon(1e-12));
    CHECK(row(reg, 1).rhs == Approx(576.0).epsilon(1e-12));
    CHECK(row(reg, 1).verdict == Verdict::tight);
    CHECK(row(reg, 1).tightness_iff);

    // path at a non-degenerate point: strict on both sides
    const auto path = check_holder_product_chain(path_graph(4), 2, 1, 0.25, 2);
    CHECK(row(path, 0).verdict == Verdict::holds_strict);
    CHECK(row(path, 1).verdict == Verdict::holds_strict);

    // mu = beta/2 with p = 2 turns both factors into the index itself, so
    // the chain collapses to an identity on every graph; t = 0 also leaves
    // the lower bound uncharacterized
    const auto degenerate = check_holder_product_chain(path_graph(4), 2, 1, 0.5, 2);
    CHECK(row(degenerate, 0).lhs == doctest::Approx(324.0).epsilon(1e-12));
    CHECK(row(degenerate, 0).rhs == doctest::Approx(324.0).epsilon(1e-12));
    CHECK(row(degenerate, 0).verdict == Verdict::tight);
    CHECK_FALSE(row(degenerate, 1).tightness_predicted.has_value());
    CHECK(row(degenerate, 1).verdict == Verdict::tight);

    CHECK(check_holder_product_chain(k3(), 2, 1, 0.5, 1)[0].verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("Holder edge-count bound") {
    const CheckResult star = check_holder_edge_count_bound(star_graph(3), 2, 0.25, 2);
    CHECK(star.lhs == Approx(9.0).epsilon(1e-12));
    CHECK(star.rhs == Approx(9.0).epsilon(1e-12));  // mSO * SO on a biregular graph
    CHECK(star.verdict == Verdict::tight);

    const CheckResult path = check_holder_edge_count_bound(path_graph(4), 2, 0.25, 2);
    CHECK(path.lhs == Approx(9.0).epsilon(1e-12));
    CHECK(path.rhs ==
          Approx(oracle::edge_power_sum(4, {{0, 1}, {1, 2}, {2, 3}}, 2, -0.5) *
                 oracle::edge_power_sum(4, {{0, 1}, {1, 2}, {2, 3}}, 2, 0.5))
              .epsilon(1e-12));
    CHECK(path.verdict == Verdict::holds_strict);

    CHECK(check_holder_edge_count_bound(k3(), 2, 0.25, 2).verdict == Verdict::tight);
    CHECK(check_holder_edge_count_bound(k3(), 2, 0.25, 0.5).verdict == Verdict::hypothesis_unmet);
}

TEST_CASE("Sombor product bounds") {
    const auto reg = check_sombor_product_bounds(k3());
    CHECK(row(reg, 0).lhs == Approx(9.0).epsilon(1e-12));
    CHECK(row(reg, 0).verdict == Verdict::tight);
    CHECK(row(reg, 1).rhs == Approx(9.0).epsilon(1e-12));  // coefficient collapses to 1
    CHECK(row(reg, 1).verdict == Verdict::tight);

    const auto star = check_sombor_product_bounds(star_graph(3));
    CHECK(row(star, 0).verdict == Verdict::tight);  // product = m^2 = 9 on a biregular graph
    CHECK(row(star, 1).rhs == Approx((4.0 / 3.0) * 9.0).epsilon(1e-12));
    CHECK(row(star, 1).verdict == Verdict::holds_strict);

    const auto path = check_sombor_product_bounds(path_graph(4));
    const double product =
        oracle::edge_power_sum(4, {{0, 1}, {1, 2}, {2, 3}}, 2, -0.5) *
        oracle::edge_power_sum(4, {{0, 1}, {1, 2}, {2, 3}}, 2, 0.5);
    CHECK(row(path, 0).rhs == Approx(product).epsilon(1e-12));
    CHECK(row(path, 0).verdict == Verdict::holds_strict);
    CHECK(row(path, 1).rhs == Approx((9.0 / 8.0) * 9.0).epsilon(1e-12));
    CHECK(row(path, 1).verdict == Verdict::holds_strict);
}

TEST_CASE("balanced disconnected unions attain the product and Holder bounds") {
    // three single edges plus a triangle: equally many edges at the two
    // extreme degree pairs, which is exactly the reversed-Holder equality
    // configuration; regularity characterizes equality only on connected
    // graphs, so these rows must carry a one-way claim
    const Graph balanced =
        Graph::from_edge_list(9, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {7, 8}, {6, 8}});
    const auto rows = check_sombor_product_bounds(balanced);
    CHECK(row(rows, 1).lhs == doctest::Approx(40.5).epsilon(1e-12));
    CHECK(row(rows, 1).rhs == doctest::Approx(40.5).epsilon(1e-12));
    CHECK(row(rows, 1).verdict == Verdict::tight);
    CHECK_FALSE(*row(rows, 1).tightness_predicted);
    CHECK_FALSE(row(rows, 1).tightness_iff);

    // square plus an edge, same story for the general chain
    const Graph square_plus = disjoint_union(cycle_graph(4), path_graph(2));
    const auto chain = check_holder_product_chain(square_plus, -2, 1, -2, 2);
    CHECK(row(chain, 1).lhs == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(row(chain, 1).rhs == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(row(chain, 1).verdict == Verdict::tight);
    CHECK_FALSE(row(chain, 1).tightness_iff);

    // on connected graphs the claim stays two-way
    CHECK(row(check_sombor_product_bounds(path_graph(4)), 1).tightness_iff);
    CHECK(row(check_holder_product_chain(path_graph(4), -2, 1, -2, 2), 1).tightness_iff);
}

TEST_CASE("scalar power-sum linear bound") {
    for (double x : {0.5, 1.0, 3.0})
        for (double a : {1.0, 1.5, 2.0, 4.0}) {
            const auto [lhs, rhs] = power_sum_linear_bound(x, x, a);
            CHECK(lhs == Approx(std::exp2(1.0 / a) * x).epsilon(1e-12));
            CHECK(rhs == Approx(lhs).epsilon(1e-12));  // y = x is an equality case
        }
    const auto [lhs0, rhs0] = power_sum_linear_bound(1, 0, 2);
    CHECK(lhs0 == Approx(1.0));
    CHECK(rhs0 == Approx(1.0));
    const auto [lhs1, rhs1] = power_sum_linear_bound(2, 1, 2);
    CHECK(lhs1 == Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(rhs1 == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(lhs1 < rhs1);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 100000; ++trial) {
        double x = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        double y = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        if (x < y) std::swap(x, y);
        const double a = std::uniform_real_distribution<double>(1.0, 8.0)(rng);
        const auto [lhs, rhs] = power_sum_linear_bound(x, y, a);
        REQUIRE(lhs <= rhs + 1e-12 * std::max(1.0, rhs));
    }

    CHECK_THROWS_AS(power_sum_linear_bound(1, 2, 2), DomainError);
    CHECK_THROWS_AS(power_sum_linear_bound(2, 1, 0.5), DomainError);
}

TEST_CASE("sharp Zagreb bounds: printed vs per-edge variants") {
    // the per-edge form is tight on K_3, the printed form is not
    const auto per_edge = check_so_alpha_zagreb_sharp(k3(), 2, true);
    CHECK(row(per_edge, 2).rhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(per_edge, 2).verdict == Verdict::tight);
    CHECK(*row(per_edge, 2).tightness_predicted);

    const auto printed = check_so_alpha_zagreb_sharp(k3(), 2, false);
    CHECK(row(printed, 1).rhs == Approx(12.0 - (2.0 - std::sqrt(2.0)) * 2.0).epsilon(1e-12));
    CHECK(row(printed, 1).verdict == Verdict::holds_strict);
    CHECK_FALSE(row(printed, 1).tightness_predicted.has_value());

    // lower bound rides along in both variants
    CHECK(row(per_edge, 0).lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(per_edge, 0).verdict == Verdict::tight);
    CHECK(row(printed, 0).verdict == Verdict::tight);

    // a single edge makes the two variants coincide
    const auto m1_printed = check_so_alpha_zagreb_sharp(path_graph(2), 2, false);
    const auto m1_per_edge = check_so_alpha_zagreb_sharp(path_graph(2), 2, true);
    CHECK(row(m1_printed, 1).rhs == Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(m1_printed, 1).verdict == Verdict::tight);
    CHECK(row(m1_per_edge, 2).verdict == Verdict::tight);

    // alpha = 1 collapses everything to equalities without a characterization
    const auto collapsed = check_so_alpha_zagreb_sharp(path_graph(3), 1, true);
    CHECK(row(collapsed, 0).verdict == Verdict::tight);
    CHECK(row(collapsed, 2).verdict == Verdict::tight);
    CHECK_FALSE(row(collapsed, 0).tightness_predicted.has_value());

    CHECK(check_so_alpha_zagreb_sharp(k3(), 0.5, true)[0].verdict == Verdict::hypothesis_unmet);

    // the alpha = 2 instance reports the same numbers under its own id
    const auto fixed = check_sombor_zagreb_sharp(k3(), true);
    CHECK(fixed[0].theorem == TheoremId::sombor_zagreb_sharp);
    CHECK(row(fixed, 2).verdict == Verdict::tight);
    CHECK_FALSE(fixed[0].params.alpha.has_value());
}

TEST_CASE("Sombor / Zagreb / inverse-sum-indeg bounds") {
    const auto reg = check_sombor_isi_bounds(k3());
    CHECK(row(reg, 0).lhs == Approx(6.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(row(reg, 0).rhs == Approx(std::sqrt(2.0) * 6.0).epsilon(1e-12));
    CHECK(row(reg, 0).verdict == Verdict::tight);
    CHECK(row(reg, 1).lhs == Approx(6.0).epsilon(1e-12));
    CHECK(row(reg, 1).verdict == Verdict::holds_strict);
    CHECK(row(reg, 1).strict);

    const auto path = check_sombor_isi_bounds(path_graph(3));
    CHECK(row(path, 0).rhs == Approx(std::sqrt(2.0) * (6.0 - 8.0 / 3.0)).epsilon(1e-12));
    CHECK(row(path, 0).verdict == Verdict::holds_strict);
    CHECK(row(path, 1).lhs == Approx(10.0 / 3.0).epsilon(1e-12));

    const auto star = check_sombor_isi_bounds(star_graph(3));
    CHECK(row(star, 0).rhs == Approx(std::sqrt(2.0) * 7.5).epsilon(1e-12));
    CHECK(row(star, 0).lhs == Approx(3.0 * std::sqrt(10.0)).epsilon(1e-12));
    CHECK(row(star, 1).lhs == Approx(7.5).epsilon(1e-12));

    CHECK(row(check_sombor_isi_bounds(k3_p2()), 0).verdict == Verdict::tight);
    CHECK_FALSE(row(check_sombor_isi_bounds(star_graph(3)), 0).note.empty());
}

TEST_CASE("scalar power-mean comparisons over random samples") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> value(0.01, 20.0);
    const auto sample_pair = [&] {
        return std::pair<double, double>{value(rng), value(rng)};
    };
    for (int trial = 0; trial < 100000; ++trial) {
        const auto [x, y] = sample_pair();
        // a > 1
        double a = std::uniform_real_distribution<double>(1.0 + 1e-6, 6.0)(rng);
        double lhs = std::pow(x, a) + std::pow(y, a), mid = std::pow(x + y, a);
        REQUIRE(lhs < mid * (1 + 1e-12));
        REQUIRE(mid <= std::exp2(a - 1.0) * lhs * (1 + 1e-12));
        // 0 < a < 1
        a = std::uniform_real_distribution<double>(1e-6, 1.0 - 1e-6)(rng);
        lhs = std::pow(x, a) + std::pow(y, a);
        mid = std::pow(x + y, a);
        REQUIRE(std::exp2(a - 1.0) * lhs <= mid * (1 + 1e-12));
        REQUIRE(mid < lhs * (1 + 1e-12));
        // a < 0
        a = std::uniform_real_distribution<double>(-6.0, -1e-6)(rng);
        REQUIRE(std::pow(x + y, a) <=
                std::exp2(a - 1.0) * (std::pow(x, a) + std::pow(y, a)) * (1 + 1e-12));
    }
    // equality exactly at x = y for the non-strict comparisons
    for (double x : {0.25, 1.0, 5.0})
        for (double a : {-2.0, 0.5, 3.0}) {
            const double sum2 = std::exp2(a - 1.0) * 2.0 * std::pow(x, a);
            REQUIRE(std::fabs(std::pow(2.0 * x, a) - sum2) <= 1e-12 * std::fabs(sum2));
        }
}
