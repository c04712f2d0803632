#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gasolve/errors.hpp"
#include "gasolve/selection.hpp"
#include "support/recording_source.hpp"
#include "support/reference_values.hpp"

using namespace gasolve;

TEST_SUITE("selection") {

TEST_CASE("selection table matches the reference worked values") {
    SelectionTable table = build_selection_table(refvals::initial_costs());

    // full precision against the closed form
    const double expected_total =
        1.0 / 94 + 1.0 / 81 + 1.0 / 84 + 1.0 / 47 + 1.0 / 95 + 1.0 / 56;
    CHECK(table.total == doctest::Approx(expected_total).epsilon(1e-15));

    // the reference table's 4-decimal roundings, absolute tolerance 5e-3
    CHECK(std::fabs(table.total - 0.0845) < 5e-3);
    const std::vector<double> rounded_probs{0.1254, 0.1456, 0.1408, 0.2521, 0.1243, 0.2118};
    const std::vector<double> rounded_cumulative{0.1254, 0.2710, 0.4118, 0.6639, 0.7882, 1.0};
    REQUIRE(table.probabilities.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(std::fabs(table.probabilities[i] - rounded_probs[i]) < 5e-3);
        CHECK(std::fabs(table.cumulative[i] - rounded_cumulative[i]) < 5e-3);
    }
}

TEST_CASE("table invariants: probabilities sum to 1 and cumulative is tight") {
    SelectionTable table = build_selection_table(refvals::initial_costs());
    double sum = 0.0;
    for (double p : table.probabilities) sum += p;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::is_sorted(table.cumulative.begin(), table.cumulative.end()));
    CHECK(table.cumulative.back() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate tables") {
    SelectionTable single = build_selection_table(std::vector<std::int64_t>{0});
    CHECK(single.probabilities == std::vector<double>{1.0});
    CHECK(single.cumulative == std::vector<double>{1.0});

    SelectionTable pair = build_selection_table(std::vector<std::int64_t>{5, 5});
    CHECK(pair.probabilities[0] == 0.5);
    CHECK(pair.probabilities[1] == 0.5);
}

TEST_CASE("roulette_pick reproduces the reference selections") {
    SelectionTable table = build_selection_table(refvals::initial_costs());
    // 1-based picks per the reference table: 0.201 -> 2, 0.099 -> 1, 0.822 -> 6
    CHECK(roulette_pick(table, 0.201) + 1 == 2);
    CHECK(roulette_pick(table, 0.099) + 1 == 1);
    CHECK(roulette_pick(table, 0.822) + 1 == 6);
    CHECK(roulette_pick(table, 0.0) + 1 == 1);
}

TEST_CASE("a draw equal to a cumulative boundary selects the next slot") {
    SelectionTable table = build_selection_table(std::vector<std::int64_t>{0, 0});
    CHECK(table.cumulative[0] == 0.5);
    CHECK(roulette_pick(table, 0.4999999) == 0);
    CHECK(roulette_pick(table, 0.5) == 1);
}

TEST_CASE("floating-point drift past the last cumulative value returns the last slot") {
    SelectionTable table = build_selection_table(refvals::initial_costs());
    CHECK(roulette_pick(table, std::nextafter(1.0, 0.0)) == 5);
}

TEST_CASE("the cheapest cost always has the highest probability") {
    SelectionTable table = build_selection_table(refvals::initial_costs());
    auto max_p = std::max_element(table.probabilities.begin(), table.probabilities.end());
    CHECK(max_p - table.probabilities.begin() == 3); // reference slot 4
}

TEST_CASE("select_population replays the reference draws onto slot order") {
    std::vector<ScriptEntry> entries;
    for (double r : refvals::selection_draws()) entries.push_back(ScriptEntry::floating(r));
    ScriptedSource src(entries);

    SelectionOutcome out =
        select_population(refvals::initial_population(), refvals::initial_costs(), src);

    CHECK(out.draws == refvals::selection_draws());
    std::vector<int> selected_one_based;
    for (std::size_t s : out.selected) selected_one_based.push_back(static_cast<int>(s) + 1);
    CHECK(selected_one_based == refvals::selected_indices());
    CHECK(out.population == refvals::selected_population());
    CHECK(src.exhausted());
}

TEST_CASE("a single-member population always reselects itself") {
    Population pop({{4, 4}});
    ScriptedSource src({ScriptEntry::floating(0.99)});
    SelectionOutcome out = select_population(pop, std::vector<std::int64_t>{17}, src);
    CHECK(out.population == pop);
    CHECK(out.selected == std::vector<std::size_t>{0});
}

TEST_CASE("equal costs split the wheel into equal-width bins") {
    Population pop({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const std::vector<std::int64_t> costs{9, 9, 9, 9};
    ScriptedSource src({ScriptEntry::floating(0.0), ScriptEntry::floating(0.25),
                        ScriptEntry::floating(0.5), ScriptEntry::floating(0.76)});
    SelectionOutcome out = select_population(pop, costs, src);
    CHECK(out.selected == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("cost and population sizes must agree") {
    CHECK_THROWS_AS(
        [] {
            Population pop({{1, 2}, {3, 4}});
            SeededSource src(1);
            select_population(pop, std::vector<std::int64_t>{5}, src);
        }(),
        LengthMismatch);
}

TEST_CASE("selection consumes exactly N floats and no ints") {
    SeededSource inner(11);
    testsupport::RecordingSource src(inner);
    select_population(refvals::initial_population(), refvals::initial_costs(), src);
    CHECK(src.float_count() == 6);
    CHECK(src.int_count() == 0);
}

} // TEST_SUITE
