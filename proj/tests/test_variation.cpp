#include <doctest.h>

#include <algorithm>

#include "gasolve/errors.hpp"
#include "gasolve/variation.hpp"
#include "support/recording_source.hpp"
#include "support/reference_values.hpp"

using namespace gasolve;

namespace {

ScriptedSource floats_source(const std::vector<double>& values) {
    std::vector<ScriptEntry> entries;
    for (double v : values) entries.push_back(ScriptEntry::floating(v));
    return ScriptedSource(entries);
}

ScriptedSource ints_source(const std::vector<int>& values) {
    std::vector<ScriptEntry> entries;
    for (int v : values) entries.push_back(ScriptEntry::integer(v));
    return ScriptedSource(entries);
}

} // namespace

TEST_SUITE("variation") {

TEST_CASE("gate draws below the rate select parents in scan order") {
    ScriptedSource src = floats_source(refvals::crossover_draws());
    ParentGating gating = choose_parents(6, 0.25, src);
    CHECK(gating.draws == refvals::crossover_draws());
    CHECK(gating.parents == std::vector<std::size_t>{0, 3, 4}); // slots 1, 4, 5
}

TEST_CASE("rate 0 selects nobody, rate 1 selects everybody") {
    SeededSource none(5);
    CHECK(choose_parents(6, 0.0, none).parents.empty());
    SeededSource all(5);
    CHECK(choose_parents(6, 1.0, all).parents.size() == 6);
}

TEST_CASE("the gate comparison is strictly less") {
    ScriptedSource src = floats_source({0.25, 0.2499999});
    ParentGating gating = choose_parents(2, 0.25, src);
    CHECK(gating.parents == std::vector<std::size_t>{1});
}

TEST_CASE("cut points are drawn per mating within [1, L-1]") {
    ScriptedSource src = ints_source({1, 1, 2});
    CHECK(draw_cut_points(3, 4, src) == std::vector<int>{1, 1, 2});

    ScriptedSource out_of_range = ints_source({4});
    CHECK_THROWS_AS(draw_cut_points(1, 4, out_of_range), ScriptOutOfRange);
}

TEST_CASE("plan_crossover combines gating and cut draws") {
    std::vector<ScriptEntry> entries;
    for (double r : refvals::crossover_draws()) entries.push_back(ScriptEntry::floating(r));
    for (int c : refvals::cut_points()) entries.push_back(ScriptEntry::integer(c));
    ScriptedSource src(entries);

    CrossoverPlan plan = plan_crossover(refvals::selected_population(), 0.25, src);
    CHECK(plan.parents == std::vector<std::size_t>{0, 3, 4});
    CHECK(plan.cut_points == refvals::cut_points());
    CHECK(src.exhausted());
}

TEST_CASE("a lone parent draws no cut points") {
    // only slot 2's gate falls under the rate; the script holds no ints, so
    // any cut-point request would throw
    ScriptedSource src = floats_source({0.9, 0.1, 0.9, 0.9});
    CrossoverPlan plan = plan_crossover(Population({{1, 2}, {3, 4}, {5, 6}, {7, 8}}), 0.25, src);
    CHECK(plan.parents == std::vector<std::size_t>{1});
    CHECK(plan.cut_points.empty());
    CHECK(src.exhausted());
}

TEST_CASE("apply_crossover reproduces the reference matings") {
    CrossoverPlan plan{{0, 3, 4}, refvals::cut_points()};
    Population after = apply_crossover(refvals::selected_population(), plan);
    CHECK(after == refvals::post_crossover_population());
}

TEST_CASE("offspring are computed from the pre-crossover snapshot") {
    // the last mating reads slot 1 as its second parent even though slot 1's
    // own offspring was produced first
    CrossoverPlan plan{{0, 3, 4}, refvals::cut_points()};
    Population after = apply_crossover(refvals::selected_population(), plan);
    CHECK(after[4] == Chromosome{10, 4, 18, 3});
}

TEST_CASE("fewer than two parents leaves the population untouched") {
    Population pop = refvals::selected_population();
    CHECK(apply_crossover(pop, CrossoverPlan{{}, {}}) == pop);
    CHECK(apply_crossover(pop, CrossoverPlan{{2}, {}}) == pop);
}

TEST_CASE("cut at L-1 between identical parents is a no-op") {
    Population pop({{4, 5, 6, 7}, {4, 5, 6, 7}});
    CrossoverPlan plan{{0, 1}, {3, 3}};
    CHECK(apply_crossover(pop, plan) == pop);
}

TEST_CASE("two parents with cuts [1,1] swap everything after gene 1") {
    Population pop({{1, 2, 3, 4}, {5, 6, 7, 8}});
    CrossoverPlan plan{{0, 1}, {1, 1}};
    Population after = apply_crossover(pop, plan);
    CHECK(after[0] == Chromosome{1, 6, 7, 8});
    CHECK(after[1] == Chromosome{5, 2, 3, 4});
}

TEST_CASE("offspring genes come position-wise from the two parents") {
    Population pop({{1, 2, 3, 4, 5}, {9, 8, 7, 6, 5}, {4, 4, 4, 4, 4}});
    CrossoverPlan plan{{0, 1, 2}, {2, 4, 1}};
    Population after = apply_crossover(pop, plan);
    for (std::size_t j = 0; j < 3; ++j) {
        const Chromosome& first = pop[j];
        const Chromosome& second = pop[(j + 1) % 3];
        const int cut = plan.cut_points[j];
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(after[j].genes[i] == (i < static_cast<std::size_t>(cut) ? first[i] : second[i]));
        }
    }
}

TEST_CASE("invalid cut points are rejected") {
    Population pop({{1, 2, 3, 4}, {5, 6, 7, 8}});
    CHECK_THROWS_AS(apply_crossover(pop, CrossoverPlan{{0, 1}, {0, 1}}), InvalidCutPoint);
    CHECK_THROWS_AS(apply_crossover(pop, CrossoverPlan{{0, 1}, {1, 4}}), InvalidCutPoint);
    CHECK_THROWS_AS(apply_crossover(pop, CrossoverPlan{{0, 1}, {1}}), Error);
}

TEST_CASE("mutation count rounds half up") {
    CHECK(mutation_count(0.1, 24) == 2);  // 2.4 -> 2
    CHECK(mutation_count(0.25, 10) == 3); // 2.5 -> 3
    CHECK(mutation_count(0.35, 10) == 4); // 3.5 -> 4
    CHECK(mutation_count(0.0, 24) == 0);
    CHECK(mutation_count(1.0, 24) == 24);
}

TEST_CASE("mutation positions replay directly when distinct") {
    ScriptedSource src = ints_source({12, 18});
    CHECK(draw_mutation_positions(2, 24, src) == std::vector<int>{12, 18});
}

TEST_CASE("a repeated position is redrawn and still consumes its draw") {
    ScriptedSource src = ints_source({12, 12, 12, 18});
    CHECK(draw_mutation_positions(2, 24, src) == std::vector<int>{12, 18});
    CHECK(src.exhausted()); // all four entries consumed
}

TEST_CASE("asking for more distinct positions than cells is impossible") {
    SeededSource src(2);
    CHECK_THROWS_AS(draw_mutation_positions(25, 24, src), Error);
}

TEST_CASE("drawing every cell yields a permutation") {
    SeededSource src(3);
    std::vector<int> positions = draw_mutation_positions(24, 24, src);
    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    for (int p = 1; p <= 24; ++p) CHECK(sorted[static_cast<std::size_t>(p) - 1] == p);
}

TEST_CASE("replacement values replay and respect bounds") {
    ScriptedSource src = ints_source({2, 5});
    CHECK(draw_replacement_values(2, {0, 30}, src) == std::vector<int>{2, 5});

    ScriptedSource outside = ints_source({31});
    CHECK_THROWS_AS(draw_replacement_values(1, {0, 30}, outside), ScriptOutOfRange);
}

TEST_CASE("plan_mutation replays the reference plan") {
    ScriptedSource src = ints_source({12, 18, 2, 5});
    MutationPlan plan = plan_mutation(refvals::reference_config(), src);
    CHECK(plan.count == 2);
    CHECK(plan.positions == refvals::mutation_positions());
    CHECK(plan.replacements == refvals::mutation_values());
    CHECK(src.exhausted());
}

TEST_CASE("mutation rate 0 draws nothing") {
    GaConfig config = refvals::reference_config();
    config.mutation_rate = 0.0;
    ScriptedSource src({}); // any draw would throw ScriptExhausted
    MutationPlan plan = plan_mutation(config, src);
    CHECK(plan.count == 0);
    CHECK(plan.positions.empty());
    CHECK(plan.replacements.empty());
}

TEST_CASE("positions map to chromosome and gene the reference way") {
    // position 12 -> chromosome 3 gene 4; position 18 -> chromosome 5 gene 2;
    // position 1 -> chromosome 1 gene 1 (all 1-based)
    Population pop = refvals::post_crossover_population();
    MutationPlan plan{2, {12, 18}, {2, 5}};
    Population after = apply_mutation(pop, plan);
    CHECK(after == refvals::post_mutation_population());
    CHECK(after[2].genes[3] == 2);
    CHECK(after[4].genes[1] == 5);

    MutationPlan first_cell{1, {1}, {9}};
    Population after_first = apply_mutation(pop, first_cell);
    CHECK(after_first[0].genes[0] == 9);
}

TEST_CASE("apply_mutation changes exactly count cells") {
    Population pop = refvals::post_crossover_population();
    MutationPlan plan{2, {12, 18}, {2, 5}};
    Population after = apply_mutation(pop, plan);
    int changed = 0;
    for (std::size_t c = 0; c < pop.size(); ++c) {
        for (std::size_t g = 0; g < 4; ++g) {
            if (pop[c].genes[g] != after[c].genes[g]) ++changed;
        }
    }
    CHECK(changed == 2);
}

TEST_CASE("apply_mutation validates positions and plan shape") {
    Population pop({{1, 2}, {3, 4}});
    CHECK_THROWS_AS(apply_mutation(pop, MutationPlan{1, {5}, {0}}), Error);
    CHECK_THROWS_AS(apply_mutation(pop, MutationPlan{1, {0}, {0}}), Error);
    CHECK_THROWS_AS(apply_mutation(pop, MutationPlan{2, {1}, {0}}), Error);
}

TEST_CASE("variation preserves population shape and bounds") {
    GeneBounds bounds{0, 30};
    Population pop = refvals::selected_population();
    Population crossed =
        apply_crossover(pop, CrossoverPlan{{0, 3, 4}, refvals::cut_points()});
    REQUIRE(crossed.size() == pop.size());
    for (const auto& chrom : crossed.members) {
        CHECK(chrom.size() == 4);
        CHECK(chrom.within(bounds));
    }
    Population mutated = apply_mutation(crossed, MutationPlan{2, {12, 18}, {2, 5}});
    REQUIRE(mutated.size() == pop.size());
    for (const auto& chrom : mutated.members) {
        CHECK(chrom.size() == 4);
        CHECK(chrom.within(bounds));
    }
}

TEST_CASE("draw accounting: gates, cuts, positions and replacements") {
    SeededSource inner(17);
    testsupport::RecordingSource src(inner);
    ParentGating gating = choose_parents(6, 0.5, src);
    CHECK(src.float_count() == 6);
    CHECK(src.int_count() == 0);

    const std::size_t m = gating.parents.size();
    if (m >= 2) {
        draw_cut_points(m, 4, src);
        CHECK(src.int_count() == m);
    }

    src.reset();
    std::vector<int> positions = draw_mutation_positions(3, 8, src);
    const std::size_t position_draws = src.int_count();
    CHECK(position_draws >= 3); // redraws only ever add draws
    draw_replacement_values(3, {0, 30}, src);
    CHECK(src.int_count() == position_draws + 3);
    CHECK(src.float_count() == 0);
}

} // TEST_SUITE
