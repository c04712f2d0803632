#include "commands.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <variant>

#include <json.hpp>

#include "gasolve/engine.hpp"
#include "gasolve/errors.hpp"
#include "gasolve/objective.hpp"
#include "gasolve/oracle.hpp"
#include "gasolve/trace_io.hpp"

namespace gasolve::cli {

namespace {

std::string format_real(double v) {
    return nlohmann::ordered_json(v).dump();
}

std::ofstream open_for_writing(const std::string& path, const char* what) {
    std::ofstream out(path);
    if (!out) {
        throw Error(std::string("cannot open ") + what + " for writing: " + path);
    }
    return out;
}

void print_summary(std::ostream& out, const RunResult& result) {
    out << "best chromosome: " << to_display_string(result.best_chromosome) << "\n"
        << "best cost: " << result.best_cost << "\n"
        << "generation found: " << result.generation_found << "\n"
        << "generations run: " << result.generations_run << "\n";
}

} // namespace

int cmd_solve(const RunSpec& spec) {
    LinearEqualityObjective obj(spec.coefficients, spec.target);
    auto src = make_source(spec.config.rng_mode);

    std::ofstream trace_file;
    RunOptions options;
    if (!spec.trace_path.empty()) {
        trace_file = open_for_writing(spec.trace_path, "trace file");
        options.on_generation = [&](const GenerationTrace& t) { write_trace_jsonl(trace_file, t); };
    }

    RunResult result = run(spec.config, obj, *src, options);
    print_summary(std::cout, result);
    return 0;
}

int cmd_replay(const RunSpec& spec) {
    if (!std::holds_alternative<ScriptedMode>(spec.config.rng_mode)) {
        throw ConfigError("replay requires a draw script (--script PATH)");
    }
    LinearEqualityObjective obj(spec.coefficients, spec.target);
    auto src = make_source(spec.config.rng_mode);

    std::ofstream trace_file;
    std::ostream* jsonl_out = &std::cout;
    if (!spec.trace_path.empty()) {
        trace_file = open_for_writing(spec.trace_path, "trace file");
        jsonl_out = &trace_file;
    }

    RunOptions options;
    options.collect_traces = !spec.expect_path.empty();
    options.on_generation = [&](const GenerationTrace& t) {
        write_trace_jsonl(*jsonl_out, t);
        std::cerr << format_trace_human(t);
    };

    RunResult result = run(spec.config, obj, *src, options);
    print_summary(std::cerr, result);

    if (!spec.expect_path.empty()) {
        auto expected = load_trace_jsonl(spec.expect_path);
        if (auto mismatch = first_trace_mismatch(expected, result.traces)) {
            std::cerr << "trace mismatch: " << *mismatch << "\n";
            return 1;
        }
        std::cerr << "trace matches expected (" << expected.size() << " generation(s))\n";
    }
    return 0;
}

int cmd_verify(const RunSpec& spec) {
    if (spec.genes.size() != spec.coefficients.size()) {
        throw ConfigError("genes has " + std::to_string(spec.genes.size()) +
                          " entries but the objective has " +
                          std::to_string(spec.coefficients.size()) + " coefficients");
    }
    LinearEqualityObjective obj(spec.coefficients, spec.target);
    const std::int64_t cost = obj.evaluate(Chromosome{spec.genes});
    std::cout << "cost " << cost << ", " << (cost == 0 ? "satisfied" : "not satisfied") << "\n";
    return cost == 0 ? 0 : 1;
}

int cmd_enumerate(const RunSpec& spec) {
    LinearEqualityObjective obj(spec.coefficients, spec.target);
    SolutionSet set =
        enumerate_solutions(obj, spec.config.bounds, spec.coefficients.size(), spec.cap);
    if (spec.json_output) {
        nlohmann::ordered_json j;
        j["count"] = set.count;
        auto& solutions = j["solutions"] = nlohmann::ordered_json::array();
        for (const auto& chrom : set.solutions) {
            solutions.push_back(chrom.genes);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "count: " << set.count << "\n";
    }
    return 0;
}

namespace {

struct SweepTask {
    GaConfig config;
    double crossover_rate;
    double mutation_rate;
    std::uint64_t seed;
};

struct SweepResult {
    std::int64_t best_cost = 0;
    int generation_found = 0;
};

} // namespace

int cmd_sweep(const RunSpec& spec) {
    const std::vector<double> rcs =
        spec.crossover_rates.empty() ? std::vector<double>{spec.config.crossover_rate}
                                     : spec.crossover_rates;
    const std::vector<double> rms = spec.mutation_rates.empty()
                                        ? std::vector<double>{spec.config.mutation_rate}
                                        : spec.mutation_rates;
    std::vector<std::uint64_t> seeds = spec.seeds;
    if (seeds.empty()) {
        const auto* seeded = std::get_if<SeededMode>(&spec.config.rng_mode);
        if (!seeded) {
            throw ConfigError("sweep requires seeds (--seeds LIST or --seed N)");
        }
        seeds.push_back(seeded->seed);
    }

    LinearEqualityObjective obj(spec.coefficients, spec.target);

    // Grid order: crossover rate, then mutation rate, then seed. Configs are
    // validated up front so bad grid values fail before any run starts.
    std::vector<SweepTask> tasks;
    tasks.reserve(rcs.size() * rms.size() * seeds.size());
    for (double rc : rcs) {
        for (double rm : rms) {
            for (std::uint64_t seed : seeds) {
                SweepTask task{spec.config, rc, rm, seed};
                task.config.crossover_rate = rc;
                task.config.mutation_rate = rm;
                task.config.rng_mode = SeededMode{seed};
                task.config.validate();
                tasks.push_back(std::move(task));
            }
        }
    }

    std::vector<SweepResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            try {
                SeededSource src(tasks[i].seed);
                RunResult res = run(tasks[i].config, obj, src);
                results[i] = {res.best_cost, res.generation_found};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    std::ostream* report = &std::cerr;
    if (!spec.out_path.empty()) {
        csv_file = open_for_writing(spec.out_path, "sweep report");
        csv = &csv_file;
        report = &std::cout;
    }

    *csv << "crossover_rate,mutation_rate,seed,best_cost,generation_found,success\n";
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        *csv << format_real(tasks[i].crossover_rate) << ',' << format_real(tasks[i].mutation_rate)
             << ',' << tasks[i].seed << ',' << results[i].best_cost << ','
             << results[i].generation_found << ',' << (results[i].best_cost == 0 ? 1 : 0) << "\n";
    }

    // One aggregate line per (crossover, mutation) cell, in grid order.
    const std::size_t per_cell = seeds.size();
    for (std::size_t cell = 0; cell * per_cell < tasks.size(); ++cell) {
        std::size_t successes = 0;
        for (std::size_t k = 0; k < per_cell; ++k) {
            if (results[cell * per_cell + k].best_cost == 0) ++successes;
        }
        const auto& head = tasks[cell * per_cell];
        *report << "cell crossover_rate=" << format_real(head.crossover_rate)
                << " mutation_rate=" << format_real(head.mutation_rate) << ": " << successes << "/"
                << per_cell << " runs reached cost 0 (rate "
                << format_real(static_cast<double>(successes) / static_cast<double>(per_cell))
                << ")\n";
    }
    return 0;
}

} // namespace gasolve::cli
