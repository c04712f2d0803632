#include "gasolve/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "gasolve/errors.hpp"

namespace gasolve {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kRealTolerance = 1e-12;

ojson population_to_json(const Population& pop) {
    ojson arr = ojson::array();
    for (const auto& member : pop.members) {
        arr.push_back(member.genes);
    }
    return arr;
}

Population population_from_json(const ojson& j) {
    std::vector<Chromosome> members;
    for (const auto& genes : j.get<std::vector<std::vector<int>>>()) {
        members.emplace_back(genes);
    }
    return Population(std::move(members));
}

ojson trace_to_json(const GenerationTrace& t) {
    ojson j;
    j["generation_index"] = t.generation_index;
    j["population_before"] = population_to_json(t.population_before);
    j["objective_values"] = t.objective_values;
    j["fitness_values"] = t.fitness_values;
    j["probabilities"] = t.probabilities;
    j["cumulative"] = t.cumulative;
    j["selection_draws"] = t.selection_draws;
    j["selected_indices"] = t.selected_indices;
    j["crossover_draws"] = t.crossover_draws;
    j["crossover_parents"] = t.crossover_parents;
    j["cut_points"] = t.cut_points;
    j["population_after_crossover"] = population_to_json(t.population_after_crossover);
    j["mutation_count"] = t.mutation_count;
    j["mutation_positions"] = t.mutation_positions;
    j["mutation_values"] = t.mutation_values;
    j["population_after_mutation"] = population_to_json(t.population_after_mutation);
    j["best_objective_so_far"] = t.best_objective_so_far;
    return j;
}

GenerationTrace trace_from_json(const ojson& j) {
    GenerationTrace t;
    t.generation_index = j.at("generation_index").get<int>();
    t.population_before = population_from_json(j.at("population_before"));
    t.objective_values = j.at("objective_values").get<std::vector<std::int64_t>>();
    t.fitness_values = j.at("fitness_values").get<std::vector<double>>();
    t.probabilities = j.at("probabilities").get<std::vector<double>>();
    t.cumulative = j.at("cumulative").get<std::vector<double>>();
    t.selection_draws = j.at("selection_draws").get<std::vector<double>>();
    t.selected_indices = j.at("selected_indices").get<std::vector<int>>();
    t.crossover_draws = j.at("crossover_draws").get<std::vector<double>>();
    t.crossover_parents = j.at("crossover_parents").get<std::vector<int>>();
    t.cut_points = j.at("cut_points").get<std::vector<int>>();
    t.population_after_crossover = population_from_json(j.at("population_after_crossover"));
    t.mutation_count = j.at("mutation_count").get<int>();
    t.mutation_positions = j.at("mutation_positions").get<std::vector<int>>();
    t.mutation_values = j.at("mutation_values").get<std::vector<int>>();
    t.population_after_mutation = population_from_json(j.at("population_after_mutation"));
    t.best_objective_so_far = j.at("best_objective_so_far").get<std::int64_t>();
    return t;
}

std::string format_real(double v) {
    return ojson(v).dump();
}

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct RecordComparer {
    const std::string where;

    template <typename T>
    std::optional<std::string> exact(const char* name, const std::vector<T>& expected,
                                     const std::vector<T>& actual) const {
        if (expected.size() != actual.size()) {
            return where + std::string(name) + " has " + std::to_string(actual.size()) +
                   " entries, expected " + std::to_string(expected.size());
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (expected[i] != actual[i]) {
                return where + std::string(name) + "[" + std::to_string(i + 1) + "] expected " +
                       std::to_string(expected[i]) + ", got " + std::to_string(actual[i]);
            }
        }
        return std::nullopt;
    }

    std::optional<std::string> close(const char* name, const std::vector<double>& expected,
                                     const std::vector<double>& actual) const {
        if (expected.size() != actual.size()) {
            return where + std::string(name) + " has " + std::to_string(actual.size()) +
                   " entries, expected " + std::to_string(expected.size());
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!(std::fabs(expected[i] - actual[i]) <= kRealTolerance)) {
                return where + std::string(name) + "[" + std::to_string(i + 1) + "] expected " +
                       format_real(expected[i]) + ", got " + format_real(actual[i]);
            }
        }
        return std::nullopt;
    }

    std::optional<std::string> genes(const char* name, const Population& expected,
                                     const Population& actual) const {
        if (expected.size() != actual.size()) {
            return where + std::string(name) + " has " + std::to_string(actual.size()) +
                   " chromosomes, expected " + std::to_string(expected.size());
        }
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (expected[i] != actual[i]) {
                return where + std::string(name) + "[" + std::to_string(i + 1) + "] expected " +
                       to_display_string(expected[i]) + ", got " + to_display_string(actual[i]);
            }
        }
        return std::nullopt;
    }
};

std::optional<std::string> compare_record(const GenerationTrace& e, const GenerationTrace& a) {
    const RecordComparer cmp{"generation " + std::to_string(e.generation_index) + ": "};
    if (e.generation_index != a.generation_index) {
        return cmp.where + "generation_index expected " + std::to_string(e.generation_index) +
               ", got " + std::to_string(a.generation_index);
    }
    if (auto d = cmp.genes("population_before", e.population_before, a.population_before)) return d;
    if (auto d = cmp.exact("objective_values", e.objective_values, a.objective_values)) return d;
    if (auto d = cmp.close("fitness_values", e.fitness_values, a.fitness_values)) return d;
    if (auto d = cmp.close("probabilities", e.probabilities, a.probabilities)) return d;
    if (auto d = cmp.close("cumulative", e.cumulative, a.cumulative)) return d;
    if (auto d = cmp.close("selection_draws", e.selection_draws, a.selection_draws)) return d;
    if (auto d = cmp.exact("selected_indices", e.selected_indices, a.selected_indices)) return d;
    if (auto d = cmp.close("crossover_draws", e.crossover_draws, a.crossover_draws)) return d;
    if (auto d = cmp.exact("crossover_parents", e.crossover_parents, a.crossover_parents)) return d;
    if (auto d = cmp.exact("cut_points", e.cut_points, a.cut_points)) return d;
    if (auto d = cmp.genes("population_after_crossover", e.population_after_crossover,
                           a.population_after_crossover)) {
        return d;
    }
    if (e.mutation_count != a.mutation_count) {
        return cmp.where + "mutation_count expected " + std::to_string(e.mutation_count) +
               ", got " + std::to_string(a.mutation_count);
    }
    if (auto d = cmp.exact("mutation_positions", e.mutation_positions, a.mutation_positions)) return d;
    if (auto d = cmp.exact("mutation_values", e.mutation_values, a.mutation_values)) return d;
    if (auto d = cmp.genes("population_after_mutation", e.population_after_mutation,
                           a.population_after_mutation)) {
        return d;
    }
    if (e.best_objective_so_far != a.best_objective_so_far) {
        return cmp.where + "best_objective_so_far expected " +
               std::to_string(e.best_objective_so_far) + ", got " +
               std::to_string(a.best_objective_so_far);
    }
    return std::nullopt;
}

} // namespace

std::string trace_to_json_line(const GenerationTrace& trace) {
    return trace_to_json(trace).dump();
}

void write_trace_jsonl(std::ostream& out, const GenerationTrace& trace) {
    out << trace_to_json_line(trace) << '\n';
}

void write_trace_jsonl(std::ostream& out, const std::vector<GenerationTrace>& traces) {
    for (const auto& t : traces) {
        write_trace_jsonl(out, t);
    }
}

std::vector<GenerationTrace> read_trace_jsonl(std::istream& in) {
    std::vector<GenerationTrace> traces;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            traces.push_back(trace_from_json(ojson::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return traces;
}

std::vector<GenerationTrace> load_trace_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open trace file: " + path);
    }
    return read_trace_jsonl(in);
}

std::optional<std::string> first_trace_mismatch(const std::vector<GenerationTrace>& expected,
                                                const std::vector<GenerationTrace>& actual) {
    const std::size_t common = std::min(expected.size(), actual.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (auto d = compare_record(expected[i], actual[i])) {
            return d;
        }
    }
    if (expected.size() != actual.size()) {
        return "expected " + std::to_string(expected.size()) + " generation records, got " +
               std::to_string(actual.size());
    }
    return std::nullopt;
}

std::string format_trace_human(const GenerationTrace& t) {
    std::string out = "generation " + std::to_string(t.generation_index) + "\n";
    out += "  #  before           cost  fitness   prob      cum       draw      pick\n";
    for (std::size_t i = 0; i < t.population_before.size(); ++i) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "  %-2zu %-15s %5lld  %s  %s  %s  %s  %4d\n", i + 1,
                      to_display_string(t.population_before[i]).c_str(),
                      static_cast<long long>(t.objective_values[i]),
                      fixed6(t.fitness_values[i]).c_str(), fixed6(t.probabilities[i]).c_str(),
                      fixed6(t.cumulative[i]).c_str(), fixed6(t.selection_draws[i]).c_str(),
                      t.selected_indices[i]);
        out += buf;
    }
    out += "  crossover draws:";
    for (double d : t.crossover_draws) out += " " + fixed6(d);
    out += "\n  parents:";
    for (int p : t.crossover_parents) out += " " + std::to_string(p);
    out += "  cuts:";
    for (int c : t.cut_points) out += " " + std::to_string(c);
    out += "\n  after crossover: ";
    for (std::size_t i = 0; i < t.population_after_crossover.size(); ++i) {
        if (i) out += " ";
        out += to_display_string(t.population_after_crossover[i]);
    }
    out += "\n  mutation count " + std::to_string(t.mutation_count) + ":";
    for (std::size_t i = 0; i < t.mutation_positions.size(); ++i) {
        if (i) out += ",";
        out += " position " + std::to_string(t.mutation_positions[i]) + " -> " +
               std::to_string(t.mutation_values[i]);
    }
    out += "\n  after mutation:  ";
    for (std::size_t i = 0; i < t.population_after_mutation.size(); ++i) {
        if (i) out += " ";
        out += to_display_string(t.population_after_mutation[i]);
    }
    out += "\n  best objective so far: " + std::to_string(t.best_objective_so_far) + "\n";
    return out;
}

} // namespace gasolve
