#include "cli_support.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "gasolve/errors.hpp"

namespace gasolve::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        auto comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <typename T>
T parse_number(std::string_view token, const std::string& what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ConfigError("cannot parse " + what + " '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const auto& token : split_commas(text)) {
        values.push_back(parse_number<int>(token, "integer"));
    }
    return values;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& token : split_commas(text)) {
        values.push_back(parse_number<double>(token, "number"));
    }
    return values;
}

GeneBounds parse_bounds(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ConfigError("cannot parse bounds '" + text + "': expected LO:HI like 0:30");
    }
    GeneBounds b;
    b.lo = parse_number<int>(std::string_view(text).substr(0, colon), "bounds low end");
    b.hi = parse_number<int>(std::string_view(text).substr(colon + 1), "bounds high end");
    if (b.lo > b.hi) {
        throw ConfigError("bounds low end " + std::to_string(b.lo) + " exceeds high end " +
                          std::to_string(b.hi));
    }
    return b;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    for (const auto& token : split_commas(text)) {
        auto dots = token.find("..");
        if (dots == std::string::npos) {
            seeds.push_back(parse_number<std::uint64_t>(token, "seed"));
            continue;
        }
        auto lo = parse_number<std::uint64_t>(std::string_view(token).substr(0, dots), "seed range start");
        auto hi = parse_number<std::uint64_t>(std::string_view(token).substr(dots + 2), "seed range end");
        if (lo > hi) {
            throw ConfigError("seed range " + token + " runs backwards");
        }
        for (std::uint64_t s = lo; s <= hi; ++s) {
            seeds.push_back(s);
            if (s == hi) break; // guard wrap at UINT64_MAX
        }
    }
    return seeds;
}

RawArgs load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file: " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("config file: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config file must be a flat JSON object");
    }

    RawArgs args;
    for (const auto& [key, value] : doc.items()) {
        try {
            if (key == "coeffs") {
                args.coeffs = value.get<std::string>();
            } else if (key == "target") {
                args.target = value.get<std::int64_t>();
            } else if (key == "bounds") {
                args.bounds = value.get<std::string>();
            } else if (key == "pop") {
                args.pop = value.get<int>();
            } else if (key == "gens") {
                args.gens = value.get<int>();
            } else if (key == "crossover_rate") {
                args.crossover_rate = value.get<double>();
            } else if (key == "mutation_rate") {
                args.mutation_rate = value.get<double>();
            } else if (key == "seed") {
                args.seed = value.get<std::uint64_t>();
            } else if (key == "script") {
                args.script = value.get<std::string>();
            } else if (key == "stop_on_zero") {
                args.stop_on_zero = value.get<bool>();
            } else if (key == "elitism") {
                args.elitism = value.get<bool>();
            } else {
                throw ConfigError("config file: unknown key '" + key + "'");
            }
        } catch (const nlohmann::json::exception&) {
            throw ConfigError("config file: key '" + key + "' has the wrong type");
        }
    }
    return args;
}

RawArgs merge_args(const RawArgs& flags, const RawArgs& config) {
    RawArgs merged = config;
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(merged.coeffs, flags.coeffs);
    take(merged.target, flags.target);
    take(merged.bounds, flags.bounds);
    take(merged.pop, flags.pop);
    take(merged.gens, flags.gens);
    take(merged.crossover_rate, flags.crossover_rate);
    take(merged.mutation_rate, flags.mutation_rate);
    take(merged.seed, flags.seed);
    take(merged.script, flags.script);
    take(merged.stop_on_zero, flags.stop_on_zero);
    take(merged.elitism, flags.elitism);
    return merged;
}

RunSpec build_spec(const RawArgs& args) {
    RunSpec spec;
    if (args.coeffs) spec.coefficients = parse_int_list(*args.coeffs);
    if (args.target) spec.target = *args.target;
    if (args.bounds) spec.config.bounds = parse_bounds(*args.bounds);
    if (args.pop) spec.config.population_size = *args.pop;
    if (args.gens) spec.config.generations = *args.gens;
    if (args.crossover_rate) spec.config.crossover_rate = *args.crossover_rate;
    if (args.mutation_rate) spec.config.mutation_rate = *args.mutation_rate;
    if (args.stop_on_zero) spec.config.stop_on_zero = *args.stop_on_zero;
    if (args.elitism) spec.config.elitism = *args.elitism;

    if (spec.coefficients.empty()) {
        throw ConfigError("coeffs must name at least one coefficient");
    }
    spec.config.chromosome_length = static_cast<int>(spec.coefficients.size());

    if (args.seed && args.script) {
        throw ConfigError("seed and script are mutually exclusive");
    }
    if (args.script) {
        spec.config.rng_mode = ScriptedMode{*args.script};
    } else {
        spec.config.rng_mode = SeededMode{args.seed.value_or(0)};
    }

    spec.config.validate();
    return spec;
}

std::unique_ptr<RandomSource> make_source(const RngMode& mode) {
    if (const auto* seeded = std::get_if<SeededMode>(&mode)) {
        return std::make_unique<SeededSource>(seeded->seed);
    }
    return std::make_unique<ScriptedSource>(load_script(std::get<ScriptedMode>(mode).script_path));
}

} // namespace gasolve::cli
