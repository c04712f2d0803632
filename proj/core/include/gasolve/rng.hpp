#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "gasolve/errors.hpp"

namespace gasolve {

/// Single source of all randomness consumed by a run.
///
/// Sources are single-owner: one source drives at most one run at a time, and
/// the engine requests draws in a fixed canonical order (see engine.hpp) so
/// that scripted sources line up draw-for-draw with recorded sequences.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform real in [0, 1).
    virtual double next_float01() = 0;

    /// Uniform integer in [lo, hi] inclusive. Throws InvalidRange if lo > hi.
    virtual int next_int_inclusive(int lo, int hi) = 0;
};

/// One recorded draw: either a float in [0,1) or an integer.
struct ScriptEntry {
    enum class Kind { Float, Int };

    Kind kind = Kind::Float;
    double float_value = 0.0;
    int int_value = 0;

    static ScriptEntry floating(double v) { return {Kind::Float, v, 0}; }
    static ScriptEntry integer(int v) { return {Kind::Int, 0.0, v}; }

    friend bool operator==(const ScriptEntry&, const ScriptEntry&) = default;
};

/// Replays a fixed sequence of draws, each consumed exactly once in order.
///
/// Requesting a draw of the wrong kind, a value outside the requested range,
/// or any draw past the end is an error; there is no silent wraparound.
class ScriptedSource final : public RandomSource {
public:
    /// Throws std::invalid_argument if any float entry lies outside [0,1).
    explicit ScriptedSource(std::vector<ScriptEntry> draws);

    double next_float01() override;
    int next_int_inclusive(int lo, int hi) override;

    std::size_t cursor() const noexcept { return cursor_; }
    std::size_t size() const noexcept { return draws_.size(); }
    std::size_t remaining() const noexcept { return draws_.size() - cursor_; }
    bool exhausted() const noexcept { return cursor_ == draws_.size(); }
    const std::vector<ScriptEntry>& draws() const noexcept { return draws_; }

private:
    std::vector<ScriptEntry> draws_;
    std::size_t cursor_ = 0;
};

/// Seeded pseudorandom source.
///
/// Uses std::mt19937_64, whose output sequence is fixed by the C++ standard,
/// with explicit value mappings (53-bit mantissa for floats, rejection
/// sampling for bounded ints), so equal seeds give bit-identical draw
/// sequences on every platform.
class SeededSource final : public RandomSource {
public:
    explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

    double next_float01() override;
    int next_int_inclusive(int lo, int hi) override;

private:
    std::mt19937_64 engine_;
};

/// Parses the line-oriented script format:
///   f <decimal in [0,1)>
///   i <integer>
/// '#' starts a comment; blank lines are skipped; any line ending is accepted.
/// Throws ParseError with the offending line number.
ScriptedSource parse_script(std::istream& in);

/// Reads and parses a script file. Throws Error if the file cannot be opened.
ScriptedSource load_script(const std::string& path);

/// Writes entries back out in canonical form (shortest round-trip decimals).
/// parse_script(serialize_script(d)) reproduces d exactly.
std::string serialize_script(const std::vector<ScriptEntry>& draws);

} // namespace gasolve
