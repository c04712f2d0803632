#include "gasolve/rng.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace gasolve {

namespace {

bool is_blank(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
    return s;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

} // namespace

ScriptedSource::ScriptedSource(std::vector<ScriptEntry> draws) : draws_(std::move(draws)) {
    for (const auto& e : draws_) {
        if (e.kind == ScriptEntry::Kind::Float && !(e.float_value >= 0.0 && e.float_value < 1.0)) {
            throw std::invalid_argument("script float entry " + format_double(e.float_value) +
                                        " outside [0,1)");
        }
    }
}

double ScriptedSource::next_float01() {
    if (cursor_ == draws_.size()) {
        throw ScriptExhausted("script exhausted");
    }
    const ScriptEntry& e = draws_[cursor_];
    if (e.kind != ScriptEntry::Kind::Float) {
        throw ScriptTypeMismatch("script type mismatch at entry " + std::to_string(cursor_ + 1) +
                                 ": int recorded, float requested");
    }
    ++cursor_;
    return e.float_value;
}

int ScriptedSource::next_int_inclusive(int lo, int hi) {
    if (lo > hi) {
        throw InvalidRange("invalid range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    }
    if (cursor_ == draws_.size()) {
        throw ScriptExhausted("script exhausted");
    }
    const ScriptEntry& e = draws_[cursor_];
    if (e.kind != ScriptEntry::Kind::Int) {
        throw ScriptTypeMismatch("script type mismatch at entry " + std::to_string(cursor_ + 1) +
                                 ": float recorded, int requested");
    }
    if (e.int_value < lo || e.int_value > hi) {
        throw ScriptOutOfRange("script entry " + std::to_string(cursor_ + 1) + " value " +
                               std::to_string(e.int_value) + " outside requested [" +
                               std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    ++cursor_;
    return e.int_value;
}

double SeededSource::next_float01() {
    // Top 53 bits scaled into [0,1); every result is exactly representable.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int SeededSource::next_int_inclusive(int lo, int hi) {
    if (lo > hi) {
        throw InvalidRange("invalid range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
    }
    const std::uint64_t span =
        static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - static_cast<std::int64_t>(lo) + 1);
    // Rejection sampling: retry draws falling in the final partial block.
    std::uint64_t x, r;
    do {
        x = engine_();
        r = x % span;
    } while (x - r > std::uint64_t(0) - span);
    return static_cast<int>(lo + static_cast<std::int64_t>(r));
}

ScriptedSource parse_script(std::istream& in) {
    std::vector<ScriptEntry> draws;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto pos = line.find('#'); pos != std::string_view::npos) {
            line = line.substr(0, pos);
        }
        line = trim(line);
        if (line.empty()) continue;

        auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw ParseError(line_no, "expected '<f|i> <value>'");
        }
        std::string_view kind = line.substr(0, sep);
        std::string_view value = trim(line.substr(sep + 1));
        if (value.empty() || value.find_first_of(" \t") != std::string_view::npos) {
            throw ParseError(line_no, "expected exactly one value after the draw kind");
        }

        if (kind == "f") {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw ParseError(line_no, "cannot parse float draw '" + std::string(value) + "'");
            }
            if (!(v >= 0.0 && v < 1.0)) {
                throw ParseError(line_no, "float draw " + std::string(value) + " outside [0,1)");
            }
            draws.push_back(ScriptEntry::floating(v));
        } else if (kind == "i") {
            int v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw ParseError(line_no, "cannot parse int draw '" + std::string(value) + "'");
            }
            draws.push_back(ScriptEntry::integer(v));
        } else {
            throw ParseError(line_no, "unknown draw kind '" + std::string(kind) + "' (expected 'f' or 'i')");
        }
    }
    return ScriptedSource(std::move(draws));
}

ScriptedSource load_script(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open script file: " + path);
    }
    return parse_script(in);
}

std::string serialize_script(const std::vector<ScriptEntry>& draws) {
    std::string out;
    for (const auto& e : draws) {
        if (e.kind == ScriptEntry::Kind::Float) {
            out += "f ";
            out += format_double(e.float_value);
        } else {
            out += "i ";
            out += std::to_string(e.int_value);
        }
        out += '\n';
    }
    return out;
}

} // namespace gasolve
