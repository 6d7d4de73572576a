// Copyright 2026 The bethe6v Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace bethe::cli {

/**
 * Minimal emitter for the run report: an indented "key: value" document that
 * parses as YAML. Reals are written in scientific notation with 17
 * significant digits.
 */
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out) : out_(out) {}

    void begin(std::string_view name) {
        line(fmt::format("{}:", name));
        ++depth_;
    }
    void end() { --depth_; }

    void field(std::string_view key, double value) { line(fmt::format("{}: {}", key, real(value))); }
    void field(std::string_view key, int value) { line(fmt::format("{}: {}", key, value)); }
    void field(std::string_view key, std::size_t value) { line(fmt::format("{}: {}", key, value)); }
    void field(std::string_view key, bool value) { line(fmt::format("{}: {}", key, value ? "true" : "false")); }
    void field(std::string_view key, std::string_view value) { line(fmt::format("{}: {}", key, quoted(value))); }
    void field(std::string_view key, const char* value) { field(key, std::string_view(value)); }

    void field(std::string_view key, std::span<const double> values) {
        std::string body;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0) body += ", ";
            body += real(values[i]);
        }
        line(fmt::format("{}: [{}]", key, body));
    }

    static std::string real(double value) {
        if (std::isnan(value)) return ".nan";
        if (std::isinf(value)) return value > 0 ? ".inf" : "-.inf";
        return fmt::format("{:.16e}", value);
    }

private:
    static std::string quoted(std::string_view s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') out += '\\';
            out += ch;
        }
        return out + "\"";
    }

    void line(std::string_view text) { out_ << std::string(static_cast<std::size_t>(2 * depth_), ' ') << text << '\n'; }

    std::ostream& out_;
    int depth_ = 0;
};

}  // namespace bethe::cli
