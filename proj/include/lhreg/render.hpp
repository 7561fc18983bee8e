#ifndef LHREG_RENDER_HPP
#define LHREG_RENDER_HPP

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>

#include "lhreg/hypergraph.hpp"

namespace lhreg {

enum class RenderFormat { dot, tikz };

inline RenderFormat parse_render_format(std::string_view name) {
    if (name == "dot") return RenderFormat::dot;
    if (name == "tikz") return RenderFormat::tikz;
    throw std::invalid_argument("unsupported render format '" + std::string(name) + "' (expected dot or tikz)");
}

namespace detail {

inline std::string join_labels(const Edge& e, const Alphabet& alphabet) {
    std::string out;
    for (auto a : e.labels) {
        if (!out.empty()) out += ',';
        out += alphabet.name(a);
    }
    return out;
}

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

inline std::string tikz_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_') out += '\\';
        out += c;
    }
    return out;
}

inline std::string fixed3(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

inline std::string render_dot(const LabeledHypergraph& h) {
    const auto closed = closed_vertices(h);
    std::ostringstream out;
    out << "graph H {\n";
    out << "  node [shape=circle, fixedsize=true, width=0.3];\n";
    for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        out << "  v" << v + 1 << " [label=\"" << v + 1 << "\"";
        if (closed.test(v)) {
            VertexSet single;
            single.set(v);
            out << ", style=filled, fillcolor=black, fontcolor=white, xlabel="
                << dot_quote(join_labels(*h.find_edge(single), h.alphabet()));
        } else {
            out << ", style=solid";
        }
        out << "];\n";
    }
    std::size_t hub = 0;
    for (const auto& e : h.edges()) {
        if (e.size() == 2) {
            auto m = e.members.indices();
            out << "  v" << m[0] + 1 << " -- v" << m[1] + 1 << " [label=" << dot_quote(join_labels(e, h.alphabet()))
                << "];\n";
        } else if (e.size() >= 3) {
            ++hub;
            out << "  e" << hub << " [shape=point, width=0.08, xlabel=" << dot_quote(join_labels(e, h.alphabet()))
                << "];\n";
            e.members.for_each([&](std::size_t v) { out << "  e" << hub << " -- v" << v + 1 << " [style=dashed];\n"; });
        }
    }
    out << "}\n";
    return out.str();
}

inline std::string render_tikz(const LabeledHypergraph& h) {
    constexpr double kPi = 3.14159265358979323846;
    const auto n = h.vertex_count();
    const auto closed = closed_vertices(h);
    std::vector<std::pair<double, double>> pos(n);
    for (std::size_t v = 0; v < n; ++v) {
        double angle = kPi / 2 - 2 * kPi * static_cast<double>(v) / static_cast<double>(n == 0 ? 1 : n);
        pos[v] = n == 1 ? std::make_pair(0.0, 0.0) : std::make_pair(2 * std::cos(angle), 2 * std::sin(angle));
    }
    std::ostringstream out;
    out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n\\begin{tikzpicture}\n";
    for (std::size_t v = 0; v < n; ++v)
        out << "\\coordinate (v" << v + 1 << ") at (" << fixed3(pos[v].first) << "," << fixed3(pos[v].second) << ");\n";
    std::size_t hub = 0;
    for (const auto& e : h.edges()) {
        const auto label = tikz_escape(join_labels(e, h.alphabet()));
        if (e.size() == 2) {
            auto m = e.members.indices();
            out << "\\draw[line width=1pt] (v" << m[0] + 1 << ") -- (v" << m[1] + 1
                << ") node[midway, fill=white, inner sep=1pt] {$" << label << "$};\n";
        } else if (e.size() >= 3) {
            ++hub;
            double x = 0, y = 0;
            e.members.for_each([&](std::size_t v) {
                x += pos[v].first;
                y += pos[v].second;
            });
            x /= static_cast<double>(e.size());
            y /= static_cast<double>(e.size());
            out << "\\coordinate (e" << hub << ") at (" << fixed3(x) << "," << fixed3(y) << ");\n";
            e.members.for_each(
                [&](std::size_t v) { out << "\\draw[dashed] (e" << hub << ") -- (v" << v + 1 << ");\n"; });
            out << "\\fill (e" << hub << ") circle (0.04) node[below right] {$" << label << "$};\n";
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (closed.test(v)) {
            VertexSet single;
            single.set(v);
            out << "\\fill (v" << v + 1 << ") circle (0.1) node[above=2pt] {$"
                << tikz_escape(join_labels(*h.find_edge(single), h.alphabet())) << "$};\n";
        } else {
            out << "\\draw[fill=white] (v" << v + 1 << ") circle (0.1);\n";
        }
    }
    out << "\\end{tikzpicture}\n\\end{document}\n";
    return out.str();
}

}  // namespace detail

/// Closed vertices are filled, open ones hollow. Size-2 edges are lines
/// carrying their labels; larger edges get a hub node joined to members.
inline std::string render(const LabeledHypergraph& h, RenderFormat format) {
    switch (format) {
        case RenderFormat::dot:
            return detail::render_dot(h);
        case RenderFormat::tikz:
            return detail::render_tikz(h);
    }
    throw std::invalid_argument("unsupported render format");
}

}  // namespace lhreg

#endif  // LHREG_RENDER_HPP
