#pragma once

// Plain-text edge-list format.
//
//   # comment
//   n 7            optional; declares the vertex count (isolated vertices)
//   0 1            one edge per line
//   # label 0 u    optional label annotation, ignored by readers that skip comments
//
// The vertex count is max(declared, largest id + 1). Duplicate edges collapse.

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "fragpd/graph.hpp"

namespace fpd {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

inline std::string_view next_token(std::string_view& s) {
    s = trim(s);
    auto end = s.find_first_of(" \t");
    auto tok = s.substr(0, end);
    s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
    return tok;
}

inline bool parse_id(std::string_view tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
    constexpr std::uint64_t max_id = 1u << 30;
    GraphBuilder b;
    std::vector<std::pair<Vertex, std::string>> labels;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string_view rest = line.substr(1);
            if (detail::next_token(rest) == "label") {
                std::uint64_t id = 0;
                if (!detail::parse_id(detail::next_token(rest), id) || id >= max_id)
                    throw parse_error(line_no, "malformed label annotation");
                labels.emplace_back(static_cast<Vertex>(id), std::string(detail::trim(rest)));
            }
            continue;
        }
        std::string_view rest = line;
        auto first = detail::next_token(rest);
        if (first == "n") {
            std::uint64_t count = 0;
            if (!detail::parse_id(detail::next_token(rest), count) || !detail::trim(rest).empty() || count > max_id)
                throw parse_error(line_no, "malformed vertex-count header");
            b.ensure_order(count);
            continue;
        }
        std::uint64_t u = 0, v = 0;
        auto second = detail::next_token(rest);
        if (!detail::parse_id(first, u) || !detail::parse_id(second, v) || !detail::trim(rest).empty())
            throw parse_error(line_no, "expected \"u v\" with nonnegative integers");
        if (u >= max_id || v >= max_id) throw parse_error(line_no, "vertex id too large");
        if (u == v) throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
        b.ensure_order(std::max(u, v) + 1);
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    for (auto& [v, text] : labels) {
        b.ensure_order(std::size_t(v) + 1);
        b.set_label(v, std::move(text));
    }
    return b.build();
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

/// Canonical text: "n <order>", edges in lexicographic order, then label lines.
/// No trailing newline.
inline std::string serialize(const Graph& g) {
    std::string out = "n " + std::to_string(g.order());
    for (auto [u, v] : g.edges()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
    for (const auto& [v, l] : g.labels()) out += "\n# label " + std::to_string(v) + " " + l;
    return out;
}

}  // namespace fpd
