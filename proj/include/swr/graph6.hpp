// graph6.hpp - graph6 codec, short form only (orders 0..62).
//
// Layout: one byte order+63, then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most significant bit
// first, each byte offset by 63, the last byte zero padded.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "swr/graph.hpp"

namespace swr {

class graph6_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw graph6_error("graph6: order " + std::to_string(n) + " exceeds " +
                           std::to_string(kGraph6MaxOrder));
    std::string out(1, static_cast<char>(n + 63));
    int value = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + 63));
                value = filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
    return out;
}

// Accepts an optional ">>graph6<<" header; surrounding whitespace must be
// stripped by the caller.
inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw graph6_error("graph6: empty input");
    for (char c : text) {
        auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126)
            throw graph6_error("graph6: byte " + std::to_string(b) + " outside [63,126]");
    }
    const auto first = static_cast<unsigned char>(text[0]);
    if (first == 126) throw graph6_error("graph6: orders above 62 are not supported");
    const std::size_t n = first - 63u;
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - 1 < bytes) throw graph6_error("graph6: truncated adjacency data");
    if (text.size() - 1 > bytes) throw graph6_error("graph6: trailing bytes after adjacency data");
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

}  // namespace swr
