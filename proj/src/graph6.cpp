#include "cwtk/graph6.hpp"

#include "cwtk/errors.hpp"

#include <cstdint>
#include <string_view>

namespace cwtk {

namespace {

constexpr char kBias = 63; // printable range is 63..126

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("truncated graph6 stream", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte out of range 63..126", pos);
    return c - kBias;
}

} // namespace

Graph parse_graph6(const std::string& text) {
    std::string_view s(text);
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (s.substr(0, header.size()) == header) {
        s.remove_prefix(header.size());
        base = header.size();
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty graph6 input", base);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (sextet(s, pos) < 63) {
        n = sextet(s, pos);
        pos = 1;
    } else if (s.size() >= 2 && sextet(s, 1) < 63) {
        // '~' + 3 sextets: 63 <= n <= 258047
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | sextet(s, pos);
    } else {
        // '~~' + 6 sextets
        if (s.size() < 2 || s[1] != '~')
            throw ParseError("malformed graph6 size header", base + 1);
        for (pos = 2; pos < 8; ++pos) n = (n << 6) | sextet(s, pos);
    }
    if (n > 100000000) throw ParseError("graph6 vertex count implausibly large", base);

    std::vector<Edge> edges;
    int bits = 0, acc = 0;
    for (std::uint64_t col = 1; col < n; ++col) {
        for (std::uint64_t row = 0; row < col; ++row) {
            if (bits == 0) {
                acc = sextet(s, pos);
                ++pos;
                bits = 6;
            }
            --bits;
            if (acc >> bits & 1)
                edges.emplace_back(static_cast<int>(row), static_cast<int>(col));
        }
    }
    if (pos != s.size()) throw ParseError("trailing bytes after graph6 data", base + pos);
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    std::string out;
    std::uint64_t n = static_cast<std::uint64_t>(g.num_vertices());
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
    int bits = 0, acc = 0;
    for (std::uint64_t col = 1; col < n; ++col) {
        for (std::uint64_t row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(static_cast<int>(row), static_cast<int>(col)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                bits = 0;
                acc = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

} // namespace cwtk
