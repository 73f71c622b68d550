#include "domcrit/graph6.hpp"

namespace domcrit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

struct BitReader {
    std::string_view data;
    size_t pos = 0;   // next character
    int bit = 0;      // next bit within current character, 0 = MSB of the 6

    int value_at(size_t i) const {
        unsigned char c = static_cast<unsigned char>(data[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: character value outside 63..126", i);
        return c - 63;
    }

    bool next_bit() {
        if (pos >= data.size()) throw Graph6Error("graph6: truncated bit stream", pos);
        int v = value_at(pos);
        bool b = (v >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return b;
    }

    void finish() {
        if (bit != 0) {
            // remaining bits of the current character must be zero padding
            int v = value_at(pos);
            if (v & ((1 << (6 - bit)) - 1))
                throw Graph6Error("graph6: nonzero padding bits", pos);
            ++pos;
        }
        if (pos != data.size()) throw Graph6Error("graph6: trailing data after bit stream", pos);
    }
};

long long read_n(std::string_view s, size_t& pos) {
    auto val = [&](size_t i) -> int {
        if (i >= s.size()) throw Graph6Error("graph6: truncated vertex count", i);
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw Graph6Error("graph6: character value outside 63..126", i);
        return c - 63;
    };
    int v0 = val(pos);
    if (v0 < 63) {
        ++pos;
        return v0;
    }
    // v0 == 63 ('~'): 4-byte escape, or 8-byte when followed by another '~'
    if (val(pos + 1) == 63) {
        long long n = 0;
        for (size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | val(i);
        pos += 8;
        return n;
    }
    long long n = 0;
    for (size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | val(i);
    pos += 4;
    return n;
}

}  // namespace

Graph graph6_decode(std::string_view line) {
    std::string_view s = line;
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw Graph6Error("graph6: empty line", 0);

    size_t pos = 0;
    long long n = read_n(s, pos);
    if (n > kMaxVertices)
        throw Graph6Error("graph6: vertex count exceeds supported maximum", 0);

    Graph g(static_cast<int>(n));
    BitReader reader{s.substr(pos)};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (reader.next_bit()) g.set_edge(i, j);
    reader.finish();
    return g;
}

std::string graph6_encode(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // n <= 512 always fits the 4-byte escape
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace domcrit
