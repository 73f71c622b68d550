#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domcrit/graph.hpp"

namespace domcrit {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// Decodes one graph6 line (optional ">>graph6<<" header tolerated).
/// Errors: character outside 63..126, truncated stream, trailing data,
/// nonzero padding, n > 512.
Graph graph6_decode(std::string_view line);

/// Encodes bit-exact graph6: N(n) then the upper triangle column by column,
/// packed big-endian into 6-bit groups, each +63, zero padding.
std::string graph6_encode(const Graph& g);

}  // namespace domcrit
