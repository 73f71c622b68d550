#pragma once

// Exhaustive isomorph-free catalogs of small graphs, used to feed theorem
// scans and property suites. The core toolkit deliberately does not ship
// this machinery; it stands in for an external generator (nauty's geng)
// where none is installed. Forms are validated against the published graph
// counts in the tests.

#include <cstdint>
#include <functional>
#include <vector>

#include "domcrit/graph.hpp"

namespace smallgen {

/// Upper-triangle bits of the canonically labeled copy, packed in column
/// order (the graph6 bit order). Supports n <= 11 (55 bits).
uint64_t canonical_form(const domcrit::Graph& g);

domcrit::Graph graph_of_form(uint64_t form, int n);
uint64_t form_of_graph(const domcrit::Graph& g);  // current labeling, no canonicalization

struct Catalog {
    // by_n[k] = canonical forms of all graphs on k vertices (k <= max_n)
    std::vector<std::vector<uint64_t>> by_n;

    size_t total() const;
};

/// All graphs on 1..max_n vertices up to isomorphism, by vertex-augmentation
/// with canonical-form deduplication. max_n <= 10.
Catalog generate_all(int max_n, int jobs = 1);

/// Published counts for cross-checking (A000088 / A001349).
extern const long long kAllGraphCounts[11];        // index n, n <= 10
extern const long long kConnectedGraphCounts[11];  // index n, n <= 10

}  // namespace smallgen
