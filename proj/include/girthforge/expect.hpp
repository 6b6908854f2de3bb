#ifndef GIRTHFORGE_EXPECT_HPP
#define GIRTHFORGE_EXPECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

// Designation of the clique subset: an explicit id range, construction parts
// (resolved through tuples_per_part metadata), or the whole vertex set.
struct CliqueExpect {
    enum class Kind { All, Parts, Range } kind = Kind::All;
    std::vector<int> parts;
    int64_t lo = 0, hi = 0;
    int t = 1;
    long long size = -1;  // expected subset size (-1 = unchecked)
};

struct SampledPairsExpect {
    int count = 10000;
    int t = 1;
    uint64_t seed = 20240915ULL;
};

// Expectations travel in the JSON sidecar so verification is self-contained.
struct Expectations {
    std::optional<long long> vertices;
    std::optional<int> max_degree;
    std::optional<int> regular_degree;
    std::optional<int> girth_min;
    std::optional<int> girth_exact;
    std::optional<bool> bipartite;
    std::optional<CliqueExpect> clique;
    std::optional<SampledPairsExpect> sampled_pairs;

    std::string to_json() const;
    static Expectations from_json(const std::string& text);
};

struct CheckLine {
    std::string name;
    std::string expected;
    std::string measured;
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass = true;

    void add(const std::string& name, const std::string& expected, const std::string& measured,
             bool pass);
    std::string to_json() const;
};

std::vector<int32_t> resolve_clique_subset(const Graph& g, const CliqueExpect& ce);

CheckReport check_expectations(const Graph& g, const Expectations& e, int threads = 1);

// True iff dist(u, v) <= t; meet-in-the-middle BFS.
bool within_distance(const Graph& g, int32_t u, int32_t v, int t);

}  // namespace girthforge

#endif
