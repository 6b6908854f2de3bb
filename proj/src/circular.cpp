#include "girthforge/circular.hpp"

#include <algorithm>
#include <numeric>

namespace girthforge {

int CircularSpec::t() const {
    int sum = 0;
    for (const auto& c : conduits) sum += c.tau;
    return sum;
}

std::vector<int32_t> BuiltCircular::part_vertices(int part) const {
    std::vector<int32_t> out(static_cast<size_t>(tuples_per_part));
    const int64_t base = static_cast<int64_t>(part) * tuples_per_part;
    std::iota(out.begin(), out.end(), static_cast<int32_t>(base));
    return out;
}

std::vector<int32_t> BuiltCircular::clique_vertices() const {
    std::vector<int32_t> out;
    for (int p : clique_parts) {
        auto pv = part_vertices(p);
        out.insert(out.end(), pv.begin(), pv.end());
    }
    return out;
}

namespace {

struct CoordinateUse {
    std::vector<int> positions;           // hop indices, ascending
    std::vector<Orientation> orientations;
};

void validate(const CircularSpec& spec) {
    const int n_coords = static_cast<int>(spec.conduits.size());
    if (n_coords == 0) throw SpecValidation("no coordinates");
    if (spec.hops.empty()) throw SpecValidation("no hops");
    if (spec.topology == Topology::Cycle && spec.hops.size() < 2)
        throw SpecValidation("cycle topology needs at least 2 hops");
    for (const auto& h : spec.hops)
        if (h.coord < 0 || h.coord >= n_coords)
            throw SpecValidation("hop coordinate out of range");
    for (const auto& c : spec.conduits) {
        if (!c.graph.balanced()) throw SpecValidation("conduit not balanced");
        if (c.tau < 1) throw SpecValidation("conduit tau < 1");
    }
    for (int p : spec.clique_parts)
        if (p < 0 || p >= spec.parts()) throw SpecValidation("clique part out of range");

    std::vector<CoordinateUse> use(n_coords);
    for (size_t i = 0; i < spec.hops.size(); ++i) {
        use[spec.hops[i].coord].positions.push_back(static_cast<int>(i));
        use[spec.hops[i].coord].orientations.push_back(spec.hops[i].orientation);
    }
    int iota_even = 0;
    for (int c = 0; c < n_coords; ++c) {
        if (use[c].positions.empty())
            throw SpecValidation("coordinate " + std::to_string(c) + " never used");
        if (spec.conduits[c].tau % 2 == 0) ++iota_even;
        const int m = static_cast<int>(use[c].positions.size());
        if (m > spec.conduits[c].tau)
            throw SpecValidation("coordinate " + std::to_string(c) + " embedded " +
                                 std::to_string(m) + " times but tau is " +
                                 std::to_string(spec.conduits[c].tau));
        if (spec.topology == Topology::Cycle) {
            if (m % 2 != spec.conduits[c].tau % 2)
                throw SpecValidation("coordinate " + std::to_string(c) +
                                     ": embedding count parity must match tau");
            // Role closure: walking the cycle, consecutive same-orientation embeddings
            // reinterpret the index across parts, which is only sound through a
            // verified self-duality.
            const bool has_sigma = spec.conduits[c].sigma.has_value();
            bool needs_sigma = false;
            for (int i = 0; i + 1 < m; ++i)
                if (use[c].orientations[i] == use[c].orientations[i + 1]) needs_sigma = true;
            // The wrap junction matters as soon as the claimed clique leaves part 0.
            bool multi_part_claim =
                spec.clique_parts.size() > 1 ||
                (spec.clique_parts.size() == 1 && spec.clique_parts[0] != 0);
            if (m >= 2 && multi_part_claim &&
                use[c].orientations[m - 1] == use[c].orientations[0])
                needs_sigma = true;
            if (needs_sigma && !has_sigma)
                throw SelfDualityRequired("coordinate " + std::to_string(c) + " (" +
                                          spec.conduits[c].kind +
                                          ") needs a verified self-duality for role closure");
        }
    }
    if (spec.topology == Topology::Cycle && iota_even == 1 && n_coords < 3)
        throw SpecValidation("a single even-tau coordinate requires at least 3 coordinates");
}

int girth_floor_of(const CircularSpec& spec) {
    const int n_coords = static_cast<int>(spec.conduits.size());
    const int parts = spec.parts();
    int floor_cap = 8;
    bool any_even_tau = false;
    std::vector<std::vector<int>> positions(n_coords);
    for (size_t i = 0; i < spec.hops.size(); ++i)
        positions[spec.hops[i].coord].push_back(static_cast<int>(i));
    for (int c = 0; c < n_coords; ++c) {
        if (spec.conduits[c].tau % 2 == 0) any_even_tau = true;
        const auto& pos = positions[c];
        const int m = static_cast<int>(pos.size());
        if (m < 2) continue;
        for (int i = 0; i < m; ++i) {
            int a = pos[i];
            int b = (i + 1 < m) ? pos[i + 1] : pos[0] + static_cast<int>(spec.hops.size());
            if (spec.topology == Topology::Path && i + 1 >= m) continue;
            int gap = b - a - 1;  // hops strictly between consecutive embeddings
            if (gap <= 0) floor_cap = std::min(floor_cap, 4);
            else if (gap == 1) floor_cap = std::min(floor_cap, 6);
        }
    }
    if (any_even_tau) floor_cap = std::min(floor_cap, 6);
    int g = floor_cap;
    for (const auto& c : spec.conduits) g = std::min(g, c.gamma);
    if (spec.topology == Topology::Cycle) g = std::min(g, parts);
    return g;
}

}  // namespace

BuiltCircular circular_construct(const CircularSpec& spec, long long vertex_budget) {
    validate(spec);
    const int n_coords = static_cast<int>(spec.conduits.size());
    const int parts = spec.parts();

    // Self-dual conduits are realigned so that b_i = sigma(a_i); the biadjacency then
    // becomes symmetric and orientation is immaterial for those hops.
    std::vector<BipartiteGraph> tmpl;
    tmpl.reserve(n_coords);
    for (const auto& c : spec.conduits) {
        if (c.sigma) {
            if (!verify_duality(c.graph, *c.sigma))
                throw DualityNotVerified("conduit " + c.kind + " carries an unverified sigma");
            tmpl.push_back(c.graph.with_b_order(*c.sigma));
        } else {
            tmpl.push_back(c.graph);
        }
    }

    std::vector<long long> domain(n_coords);
    long long tuples = 1;
    for (int c = 0; c < n_coords; ++c) {
        domain[c] = spec.conduits[c].graph.part_size();
        tuples *= domain[c];
        if (tuples > vertex_budget) throw ResourceLimit("tuple space exceeds vertex budget");
    }
    const long long total_vertices = tuples * parts;
    if (total_vertices > vertex_budget) throw ResourceLimit("vertex budget exceeded");

    // Part-major mixed radix: id = part*tuples + sum x_c * stride[c], coordinate 0 most
    // significant.
    std::vector<long long> stride(n_coords, 1);
    for (int c = n_coords - 2; c >= 0; --c) stride[c] = stride[c + 1] * domain[c + 1];

    // Per-coordinate context bases: offsets of tuples whose coordinate c digit is 0.
    std::vector<std::vector<int64_t>> context(n_coords);
    for (int c = 0; c < n_coords; ++c) {
        context[c].reserve(static_cast<size_t>(tuples / domain[c]));
        std::vector<int> digit(n_coords, 0);
        // Odometer over all coordinates except c.
        for (;;) {
            int64_t base = 0;
            for (int j = 0; j < n_coords; ++j) base += digit[j] * stride[j];
            context[c].push_back(base);
            int j = n_coords - 1;
            while (j >= 0) {
                if (j == c) { --j; continue; }
                if (++digit[j] < domain[j]) break;
                digit[j] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }

    std::vector<std::pair<int32_t, int32_t>> edges;
    const int n_hops = static_cast<int>(spec.hops.size());
    long long expected_edges = 0;
    for (int h = 0; h < n_hops; ++h) {
        const Conduit& cd = spec.conduits[spec.hops[h].coord];
        expected_edges += static_cast<long long>(cd.graph.part_size()) * cd.degree() *
                          (tuples / cd.graph.part_size());
    }
    edges.reserve(static_cast<size_t>(expected_edges));

    for (int h = 0; h < n_hops; ++h) {
        const int c = spec.hops[h].coord;
        const bool mirrored =
            spec.hops[h].orientation == Orientation::Mirrored && !spec.conduits[c].sigma;
        const BipartiteGraph& tg = tmpl[c];
        const int64_t left_base = static_cast<int64_t>(h) * tuples;
        const int64_t right_base = static_cast<int64_t>((h + 1) % parts) * tuples;
        const long long st = stride[c];
        for (int i = 0; i < tg.part_size(); ++i) {
            for (int32_t j : tg.row(i)) {
                const int li = mirrored ? j : i;
                const int ri = mirrored ? i : j;
                for (int64_t base : context[c]) {
                    edges.emplace_back(static_cast<int32_t>(left_base + base + li * st),
                                       static_cast<int32_t>(right_base + base + ri * st));
                }
            }
        }
    }

    BuiltCircular out;
    out.graph = Graph::from_edges(static_cast<int>(total_vertices), std::move(edges));
    out.parts = parts;
    out.tuples_per_part = tuples;
    out.t = spec.t();
    out.girth_floor = girth_floor_of(spec);
    out.clique_parts = spec.clique_parts;

    std::map<std::string, std::string> meta{
        {"kind", "circular"},
        {"topology", spec.topology == Topology::Cycle ? "cycle" : "path"},
        {"parts", std::to_string(parts)},
        {"tuples_per_part", std::to_string(tuples)},
        {"t", std::to_string(out.t)},
        {"girth_floor", std::to_string(out.girth_floor)}};
    std::string hops_desc;
    for (const auto& hp : spec.hops) {
        if (!hops_desc.empty()) hops_desc += "|";
        if (hp.orientation == Orientation::Mirrored) hops_desc += "-";
        hops_desc += spec.conduits[hp.coord].kind + "(" +
                     std::to_string(spec.conduits[hp.coord].q) + ")^" + std::to_string(hp.coord);
    }
    meta["hops"] = hops_desc;
    out.graph.set_metadata(std::move(meta));
    return out;
}

BuiltCircular path_construct(const CircularSpec& spec, long long vertex_budget) {
    if (spec.topology != Topology::Path) throw SpecValidation("path_construct needs path topology");
    return circular_construct(spec, vertex_budget);
}

CircularSpec interleave_copies(const CircularSpec& spec, int copies) {
    if (copies != 3 && copies != 5) throw BadParameters("copies must be 3 or 5");
    if (spec.topology != Topology::Cycle) throw SpecValidation("unfold applies to cycles");
    const int lambda = static_cast<int>(spec.hops.size());
    if (static_cast<int>(spec.conduits.size()) != lambda)
        throw SpecValidation("unfold expects one hop per coordinate");
    for (int h = 0; h < lambda; ++h)
        if (spec.hops[h].coord != h || spec.hops[h].orientation != Orientation::Forward)
            throw SpecValidation("unfold expects the plain construction (hop i = coordinate i)");
    for (const auto& c : spec.conduits)
        if (copies > c.tau)
            throw SpecValidation("cannot unfold " + c.kind + " (tau " + std::to_string(c.tau) +
                                 ") into " + std::to_string(copies) + " copies");

    CircularSpec out;
    out.topology = Topology::Cycle;
    out.conduits = spec.conduits;
    out.hops.resize(static_cast<size_t>(lambda) * copies);
    // Round-robin: coordinate i's k-th embedding at position i + k*lambda, orientations
    // alternating F, M, F, (M, F).
    for (int i = 0; i < lambda; ++i) {
        for (int k = 0; k < copies; ++k) {
            out.hops[i + static_cast<size_t>(k) * lambda] =
                Hop{i, k % 2 == 0 ? Orientation::Forward : Orientation::Mirrored};
        }
    }
    out.clique_parts = {0};
    return out;
}

CircularSpec unfold(const CircularSpec& spec, int copies) {
    for (const auto& c : spec.conduits) {
        if (!c.sigma || !verify_duality(c.graph, *c.sigma))
            throw SelfDualityRequired("unfold requires a verified self-duality for " + c.kind +
                                      "(" + std::to_string(c.q) + ")");
    }
    CircularSpec out = interleave_copies(spec, copies);
    const int lambda = static_cast<int>(spec.hops.size());
    out.clique_parts.clear();
    for (int k = 0; k < copies; ++k) out.clique_parts.push_back(k * lambda);
    return out;
}

}  // namespace girthforge
