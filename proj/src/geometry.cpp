#include "girthforge/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace girthforge {

namespace {

using Vec = std::vector<int>;

Vec normalized(const Field& f, Vec v) {
    for (int c : v) {
        if (c != 0) {
            int iv = f.inv(c);
            for (int& x : v) x = f.mul(x, iv);
            return v;
        }
    }
    return v;  // zero vector stays zero
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

// All projective points of GF(q)^dim, normalized, lexicographically sorted.
std::vector<Vec> projective_points(const Field& f, int dim) {
    std::vector<Vec> pts;
    for (int lead = dim - 1; lead >= 0; --lead) {
        long long free_count = 1;
        for (int i = lead + 1; i < dim; ++i) free_count *= f.q();
        for (long long idx = 0; idx < free_count; ++idx) {
            Vec v(dim, 0);
            v[lead] = 1;
            long long rest = idx;
            for (int i = dim - 1; i > lead; --i) {
                v[i] = static_cast<int>(rest % f.q());
                rest /= f.q();
            }
            pts.push_back(std::move(v));
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Row-reduced echelon basis of the span of the given rows; canonical per subspace.
std::vector<Vec> rref(const Field& f, std::vector<Vec> rows) {
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        int iv = f.inv(rows[r][c]);
        for (size_t j = 0; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], iv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            int t = rows[i][c];
            for (size_t j = 0; j < cols; ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Normalized points of a 2-space given by two independent rows.
std::vector<Vec> points_on_line(const Field& f, const Vec& r1, const Vec& r2) {
    std::vector<Vec> pts;
    pts.push_back(normalized(f, r2));
    for (int t = 0; t < f.q(); ++t) {
        Vec v(r1.size());
        for (size_t i = 0; i < r1.size(); ++i) v[i] = f.add(r1[i], f.mul(t, r2[i]));
        pts.push_back(normalized(f, v));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::string coord_label(const Vec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string line_label(const std::vector<Vec>& basis) {
    std::ostringstream os;
    for (size_t r = 0; r < basis.size(); ++r) {
        if (r) os << ";";
        os << coord_label(basis[r]);
    }
    return os.str();
}

// Assembles the bipartite incidence graph. points must be sorted; lines are sorted
// here by their basis key. incidences are per-line lists of point indices.
IncidenceModel assemble(const std::string& kind, int order, std::vector<Vec> points,
                        std::vector<std::vector<Vec>> line_bases,
                        std::vector<std::vector<int32_t>> line_points) {
    const int n = static_cast<int>(points.size());
    std::vector<size_t> order_idx(line_bases.size());
    for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
    std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
        return line_bases[a] < line_bases[b];
    });

    std::vector<std::pair<int32_t, int32_t>> edges;
    std::vector<std::string> labels(static_cast<size_t>(n) + line_bases.size());
    std::vector<std::vector<Vec>> sorted_lines(line_bases.size());
    for (int i = 0; i < n; ++i) labels[i] = "p:" + coord_label(points[i]);
    for (size_t li = 0; li < order_idx.size(); ++li) {
        const size_t src = order_idx[li];
        sorted_lines[li] = line_bases[src];
        labels[n + li] = "l:" + line_label(line_bases[src]);
        for (int32_t p : line_points[src])
            edges.emplace_back(p, static_cast<int32_t>(n + li));
    }

    Graph g = Graph::from_edges(n + static_cast<int>(line_bases.size()), std::move(edges));
    g.set_labels(std::move(labels));
    g.set_metadata({{"kind", kind},
                    {"q", std::to_string(order)},
                    {"part_sizes", std::to_string(n) + "," + std::to_string(line_bases.size())}});

    std::vector<int32_t> a_order(n), b_order(line_bases.size());
    for (int i = 0; i < n; ++i) a_order[i] = i;
    for (size_t i = 0; i < line_bases.size(); ++i) b_order[i] = static_cast<int32_t>(n + i);

    IncidenceModel model;
    model.kind = kind;
    model.order = order;
    model.points = std::move(points);
    model.lines = std::move(sorted_lines);
    model.graph = BipartiteGraph(std::move(g), std::move(a_order), std::move(b_order));
    return model;
}

}  // namespace

IncidenceModel projective_plane_incidence(int q) {
    Field f = Field::create(q);
    std::vector<Vec> points = projective_points(f, 3);
    std::vector<Vec> duals = points;  // lines of PG(2,q) in dual coordinates
    std::map<Vec, int32_t> point_index;
    for (size_t i = 0; i < points.size(); ++i) point_index[points[i]] = static_cast<int32_t>(i);

    std::vector<std::vector<Vec>> line_bases;
    std::vector<std::vector<int32_t>> line_points;
    for (const Vec& d : duals) {
        std::vector<int32_t> on;
        for (size_t i = 0; i < points.size(); ++i) {
            int s = 0;
            for (int j = 0; j < 3; ++j) s = f.add(s, f.mul(d[j], points[i][j]));
            if (s == 0) on.push_back(static_cast<int32_t>(i));
        }
        line_bases.push_back({d});
        line_points.push_back(std::move(on));
    }
    return assemble("projective-plane", q, std::move(points), std::move(line_bases),
                    std::move(line_points));
}

IncidenceModel symplectic_quadrangle_incidence(int q) {
    Field f = Field::create(q);
    std::vector<Vec> points = projective_points(f, 4);
    std::map<Vec, int32_t> point_index;
    for (size_t i = 0; i < points.size(); ++i) point_index[points[i]] = static_cast<int32_t>(i);

    auto symp = [&](const Vec& x, const Vec& y) {
        int s = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        return f.add(s, f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
    };

    std::map<std::vector<Vec>, std::vector<int32_t>> lines;
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j || symp(points[i], points[j]) != 0) continue;
            auto basis = rref(f, {points[i], points[j]});
            if (basis.size() != 2) continue;
            if (lines.count(basis)) continue;
            auto on = points_on_line(f, basis[0], basis[1]);
            std::vector<int32_t> idx;
            for (const Vec& p : on) idx.push_back(point_index.at(p));
            lines.emplace(std::move(basis), std::move(idx));
        }
    }
    std::vector<std::vector<Vec>> line_bases;
    std::vector<std::vector<int32_t>> line_points;
    for (auto& [basis, on] : lines) {
        line_bases.push_back(basis);
        line_points.push_back(on);
    }
    return assemble("symplectic-quadrangle", q, std::move(points), std::move(line_bases),
                    std::move(line_points));
}

Octonion octonion_mul(const Field& f, const Octonion& x, const Octonion& y) {
    auto dot = [&](int i0, const Octonion& u, int j0, const Octonion& v) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(u[i0 + k], v[j0 + k]));
        return s;
    };
    auto cross = [&](int i0, const Octonion& u, int j0, const Octonion& v, int k) {
        int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
        return f.sub(f.mul(u[i0 + k1], v[j0 + k2]), f.mul(u[i0 + k2], v[j0 + k1]));
    };
    const int a = x[0], b = x[7], c = y[0], d = y[7];
    Octonion z{};
    z[0] = f.add(f.mul(a, c), dot(1, x, 4, y));                       // aa' + v.w'
    z[7] = f.add(f.mul(b, d), dot(4, x, 1, y));                       // bb' + w.v'
    for (int k = 0; k < 3; ++k) {
        // a v' + b' v - w x w'
        int t = f.add(f.mul(a, y[1 + k]), f.mul(d, x[1 + k]));
        z[1 + k] = f.sub(t, cross(4, x, 4, y, k));
        // a' w + b w' + v x v'
        t = f.add(f.mul(c, x[4 + k]), f.mul(b, y[4 + k]));
        z[4 + k] = f.add(t, cross(1, x, 1, y, k));
    }
    return z;
}

int octonion_norm(const Field& f, const Octonion& x) {
    int s = f.mul(x[0], x[7]);
    for (int k = 0; k < 3; ++k) s = f.sub(s, f.mul(x[1 + k], x[4 + k]));
    return s;
}

IncidenceModel split_cayley_hexagon_incidence(int q) {
    Field f = Field::create(q);

    // Trace-zero octonions have 7 free coordinates (a, v, w); b = -a. Spec quadric
    // coordinates: (x0..x6) = (v1, v2, v3, a, -w1, -w2, -w3), so that
    // x0 x4 + x1 x5 + x2 x6 = -v.w = a^2 = x3^2 on the norm-zero locus.
    auto to_oct = [&](const Vec& c7) {
        Octonion o{};
        o[0] = c7[0];
        for (int k = 0; k < 3; ++k) { o[1 + k] = c7[1 + k]; o[4 + k] = c7[4 + k]; }
        o[7] = f.neg(c7[0]);
        return o;
    };
    auto to_spec = [&](const Vec& c7) {
        Vec s(7);
        s[3] = c7[0];
        for (int k = 0; k < 3; ++k) { s[k] = c7[1 + k]; s[4 + k] = f.neg(c7[4 + k]); }
        return normalized(f, s);
    };
    auto from_spec = [&](const Vec& s) {
        Vec c7(7);
        c7[0] = s[3];
        for (int k = 0; k < 3; ++k) { c7[1 + k] = s[k]; c7[4 + k] = f.neg(s[4 + k]); }
        return c7;
    };

    // Quadric points, enumerated and ordered in spec coordinates.
    std::vector<Vec> spec_points;
    for (const Vec& c7 : projective_points(f, 7)) {
        Octonion o = to_oct(c7);
        if (octonion_norm(f, o) == 0) spec_points.push_back(to_spec(c7));
    }
    std::sort(spec_points.begin(), spec_points.end());
    spec_points.erase(std::unique(spec_points.begin(), spec_points.end()), spec_points.end());
    std::map<Vec, int32_t> point_index;
    for (size_t i = 0; i < spec_points.size(); ++i)
        point_index[spec_points[i]] = static_cast<int32_t>(i);

    // Lines through x: 2-spaces <x,y> with xy = yx = 0 identically; y ranges over the
    // kernel of the joint linear system (with trace zero), filtered to the quadric.
    std::map<std::vector<Vec>, std::vector<int32_t>> lines;
    for (const Vec& sp : spec_points) {
        Vec c7 = from_spec(sp);
        Octonion x = to_oct(c7);
        std::vector<std::vector<int>> rows;
        for (int j = 0; j < 8; ++j) {
            Octonion ej{};
            ej[j] = 1;
            Octonion xe = octonion_mul(f, x, ej);
            Octonion ex = octonion_mul(f, ej, x);
            // Column j of the maps y -> xy and y -> yx.
            if (rows.empty()) rows.assign(16, std::vector<int>(8, 0));
            for (int k = 0; k < 8; ++k) {
                rows[k][j] = xe[k];
                rows[8 + k][j] = ex[k];
            }
        }
        std::vector<int> trace_row(8, 0);
        trace_row[0] = trace_row[7] = 1;
        rows.push_back(trace_row);
        LinearSolution sol = solve_linear(f, rows, std::vector<int>(rows.size(), 0));

        // Projective points of the kernel.
        const int dim = static_cast<int>(sol.kernel.size());
        for (const Vec& combo : projective_points(f, dim)) {
            Vec y8(8, 0);
            for (int b = 0; b < dim; ++b)
                for (int k = 0; k < 8; ++k)
                    y8[k] = f.add(y8[k], f.mul(combo[b], sol.kernel[b][k]));
            if (is_zero(y8)) continue;
            Octonion yo{};
            for (int k = 0; k < 8; ++k) yo[k] = y8[k];
            if (octonion_norm(f, yo) != 0) continue;
            Vec y7(7);
            y7[0] = y8[0];
            for (int k = 0; k < 3; ++k) { y7[1 + k] = y8[1 + k]; y7[4 + k] = y8[4 + k]; }
            Vec y_spec = to_spec(y7);
            if (y_spec == sp) continue;
            auto basis = rref(f, {sp, y_spec});
            if (basis.size() != 2) continue;
            if (lines.count(basis)) continue;
            std::vector<int32_t> idx;
            for (const Vec& p : points_on_line(f, basis[0], basis[1])) {
                auto it = point_index.find(p);
                if (it == point_index.end()) { idx.clear(); break; }  // leaves the quadric
                idx.push_back(it->second);
            }
            if (idx.empty()) continue;
            lines.emplace(std::move(basis), std::move(idx));
        }
    }

    std::vector<std::vector<Vec>> line_bases;
    std::vector<std::vector<int32_t>> line_points;
    for (auto& [basis, on] : lines) {
        line_bases.push_back(basis);
        line_points.push_back(on);
    }
    return assemble("split-cayley-hexagon", q, std::move(spec_points), std::move(line_bases),
                    std::move(line_points));
}

IncidenceModel complete_bipartite_conduit(int delta) {
    if (delta < 1) throw BadParameters("delta >= 1 required");
    std::vector<Vec> points(delta);
    std::vector<std::vector<Vec>> line_bases(delta);
    std::vector<std::vector<int32_t>> line_points(delta);
    std::vector<int32_t> all(delta);
    for (int i = 0; i < delta; ++i) {
        points[i] = {i};
        line_bases[i] = {{i}};
        all[i] = i;
    }
    for (int i = 0; i < delta; ++i) line_points[i] = all;
    return assemble("complete-bipartite", delta, std::move(points), std::move(line_bases),
                    std::move(line_points));
}

Conduit make_conduit(const std::string& kind, int q) {
    Conduit c;
    if (kind == "pp" || kind == "projective-plane") {
        auto m = projective_plane_incidence(q);
        c = {m.kind, q, 2, 6, std::move(m.graph), std::nullopt};
    } else if (kind == "sq" || kind == "symplectic-quadrangle") {
        auto m = symplectic_quadrangle_incidence(q);
        c = {m.kind, q, 3, 8, std::move(m.graph), std::nullopt};
    } else if (kind == "hex" || kind == "split-cayley-hexagon") {
        auto m = split_cayley_hexagon_incidence(q);
        c = {m.kind, q, 5, 12, std::move(m.graph), std::nullopt};
    } else if (kind == "kdd" || kind == "complete-bipartite") {
        auto m = complete_bipartite_conduit(q);
        c = {m.kind, q, 1, 4, std::move(m.graph), std::nullopt};
    } else {
        throw BadParameters("unknown conduit kind '" + kind + "'");
    }
    return c;
}

}  // namespace girthforge
