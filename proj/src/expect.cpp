#include "girthforge/expect.hpp"

#include <random>

#include "json.hpp"

#include "girthforge/parallel.hpp"

namespace girthforge {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json clique_to_json(const CliqueExpect& c) {
    ordered_json j;
    j["t"] = c.t;
    switch (c.kind) {
        case CliqueExpect::Kind::All: j["subset"] = {{"kind", "all"}}; break;
        case CliqueExpect::Kind::Parts: j["subset"] = {{"kind", "parts"}, {"parts", c.parts}}; break;
        case CliqueExpect::Kind::Range:
            j["subset"] = {{"kind", "range"}, {"lo", c.lo}, {"hi", c.hi}};
            break;
    }
    if (c.size >= 0) j["size"] = c.size;
    return j;
}

CliqueExpect clique_from_json(const ordered_json& j) {
    CliqueExpect c;
    c.t = j.at("t").get<int>();
    const auto& s = j.at("subset");
    std::string kind = s.at("kind").get<std::string>();
    if (kind == "all") c.kind = CliqueExpect::Kind::All;
    else if (kind == "parts") {
        c.kind = CliqueExpect::Kind::Parts;
        c.parts = s.at("parts").get<std::vector<int>>();
    } else if (kind == "range") {
        c.kind = CliqueExpect::Kind::Range;
        c.lo = s.at("lo").get<int64_t>();
        c.hi = s.at("hi").get<int64_t>();
    } else {
        throw ParseError("unknown clique subset kind '" + kind + "'");
    }
    if (j.contains("size")) c.size = j.at("size").get<long long>();
    return c;
}

}  // namespace

std::string Expectations::to_json() const {
    ordered_json j;
    if (vertices) j["vertices"] = *vertices;
    if (max_degree) j["max_degree"] = *max_degree;
    if (regular_degree) j["regular_degree"] = *regular_degree;
    if (girth_min) j["girth_min"] = *girth_min;
    if (girth_exact) j["girth_exact"] = *girth_exact;
    if (bipartite) j["bipartite"] = *bipartite;
    if (clique) j["clique"] = clique_to_json(*clique);
    if (sampled_pairs)
        j["sampled_pairs"] = {{"count", sampled_pairs->count},
                              {"t", sampled_pairs->t},
                              {"seed", sampled_pairs->seed}};
    return j.dump(2);
}

Expectations Expectations::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad expectations JSON: ") + e.what());
    }
    Expectations e;
    if (j.contains("vertices")) e.vertices = j["vertices"].get<long long>();
    if (j.contains("max_degree")) e.max_degree = j["max_degree"].get<int>();
    if (j.contains("regular_degree")) e.regular_degree = j["regular_degree"].get<int>();
    if (j.contains("girth_min")) e.girth_min = j["girth_min"].get<int>();
    if (j.contains("girth_exact")) e.girth_exact = j["girth_exact"].get<int>();
    if (j.contains("bipartite")) e.bipartite = j["bipartite"].get<bool>();
    if (j.contains("clique")) e.clique = clique_from_json(j["clique"]);
    if (j.contains("sampled_pairs")) {
        SampledPairsExpect s;
        s.count = j["sampled_pairs"].at("count").get<int>();
        s.t = j["sampled_pairs"].at("t").get<int>();
        s.seed = j["sampled_pairs"].at("seed").get<uint64_t>();
        e.sampled_pairs = s;
    }
    return e;
}

void CheckReport::add(const std::string& name, const std::string& expected,
                      const std::string& measured, bool pass) {
    lines.push_back({name, expected, measured, pass});
    all_pass = all_pass && pass;
}

std::string CheckReport::to_json() const {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& l : lines)
        j["checks"].push_back({{"name", l.name},
                               {"expected", l.expected},
                               {"measured", l.measured},
                               {"pass", l.pass}});
    j["all_pass"] = all_pass;
    return j.dump(2);
}

std::vector<int32_t> resolve_clique_subset(const Graph& g, const CliqueExpect& ce) {
    std::vector<int32_t> subset;
    switch (ce.kind) {
        case CliqueExpect::Kind::All:
            subset.resize(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) subset[i] = i;
            break;
        case CliqueExpect::Kind::Range:
            for (int64_t v = ce.lo; v < ce.hi; ++v) subset.push_back(static_cast<int32_t>(v));
            break;
        case CliqueExpect::Kind::Parts: {
            auto it = g.metadata().find("tuples_per_part");
            if (it == g.metadata().end())
                throw ParseError("clique parts need tuples_per_part metadata");
            long long per = std::stoll(it->second);
            for (int p : ce.parts)
                for (long long i = 0; i < per; ++i)
                    subset.push_back(static_cast<int32_t>(p * per + i));
            break;
        }
    }
    return subset;
}

bool within_distance(const Graph& g, int32_t u, int32_t v, int t) {
    if (u == v) return true;
    const int half_u = (t + 1) / 2, half_v = t / 2;
    // Forward ball from u to depth half_u.
    thread_local std::vector<int32_t> du, dv, qu, qv;
    thread_local std::vector<uint32_t> su, sv;
    thread_local uint32_t epoch = 0;
    const int n = g.vertex_count();
    if (static_cast<int>(du.size()) < n) {
        du.resize(n); dv.resize(n);
        su.assign(n, 0); sv.assign(n, 0);
        epoch = 0;
    }
    ++epoch;
    if (epoch == 0) { std::fill(su.begin(), su.end(), 0); std::fill(sv.begin(), sv.end(), 0); epoch = 1; }

    qu.clear();
    su[u] = epoch; du[u] = 0; qu.push_back(u);
    for (size_t head = 0; head < qu.size(); ++head) {
        int x = qu[head];
        if (du[x] >= half_u) continue;
        for (int32_t y : g.neighbors(x))
            if (su[y] != epoch) { su[y] = epoch; du[y] = du[x] + 1; qu.push_back(y); }
    }
    if (su[v] == epoch && du[v] <= t) return true;

    qv.clear();
    sv[v] = epoch; dv[v] = 0; qv.push_back(v);
    for (size_t head = 0; head < qv.size(); ++head) {
        int x = qv[head];
        if (su[x] == epoch && du[x] + dv[x] <= t) return true;
        if (dv[x] >= half_v) continue;
        for (int32_t y : g.neighbors(x))
            if (sv[y] != epoch) { sv[y] = epoch; dv[y] = dv[x] + 1; qv.push_back(y); }
    }
    return false;
}

CheckReport check_expectations(const Graph& g, const Expectations& e, int threads) {
    CheckReport rep;
    if (e.vertices)
        rep.add("vertices", std::to_string(*e.vertices), std::to_string(g.vertex_count()),
                g.vertex_count() == *e.vertices);
    if (e.max_degree) {
        int d = max_degree(g);
        rep.add("max_degree<=", std::to_string(*e.max_degree), std::to_string(d),
                d <= *e.max_degree);
    }
    if (e.regular_degree) {
        bool reg = is_regular(g);
        int d = max_degree(g);
        rep.add("regular_degree", std::to_string(*e.regular_degree),
                reg ? std::to_string(d) : "irregular", reg && d == *e.regular_degree);
    }
    if (e.girth_min || e.girth_exact) {
        auto gi = girth(g, threads);
        std::string measured = gi ? std::to_string(*gi) : "infinite";
        if (e.girth_min)
            rep.add("girth>=", std::to_string(*e.girth_min), measured, !gi || *gi >= *e.girth_min);
        if (e.girth_exact)
            rep.add("girth==", std::to_string(*e.girth_exact), measured,
                    gi && *gi == *e.girth_exact);
    }
    if (e.bipartite) {
        auto b = is_bipartite(g);
        rep.add("bipartite", *e.bipartite ? "true" : "false", b.bipartite ? "true" : "false",
                b.bipartite == *e.bipartite);
    }
    if (e.clique) {
        auto subset = resolve_clique_subset(g, *e.clique);
        if (e.clique->size >= 0)
            rep.add("clique_size", std::to_string(e.clique->size), std::to_string(subset.size()),
                    static_cast<long long>(subset.size()) == e.clique->size);
        auto cert = verify_clique_in_power(g, e.clique->t, subset, threads);
        std::string measured = cert.verified
                                   ? "clique"
                                   : "failing pairs: " + std::to_string(cert.failures.size());
        rep.add("clique_in_power_t" + std::to_string(e.clique->t), "clique", measured,
                cert.verified);
    }
    if (e.sampled_pairs) {
        std::mt19937_64 rng(e.sampled_pairs->seed);
        std::uniform_int_distribution<int32_t> pick(0, g.vertex_count() - 1);
        std::vector<std::pair<int32_t, int32_t>> pairs(e.sampled_pairs->count);
        for (auto& pr : pairs) { pr.first = pick(rng); pr.second = pick(rng); }
        std::vector<int8_t> ok(pairs.size(), 0);
        // The per-thread scratch is two full-size arrays; cap workers on huge graphs.
        int workers = g.vertex_count() > 1000000 ? std::min(threads, 4) : threads;
        parallel_for(static_cast<long long>(pairs.size()), workers, [&](long long i) {
            ok[i] = within_distance(g, pairs[i].first, pairs[i].second, e.sampled_pairs->t) ? 1 : 0;
        });
        long long good = 0;
        for (int8_t o : ok) good += o;
        rep.add("sampled_pairs_within_t" + std::to_string(e.sampled_pairs->t),
                std::to_string(pairs.size()), std::to_string(good),
                good == static_cast<long long>(pairs.size()));
    }
    return rep;
}

}  // namespace girthforge
