#include "nzsh/json_io.hpp"

#include <algorithm>
#include <map>

namespace nzsh {

using nlohmann::json;

json array_to_json(const PFArray& a, const Subgroup& j, int64_t lambda) {
    json cells = json::array();
    for (const Cell& c : a.skeleton())
        cells.push_back({{"r", c.row}, {"c", c.col}, {"v", a.get(c.row, c.col)}});
    return json{{"group", a.group()->name()},
                {"m", a.m()},
                {"n", a.n()},
                {"lambda", lambda},
                {"subgroup", j.elements},
                {"cells", cells}};
}

LoadedArray array_from_json(const json& doc) {
    LoadedArray out;
    out.group = build_group(parse_group_spec(doc.at("group").get<std::string>()));
    out.j.elements = doc.at("subgroup").get<std::vector<Elem>>();
    std::sort(out.j.elements.begin(), out.j.elements.end());
    if (out.j.elements.empty() || out.j.elements.front() != 0)
        throw bad_params("subgroup must contain the identity");
    int m = doc.at("m").get<int>();
    int n = doc.at("n").get<int>();
    out.array = PFArray(m, n, out.group);
    for (const auto& cell : doc.at("cells")) {
        int r = cell.at("r").get<int>();
        int c = cell.at("c").get<int>();
        if (r < 1 || r > m || c < 1 || c > n) throw bad_params("cell out of range");
        out.array.set(r, c, cell.at("v").get<Elem>());
    }
    out.params.m = m;
    out.params.n = n;
    out.params.lambda = doc.at("lambda").get<int64_t>();
    out.params.t = out.j.t();
    // most common line counts stand in for the declared h and k
    auto mode = [](const std::vector<int>& counts) {
        std::map<int, int> freq;
        for (int c : counts) freq[c]++;
        int best = 0, best_cnt = -1;
        for (const auto& [val, cnt] : freq)
            if (cnt > best_cnt) { best = val; best_cnt = cnt; }
        return best;
    };
    std::vector<int> rc, cc;
    for (int r = 1; r <= m; ++r) rc.push_back(static_cast<int>(out.array.row_cells(r).size()));
    for (int c = 1; c <= n; ++c) cc.push_back(static_cast<int>(out.array.col_cells(c).size()));
    out.params.h = mode(rc);
    out.params.k = mode(cc);
    return out;
}

json report_to_json(const VerifyReport& rep) {
    json fails = json::array();
    for (const auto& f : rep.failures)
        fails.push_back({{"kind", f.kind}, {"index", f.index}, {"detail", f.detail}});
    return json{{"pass", rep.pass()},
                {"row_counts_ok", rep.row_counts_ok},
                {"col_counts_ok", rep.col_counts_ok},
                {"coverage_ok", rep.coverage_ok},
                {"nonzero_sums_ok", rep.nonzero_sums_ok},
                {"failures", fails}};
}

json plan_to_json(const TilePlan& plan) {
    json tiles = json::array();
    for (const auto& t : plan.tiles) {
        json cells = json::array();
        for (const Cell& c : t.cells) cells.push_back({{"r", c.row}, {"c", c.col}});
        tiles.push_back({{"family", family_name(t.family)},
                         {"b", t.b},
                         {"transposed", t.transposed},
                         {"cells", cells}});
    }
    return json{{"tiles", tiles}, {"max_tile_size", plan.max_tile_size()}};
}

json orientation_to_json(const Orientation& o) {
    return json{{"rows", std::vector<int>(o.rows.begin(), o.rows.end())},
                {"cols", std::vector<int>(o.cols.begin(), o.cols.end())}};
}

json embedding_to_json(const Embedding& e, const EmbeddingReport& rep) {
    auto hist = [](const std::map<int64_t, int64_t>& h) {
        json out = json::object();
        for (const auto& [len, cnt] : h) out[std::to_string(len)] = cnt;
        return out;
    };
    return json{{"vertices", e.vertices},
                {"edges", e.edges},
                {"faces", e.row_faces.size() + e.col_faces.size()},
                {"genus", e.genus},
                {"parts", {{"q", e.q}, {"t", e.t}}},
                {"row_face_lengths", hist(rep.row_face_lengths)},
                {"col_face_lengths", hist(rep.col_face_lengths)},
                {"row_lengths_ok", rep.row_lengths_ok},
                {"col_lengths_ok", rep.col_lengths_ok}};
}

json regimes_to_json() {
    json out = json::array();
    for (const auto& r : regime_table()) out.push_back({{"tag", r.tag}, {"description", r.description}});
    return out;
}

std::string grid_csv(const PFArray& a) {
    std::string out;
    for (int r = 1; r <= a.m(); ++r) {
        for (int c = 1; c <= a.n(); ++c) {
            if (c > 1) out += ',';
            if (a.filled(r, c)) out += std::to_string(a.get(r, c));
        }
        out += '\n';
    }
    return out;
}

} // namespace nzsh
