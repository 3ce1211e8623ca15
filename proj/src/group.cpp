#include "nzsh/group.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <set>
#include <sstream>

#include "nzsh/rng.hpp"

namespace nzsh {

GroupSpec GroupSpec::cyclic(int v) {
    if (v < 1) throw bad_params("cyclic order must be >= 1");
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.cyclic_order = v;
    s.source = "z:" + std::to_string(v);
    return s;
}

GroupSpec GroupSpec::product(std::vector<int> orders) {
    if (orders.empty()) throw bad_params("product needs at least one factor");
    for (int n : orders)
        if (n < 2) throw bad_params("product factor orders must be >= 2");
    GroupSpec s;
    s.kind = Kind::Product;
    s.factor_orders = std::move(orders);
    std::string src = "prod:";
    for (size_t i = 0; i < s.factor_orders.size(); ++i)
        src += (i ? "x" : "") + std::to_string(s.factor_orders[i]);
    s.source = src;
    return s;
}

GroupSpec GroupSpec::elementary2(int r) {
    if (r < 1) throw bad_params("elementary2 rank must be >= 1");
    GroupSpec s;
    s.kind = Kind::Elementary2;
    s.rank = r;
    s.factor_orders.assign(static_cast<size_t>(r), 2);
    s.source = "e2:" + std::to_string(r);
    return s;
}

GroupSpec GroupSpec::cayley(std::vector<std::vector<Elem>> table) {
    GroupSpec s;
    s.kind = Kind::Cayley;
    s.table = std::move(table);
    s.source = "cayley:<inline>";
    return s;
}

GroupSpec parse_group_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw bad_params("group spec needs kind:arg, got '" + text + "'");
    std::string kind = text.substr(0, colon);
    std::string arg = text.substr(colon + 1);
    if (kind == "z") return GroupSpec::cyclic(std::stoi(arg));
    if (kind == "e2") return GroupSpec::elementary2(std::stoi(arg));
    if (kind == "prod") {
        std::vector<int> orders;
        std::stringstream ss(arg);
        std::string part;
        while (std::getline(ss, part, 'x')) orders.push_back(std::stoi(part));
        return GroupSpec::product(std::move(orders));
    }
    if (kind == "cayley") {
        std::ifstream in(arg);
        if (!in) throw bad_params("cannot open cayley table file '" + arg + "'");
        std::vector<std::vector<Elem>> rows;
        std::string line;
        while (std::getline(in, line)) {
            std::stringstream ls(line);
            std::vector<Elem> row;
            Elem x;
            while (ls >> x) row.push_back(x);
            if (!row.empty()) rows.push_back(std::move(row));
        }
        auto spec = GroupSpec::cayley(std::move(rows));
        spec.source = "cayley:" + arg;
        return spec;
    }
    throw bad_params("unknown group kind '" + kind + "'");
}

namespace {

void validate_cayley(const std::vector<std::vector<Elem>>& t) {
    int v = static_cast<int>(t.size());
    if (v == 0) throw cayley_invalid("empty table");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != v) throw cayley_invalid("table is not square");
        for (Elem x : row)
            if (x < 0 || x >= v) throw cayley_invalid("entry out of range");
    }
    // Latin square
    for (int i = 0; i < v; ++i) {
        std::vector<char> seen_row(static_cast<size_t>(v), 0), seen_col(static_cast<size_t>(v), 0);
        for (int j = 0; j < v; ++j) {
            if (seen_row[static_cast<size_t>(t[i][j])]++) throw cayley_invalid("row " + std::to_string(i) + " repeats an entry");
            if (seen_col[static_cast<size_t>(t[j][i])]++) throw cayley_invalid("column " + std::to_string(i) + " repeats an entry");
        }
    }
    // two-sided identity at index 0
    for (int i = 0; i < v; ++i)
        if (t[0][i] != i || t[i][0] != i) throw cayley_invalid("index 0 is not a two-sided identity");
    // two-sided inverses
    for (int i = 0; i < v; ++i) {
        bool ok = false;
        for (int j = 0; j < v; ++j)
            if (t[i][j] == 0 && t[j][i] == 0) { ok = true; break; }
        if (!ok) throw cayley_invalid("element " + std::to_string(i) + " has no two-sided inverse");
    }
    // associativity: exhaustive at desk scale, sampled above it
    if (v <= 64) {
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b)
                for (int c = 0; c < v; ++c)
                    if (t[static_cast<size_t>(t[a][b])][c] != t[a][static_cast<size_t>(t[b][c])])
                        throw cayley_invalid("not associative");
    } else {
        Rng rng(0xa55a5aa5u);
        for (int s = 0; s < 100000; ++s) {
            int a = static_cast<int>(rng.below(static_cast<uint64_t>(v)));
            int b = static_cast<int>(rng.below(static_cast<uint64_t>(v)));
            int c = static_cast<int>(rng.below(static_cast<uint64_t>(v)));
            if (t[static_cast<size_t>(t[a][b])][c] != t[a][static_cast<size_t>(t[b][c])])
                throw cayley_invalid("not associative");
        }
    }
}

} // namespace

FiniteGroup::FiniteGroup(GroupSpec spec) : spec_(std::move(spec)) {
    switch (spec_.kind) {
    case GroupSpec::Kind::Cyclic:
        v_ = spec_.cyclic_order;
        abelian_ = true;
        break;
    case GroupSpec::Kind::Product:
    case GroupSpec::Kind::Elementary2: {
        v_ = 1;
        for (int n : spec_.factor_orders) {
            if (v_ > (1 << 24) / n) throw bad_params("product group too large");
            v_ *= n;
        }
        abelian_ = true;
        radices_.resize(spec_.factor_orders.size());
        int stride = 1;
        for (size_t i = spec_.factor_orders.size(); i-- > 0;) {
            radices_[i] = stride;
            stride *= spec_.factor_orders[i];
        }
        break;
    }
    case GroupSpec::Kind::Cayley:
        validate_cayley(spec_.table);
        v_ = static_cast<int>(spec_.table.size());
        abelian_ = true;
        for (int x = 0; x < v_ && abelian_; ++x)
            for (int y = x + 1; y < v_; ++y)
                if (spec_.table[x][y] != spec_.table[y][x]) { abelian_ = false; break; }
        break;
    }

    neg_.resize(static_cast<size_t>(v_));
    for (Elem x = 0; x < v_; ++x) {
        switch (spec_.kind) {
        case GroupSpec::Kind::Cyclic:
            neg_[static_cast<size_t>(x)] = x == 0 ? 0 : v_ - x;
            break;
        case GroupSpec::Kind::Product:
        case GroupSpec::Kind::Elementary2: {
            Elem r = 0;
            Elem rem = x;
            for (size_t i = 0; i < spec_.factor_orders.size(); ++i) {
                int ni = spec_.factor_orders[i];
                int digit = (rem / radices_[i]) % ni;
                int negd = digit == 0 ? 0 : ni - digit;
                r += negd * radices_[i];
                rem -= digit * radices_[i];
            }
            neg_[static_cast<size_t>(x)] = r;
            break;
        }
        case GroupSpec::Kind::Cayley: {
            Elem inv = -1;
            for (Elem y = 0; y < v_; ++y)
                if (spec_.table[x][y] == 0 && spec_.table[y][x] == 0) { inv = y; break; }
            assert(inv >= 0);
            neg_[static_cast<size_t>(x)] = inv;
            break;
        }
        }
    }
    for (Elem x = 1; x < v_; ++x)
        if (neg_[static_cast<size_t>(x)] == x) involutions_.push_back(x);
}

Elem FiniteGroup::add_mixed(Elem x, Elem y) const {
    Elem r = 0;
    for (size_t i = 0; i < spec_.factor_orders.size(); ++i) {
        int ni = spec_.factor_orders[i];
        int dx = (x / radices_[i]) % ni;
        int dy = (y / radices_[i]) % ni;
        int ds = dx + dy;
        if (ds >= ni) ds -= ni;
        r += ds * radices_[i];
    }
    return r;
}

int FiniteGroup::element_order(Elem x) const {
    int d = 1;
    Elem acc = x;
    while (acc != 0) {
        acc = add(acc, x);
        ++d;
    }
    return d;
}

GroupPtr build_group(GroupSpec spec) {
    return std::make_shared<const FiniteGroup>(std::move(spec));
}

bool Subgroup::contains(Elem x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

namespace {

std::vector<Elem> closure_of(const FiniteGroup& g, std::vector<Elem> gens) {
    std::set<Elem> cl{0};
    std::vector<Elem> frontier{0};
    for (Elem x : gens)
        if (cl.insert(x).second) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem a : frontier) {
            for (Elem b : cl) {
                for (Elem c : {g.add(a, b), g.add(b, a), g.neg(a)}) {
                    if (cl.insert(c).second) next.push_back(c);
                }
            }
            if (static_cast<int>(cl.size()) > g.order()) break; // defensive, cannot happen
        }
        frontier = std::move(next);
    }
    return {cl.begin(), cl.end()};
}

} // namespace

Subgroup subgroup_of_order(const FiniteGroup& g, int t) {
    if (t < 1 || g.order() % t != 0) throw no_subgroup("order " + std::to_string(t) + " does not divide " + std::to_string(g.order()));
    if (t == 1) return trivial_subgroup();
    if (t == g.order()) {
        std::vector<Elem> all(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i) all[static_cast<size_t>(i)] = i;
        return Subgroup{std::move(all)};
    }
    if (g.spec().kind == GroupSpec::Kind::Cyclic) {
        std::vector<Elem> elems;
        int step = g.order() / t;
        for (int i = 0; i < t; ++i) elems.push_back(i * step);
        std::sort(elems.begin(), elems.end());
        return Subgroup{std::move(elems)};
    }

    // Generator-set search, lexicographically least result wins. Pairs cover
    // every case this library meets; triples are the t <= 16 fallback for
    // subgroups that are not 2-generated (e.g. elementary abelian ones).
    std::vector<std::vector<Elem>> found;
    for (Elem x = 1; x < g.order(); ++x) {
        auto cl = closure_of(g, {x});
        if (static_cast<int>(cl.size()) == t) found.push_back(cl);
    }
    if (found.empty())
        for (Elem x = 1; x < g.order(); ++x)
            for (Elem y = x + 1; y < g.order(); ++y) {
                auto cl = closure_of(g, {x, y});
                if (static_cast<int>(cl.size()) == t) found.push_back(cl);
            }
    if (found.empty() && t <= 16)
        for (Elem x = 1; x < g.order(); ++x)
            for (Elem y = x + 1; y < g.order(); ++y)
                for (Elem z = y + 1; z < g.order(); ++z) {
                    auto cl = closure_of(g, {x, y, z});
                    if (static_cast<int>(cl.size()) == t) found.push_back(cl);
                }
    if (!found.empty()) {
        std::sort(found.begin(), found.end());
        return Subgroup{found.front()};
    }
    throw no_subgroup("no subgroup of order " + std::to_string(t) + " found");
}

std::vector<std::vector<Elem>> coset_partition(const FiniteGroup& g, const Subgroup& j) {
    std::vector<char> seen(static_cast<size_t>(g.order()), 0);
    std::vector<std::vector<Elem>> parts;
    for (Elem x = 0; x < g.order(); ++x) {
        if (seen[static_cast<size_t>(x)]) continue;
        std::vector<Elem> part;
        for (Elem e : j.elements) {
            Elem c = g.add(x, e);
            part.push_back(c);
            seen[static_cast<size_t>(c)] = 1;
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<int> coset_index_map(const FiniteGroup& g, const Subgroup& j) {
    auto parts = coset_partition(g, j);
    std::vector<int> idx(static_cast<size_t>(g.order()), -1);
    for (size_t p = 0; p < parts.size(); ++p)
        for (Elem x : parts[p]) idx[static_cast<size_t>(x)] = static_cast<int>(p);
    return idx;
}

std::vector<Elem> complement_of(const FiniteGroup& g, const Subgroup& j) {
    std::vector<Elem> out;
    for (Elem x = 0; x < g.order(); ++x)
        if (!j.contains(x)) out.push_back(x);
    return out;
}

std::optional<std::pair<Elem, Elem>> find_noncommuting_pair(const FiniteGroup& g, const Subgroup& j) {
    if (g.abelian()) return std::nullopt;
    auto comp = complement_of(g, j);
    for (Elem x : comp)
        for (Elem y : comp) {
            if (y == x || y == g.neg(x)) continue;
            if (g.add(x, y) != g.add(y, x)) return std::make_pair(x, y);
        }
    return std::nullopt;
}

std::optional<Elem> find_noninvolution(const FiniteGroup& g, const Subgroup& j) {
    for (Elem x = 0; x < g.order(); ++x)
        if (!j.contains(x) && g.neg(x) != x) return x;
    return std::nullopt;
}

} // namespace nzsh
