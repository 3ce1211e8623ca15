#include "nzsh/orderings.hpp"

#include <algorithm>
#include <cassert>

namespace nzsh {

namespace {

struct OrderingSearch {
    const FiniteGroup& g;
    const std::vector<Elem>& pool; // ascending G\J
    OrderingFlags flags;
    std::span<const Elem> prefix;
    size_t half;
    std::vector<Elem> seq;
    std::vector<char> used;

    bool place(size_t pos) {
        size_t L = pool.size();
        if (pos == L) {
            if (flags.adjacent_nonzero && g.add(seq.back(), seq.front()) == g.zero()) return false;
            return true;
        }
        for (size_t ci = 0; ci < L; ++ci) {
            if (used[ci]) continue;
            Elem x = pool[ci];
            if (pos < prefix.size() && x != prefix[pos]) continue;
            if (flags.adjacent_nonzero && pos > 0 && g.add(seq[pos - 1], x) == g.zero()) continue;
            if (flags.plusminus_split) {
                Elem nx = g.neg(x);
                if (pos < half) {
                    if (nx == x) continue; // involutions cannot split
                    bool neg_in_first = false;
                    for (size_t q = 0; q < pos; ++q)
                        if (seq[q] == nx) { neg_in_first = true; break; }
                    if (neg_in_first) continue;
                } else {
                    bool neg_in_first = false;
                    for (size_t q = 0; q < half; ++q)
                        if (seq[q] == nx) { neg_in_first = true; break; }
                    if (!neg_in_first) continue;
                }
            }
            used[ci] = 1;
            seq.push_back(x);
            if (place(pos + 1)) return true;
            seq.pop_back();
            used[ci] = 0;
        }
        return false;
    }
};

} // namespace

OrderedComplement ordered_complement(const FiniteGroup& g, const Subgroup& j, OrderingFlags flags,
                                     std::span<const Elem> forced_prefix) {
    auto pool = complement_of(g, j);
    if (pool.empty()) throw unsatisfiable("G\\J is empty");
    if (flags.plusminus_split && pool.size() % 2 != 0)
        throw unsatisfiable("plus/minus split needs an even complement");
    OrderingSearch s{g, pool, flags, forced_prefix, pool.size() / 2, {}, std::vector<char>(pool.size(), 0)};
    s.seq.reserve(pool.size());
    if (!s.place(0)) throw unsatisfiable("no ordering satisfies the requested flags");
    return OrderedComplement{std::move(s.seq), flags};
}

bool covers_complement(const FiniteGroup& g, const Subgroup& j, int64_t lambda,
                       const std::vector<Elem>& multiset) {
    std::vector<int64_t> cov(static_cast<size_t>(g.order()), 0);
    for (Elem x : multiset) {
        cov[static_cast<size_t>(x)]++;
        cov[static_cast<size_t>(g.neg(x))]++;
    }
    for (Elem x = 0; x < g.order(); ++x) {
        int64_t want = j.contains(x) ? 0 : lambda;
        if (cov[static_cast<size_t>(x)] != want) return false;
    }
    return true;
}

Omega omega(const FiniteGroup& g, const Subgroup& j, int64_t lambda, const OrderedComplement& ordering) {
    const auto& seq = ordering.sequence;
    int64_t L = static_cast<int64_t>(seq.size());
    Omega om;
    om.lambda = lambda;
    if (lambda <= 0) throw bad_params("lambda must be positive");
    if (lambda % 2 == 0) {
        int64_t total = lambda / 2 * L;
        om.layout.reserve(static_cast<size_t>(total));
        for (int64_t i = 0; i < total; ++i) om.layout.push_back(seq[static_cast<size_t>(i % L)]);
    } else {
        for (Elem x : seq)
            if (!j.contains(x) && g.is_involution(x))
                throw odd_lambda_with_involution("G\\J has involutions");
        if (L % 2 != 0 || !ordering.flags.plusminus_split)
            throw bad_params("odd lambda needs a plus/minus split ordering");
        int64_t total = (lambda - 1) / 2 * L + L / 2;
        om.layout.reserve(static_cast<size_t>(total));
        for (int64_t i = 0; i < total; ++i) om.layout.push_back(seq[static_cast<size_t>(i % L)]);
        om.half_set.assign(seq.begin(), seq.begin() + L / 2);
    }
    assert(covers_complement(g, j, lambda, om.layout));
    return om;
}

std::vector<std::vector<Elem>> slice_lists(const std::vector<Elem>& layout, const std::vector<int>& sizes) {
    int64_t total = 0;
    for (int s : sizes) {
        if (s <= 0) throw size_mismatch("slice sizes must be positive");
        total += s;
    }
    if (total != static_cast<int64_t>(layout.size()))
        throw size_mismatch("tile sizes sum to " + std::to_string(total) + ", layout has " +
                            std::to_string(layout.size()) + " elements");
    std::vector<std::vector<Elem>> out;
    size_t pos = 0;
    for (int s : sizes) {
        std::vector<Elem> slice(layout.begin() + static_cast<long>(pos), layout.begin() + static_cast<long>(pos + s));
        auto sorted = slice;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw size_mismatch("slice repeats an element; tile larger than v-t");
        out.push_back(std::move(slice));
        pos += static_cast<size_t>(s);
    }
    return out;
}

} // namespace nzsh
