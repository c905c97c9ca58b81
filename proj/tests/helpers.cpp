#include "helpers.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testutil {

namespace {

using Mask = std::uint32_t;  // over vertex pairs, n <= 7 -> 21 bits

int pair_bit(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    int bit = 0;
    for (int a = 0; a < i; ++a) bit += n - a - 1;
    return bit + (j - i - 1);
}

Mask canonical(Mask mask, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Mask best = ~Mask{0};
    do {
        Mask remapped = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mask & (Mask{1} << pair_bit(i, j, n)))
                    remapped |= Mask{1} << pair_bit(perm[i], perm[j], n);
        best = std::min(best, remapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

minors::Graph to_graph(Mask mask, int n) {
    std::vector<minors::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (Mask{1} << pair_bit(i, j, n))) edges.emplace_back(i, j);
    return minors::Graph::make(n, edges);
}

// Every connected graph arises by attaching one vertex to a connected graph
// one vertex smaller (delete any non-cut vertex), so level-by-level
// augmentation with canonical dedup enumerates each class once.
std::vector<Mask> census_masks(int n) {
    std::vector<Mask> level{0};  // K_1
    for (int size = 2; size <= n; ++size) {
        std::set<Mask> next;
        for (Mask parent : level) {
            for (int attach = 1; attach < (1 << (size - 1)); ++attach) {
                Mask mask = 0;
                for (int i = 0; i < size - 1; ++i)
                    for (int j = i + 1; j < size - 1; ++j)
                        if (parent & (Mask{1} << pair_bit(i, j, size - 1)))
                            mask |= Mask{1} << pair_bit(i, j, size);
                for (int i = 0; i < size - 1; ++i)
                    if (attach & (1 << i)) mask |= Mask{1} << pair_bit(i, size - 1, size);
                next.insert(canonical(mask, size));
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

}  // namespace

const std::vector<minors::Graph>& connected_census(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("census supports 1..7 vertices");
    static std::map<int, std::vector<minors::Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<minors::Graph> graphs;
        for (Mask mask : census_masks(n)) graphs.push_back(to_graph(mask, n));
        it = cache.emplace(n, std::move(graphs)).first;
    }
    return it->second;
}

int brute_longest_monotone(const std::vector<int>& seq, bool increasing) {
    int n = static_cast<int>(seq.size());
    if (n > 20) throw std::invalid_argument("subset oracle capped at 20 elements");
    int best = 0;
    for (int sub = 1; sub < (1 << n); ++sub) {
        int prev = 0, count = 0;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(sub & (1 << i))) continue;
            if (count > 0) ok = increasing ? seq[prev] < seq[i] : seq[prev] > seq[i];
            prev = i;
            ++count;
        }
        if (ok) best = std::max(best, count);
    }
    return best;
}

int dp_longest_monotone(const std::vector<int>& seq, bool increasing) {
    int n = static_cast<int>(seq.size());
    std::vector<int> len(n, 1);
    int best = n > 0 ? 1 : 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            bool ok = increasing ? seq[j] < seq[i] : seq[j] > seq[i];
            if (ok && len[j] + 1 > len[i]) best = std::max(best, len[i] = len[j] + 1);
        }
    return best;
}

}  // namespace testutil
