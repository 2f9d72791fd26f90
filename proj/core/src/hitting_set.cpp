#include "ftsp/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace ftsp {

bool PivotSet::contains(int v) const {
    return std::binary_search(pivots.begin(), pivots.end(), v);
}

long long greedy_size_bound(int n, int L, int q) {
    if (q <= 0) return 0;
    double raw = (static_cast<double>(n) / static_cast<double>(L)) * std::log(static_cast<double>(q));
    return static_cast<long long>(std::ceil(raw)) + 1;
}

PivotSet greedy_pivot_selection(const PathFamily& family, int n_universe,
                                bool check_invariants) {
    (void)n_universe;
    // keep only the first min_size distinct vertices of every member
    std::vector<std::vector<int>> members;
    members.reserve(family.members.size());
    for (const auto& m : family.members) {
        if (m.empty()) throw std::invalid_argument("greedy_pivot_selection: empty member");
        std::vector<int> t;
        for (int v : m) {
            if (std::find(t.begin(), t.end(), v) == t.end()) t.push_back(v);
            if (static_cast<int>(t.size()) == family.min_size) break;
        }
        members.push_back(std::move(t));
    }

    std::map<int, long long> count;                 // c(v)
    std::map<int, std::vector<int>> member_lists;   // L(v): member indices containing v
    for (int i = 0; i < static_cast<int>(members.size()); ++i)
        for (int v : members[i]) {
            count[v]++;
            member_lists[v].push_back(i);
        }

    // ordered index: max count first, ties by smallest label
    struct Key {
        long long c;
        int v;
        bool operator<(const Key& o) const {
            if (c != o.c) return c > o.c;
            return v < o.v;
        }
    };
    std::set<Key> index;
    for (const auto& [v, c] : count) index.insert({c, v});

    std::vector<char> alive(members.size(), 1);
    std::map<int, char> selected;
    size_t surviving = members.size();
    PivotSet out;

    while (surviving > 0) {
        Key top = *index.begin();
        index.erase(index.begin());
        int v = top.v;
        selected[v] = 1;
        out.pivots.push_back(v);
        for (int mi : member_lists[v]) {
            if (!alive[mi]) continue;
            alive[mi] = 0;
            surviving--;
            for (int u : members[mi]) {
                if (!selected.count(u)) index.erase({count[u], u});
                count[u]--;
                if (!selected.count(u)) index.insert({count[u], u});
            }
        }
        if (check_invariants) {
            for (const auto& [u, c] : count) {
                long long actual = 0;
                for (int mi : member_lists[u])
                    if (alive[mi]) actual++;
                if (c != actual)
                    throw std::logic_error("greedy_pivot_selection: counter invariant broken");
            }
        }
    }
    std::sort(out.pivots.begin(), out.pivots.end());
    return out;
}

bool verify_hitting(const PathFamily& family, const PivotSet& pivots) {
    for (const auto& m : family.members) {
        bool hit = false;
        for (int v : m)
            if (pivots.contains(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace ftsp
