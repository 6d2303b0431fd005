#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "common.hpp"

namespace megset {

// Set cover instance over items 0..item_count-1. Sets hold sorted distinct
// item ids; names are optional display labels (fallback "S<j+1>").
struct SetCoverInstance {
    int item_count = 0;
    std::vector<std::vector<int>> sets;
    std::vector<std::string> names;

    int set_count() const { return static_cast<int>(sets.size()); }

    std::string set_name(int j) const {
        if (j >= 0 && j < static_cast<int>(names.size()) && !names[j].empty())
            return names[j];
        return "S" + std::to_string(j + 1);
    }
};

inline SetCoverInstance make_instance(int item_count, std::vector<std::vector<int>> sets,
                                      std::vector<std::string> names = {}) {
    if (item_count < 0) throw ValidationError("negative item count");
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ValidationError("duplicate item within a set");
        for (int i : s)
            if (i < 0 || i >= item_count)
                throw ValidationError("item id out of range: " + std::to_string(i));
    }
    SetCoverInstance inst;
    inst.item_count = item_count;
    inst.sets = std::move(sets);
    inst.names = std::move(names);
    return inst;
}

inline std::vector<int> item_frequencies(const SetCoverInstance& inst) {
    std::vector<int> freq(static_cast<size_t>(inst.item_count), 0);
    for (const auto& s : inst.sets)
        for (int i : s) ++freq[static_cast<size_t>(i)];
    return freq;
}

inline bool covers_all_items(const SetCoverInstance& inst) {
    const auto freq = item_frequencies(inst);
    return std::all_of(freq.begin(), freq.end(), [](int f) { return f > 0; });
}

// Normalized form: every set has >= 2 items, every item lies in >= 2 sets,
// and there are >= 2 sets.
inline bool is_normalized(const SetCoverInstance& inst) {
    if (inst.set_count() < 2) return false;
    for (const auto& s : inst.sets)
        if (s.size() < 2) return false;
    const auto freq = item_frequencies(inst);
    return std::all_of(freq.begin(), freq.end(), [](int f) { return f >= 2; });
}

// True iff the listed sets jointly cover every item. Indices must be in
// range and duplicate-free.
inline bool is_cover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
    std::vector<char> seen_set(static_cast<size_t>(inst.set_count()), 0);
    for (int j : chosen) {
        if (j < 0 || j >= inst.set_count())
            throw ValidationError("set index out of range: " + std::to_string(j));
        if (seen_set[static_cast<size_t>(j)])
            throw ValidationError("duplicate set index: " + std::to_string(j));
        seen_set[static_cast<size_t>(j)] = 1;
    }
    std::vector<char> covered(static_cast<size_t>(inst.item_count), 0);
    for (int j : chosen)
        for (int i : inst.sets[static_cast<size_t>(j)])
            covered[static_cast<size_t>(i)] = 1;
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

// Reduction rules applied to completion, Rule 1 before Rule 2, lowest
// applicable index first:
//   Rule 1: an item lying in exactly one set forces that set into every
//           cover; drop the set and every item it covers.
//   Rule 2: a set left with at most one uncovered item is never needed
//           (Rule 1 not applying means a one-item set is redundant); drop it.
// `forced`, `item_map` and `set_map` refer to original indices; the residual
// instance is renumbered in ascending original order.
struct NormalizedInstance {
    SetCoverInstance instance;   // residual, renumbered
    std::vector<int> forced;     // original set indices in every optimal cover
    std::vector<int> item_map;   // residual item -> original item
    std::vector<int> set_map;    // residual set -> original set

    bool fully_solved() const { return instance.item_count == 0; }
};

inline NormalizedInstance normalize(const SetCoverInstance& inst) {
    if (!covers_all_items(inst))
        throw ValidationError("some item is not covered by any set");

    std::vector<char> item_alive(static_cast<size_t>(inst.item_count), 1);
    std::vector<char> set_alive(static_cast<size_t>(inst.set_count()), 1);
    std::vector<int> forced;

    auto residual_size = [&](int j) {
        int n = 0;
        for (int i : inst.sets[static_cast<size_t>(j)])
            if (item_alive[static_cast<size_t>(i)]) ++n;
        return n;
    };

    for (;;) {
        // Rule 1 on the lowest live item with exactly one live set.
        int lone_item = -1;
        int lone_set = -1;
        for (int i = 0; i < inst.item_count && lone_item == -1; ++i) {
            if (!item_alive[static_cast<size_t>(i)]) continue;
            int holder = -1;
            int count = 0;
            for (int j = 0; j < inst.set_count(); ++j) {
                if (!set_alive[static_cast<size_t>(j)]) continue;
                const auto& s = inst.sets[static_cast<size_t>(j)];
                if (std::binary_search(s.begin(), s.end(), i)) {
                    holder = j;
                    if (++count > 1) break;
                }
            }
            if (count == 1) {
                lone_item = i;
                lone_set = holder;
            }
        }
        if (lone_item != -1) {
            forced.push_back(lone_set);
            set_alive[static_cast<size_t>(lone_set)] = 0;
            for (int i : inst.sets[static_cast<size_t>(lone_set)])
                item_alive[static_cast<size_t>(i)] = 0;
            continue;
        }

        // Rule 2 on the lowest live set with at most one live item.
        int small_set = -1;
        for (int j = 0; j < inst.set_count(); ++j)
            if (set_alive[static_cast<size_t>(j)] && residual_size(j) <= 1) {
                small_set = j;
                break;
            }
        if (small_set != -1) {
            set_alive[static_cast<size_t>(small_set)] = 0;
            continue;
        }
        break;
    }

    NormalizedInstance out;
    out.forced = std::move(forced);
    std::sort(out.forced.begin(), out.forced.end());

    std::vector<int> item_new(static_cast<size_t>(inst.item_count), -1);
    for (int i = 0; i < inst.item_count; ++i)
        if (item_alive[static_cast<size_t>(i)]) {
            item_new[static_cast<size_t>(i)] = static_cast<int>(out.item_map.size());
            out.item_map.push_back(i);
        }
    std::vector<std::vector<int>> new_sets;
    std::vector<std::string> new_names;
    for (int j = 0; j < inst.set_count(); ++j) {
        if (!set_alive[static_cast<size_t>(j)]) continue;
        out.set_map.push_back(j);
        std::vector<int> s;
        for (int i : inst.sets[static_cast<size_t>(j)])
            if (item_alive[static_cast<size_t>(i)])
                s.push_back(item_new[static_cast<size_t>(i)]);
        new_sets.push_back(std::move(s));
        new_names.push_back(inst.set_name(j));
    }
    out.instance = make_instance(static_cast<int>(out.item_map.size()),
                                 std::move(new_sets), std::move(new_names));
    return out;
}

// Lexicographically least minimum cover, by exhaustive search over subsets in
// ascending cardinality then lex order. Exponential in the set count; meant
// for small instances. Throws when no cover exists.
inline std::vector<int> exact_min_cover(const SetCoverInstance& inst) {
    if (!covers_all_items(inst))
        throw ValidationError("some item is not covered by any set");
    const int h = inst.set_count();
    std::vector<boost::dynamic_bitset<>> masks;
    masks.reserve(static_cast<size_t>(h));
    for (const auto& s : inst.sets) {
        boost::dynamic_bitset<> m(static_cast<size_t>(inst.item_count));
        for (int i : s) m.set(static_cast<size_t>(i));
        masks.push_back(std::move(m));
    }
    const boost::dynamic_bitset<> nothing(static_cast<size_t>(inst.item_count));
    if (nothing.all()) return {};  // no items, empty cover

    std::vector<int> chosen;
    // Depth-first over set indices in ascending order, exactly `want` picks.
    auto dfs = [&](auto&& self, int next, int want,
                   const boost::dynamic_bitset<>& covered) -> bool {
        if (covered.all()) return true;
        if (want == 0) return false;
        for (int j = next; j <= h - want; ++j) {
            chosen.push_back(j);
            if (self(self, j + 1, want - 1, covered | masks[static_cast<size_t>(j)]))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= h; ++size) {
        chosen.clear();
        if (dfs(dfs, 0, size, nothing)) return chosen;
    }
    throw Error("cover search failed on a coverable instance");
}

// Classic greedy: repeatedly take the set covering the most uncovered items,
// lowest index on ties. Result sorted ascending. Throws when no cover exists.
inline std::vector<int> greedy_cover(const SetCoverInstance& inst) {
    if (!covers_all_items(inst))
        throw ValidationError("some item is not covered by any set");
    std::vector<char> covered(static_cast<size_t>(inst.item_count), 0);
    size_t missing = static_cast<size_t>(inst.item_count);
    std::vector<char> used(static_cast<size_t>(inst.set_count()), 0);
    std::vector<int> chosen;
    while (missing > 0) {
        int best = -1;
        int best_gain = -1;
        for (int j = 0; j < inst.set_count(); ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            int gain = 0;
            for (int i : inst.sets[static_cast<size_t>(j)])
                if (!covered[static_cast<size_t>(i)]) ++gain;
            if (gain > best_gain) {
                best = j;
                best_gain = gain;
            }
        }
        if (best == -1 || best_gain == 0)
            throw Error("greedy stalled on a coverable instance");
        used[static_cast<size_t>(best)] = 1;
        chosen.push_back(best);
        for (int i : inst.sets[static_cast<size_t>(best)]) {
            if (!covered[static_cast<size_t>(i)]) {
                covered[static_cast<size_t>(i)] = 1;
                --missing;
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// --- Instance text format ----------------------------------------------------
//
// Header line "eta h" (item count, set count), then h lines of item ids. A
// blank line is an empty set. '#' comment lines are ignored.

inline SetCoverInstance read_instance(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out_line) {
        while (std::getline(in, out_line))
            if (!detail::is_comment(out_line)) return true;
        return false;
    };

    if (!next_line(line)) throw ParseError("missing header line");
    // Header must be non-blank; blank lines before it are not meaningful sets.
    while (detail::is_blank(line))
        if (!next_line(line)) throw ParseError("missing header line");

    int eta = 0;
    int h = 0;
    {
        std::istringstream ss(line);
        if (!(ss >> eta >> h)) throw ParseError("bad header, expected \"eta h\"");
        std::string rest;
        if (ss >> rest) throw ParseError("trailing content in header");
    }
    if (eta < 0 || h < 0) throw ParseError("negative counts in header");

    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<size_t>(h));
    for (int j = 0; j < h; ++j) {
        if (!next_line(line)) throw ParseError("expected " + std::to_string(h) +
                                               " set lines, got " + std::to_string(j));
        std::vector<int> s;
        std::istringstream ss(line);
        int item = 0;
        while (ss >> item) s.push_back(item);
        if (!ss.eof()) throw ParseError("bad item id in set line " + std::to_string(j + 1));
        sets.push_back(std::move(s));
    }
    while (std::getline(in, line))
        if (!detail::is_comment(line) && !detail::is_blank(line))
            throw ParseError("trailing content after last set");
    return make_instance(eta, std::move(sets));
}

inline void write_instance(const SetCoverInstance& inst, std::ostream& out) {
    out << inst.item_count << ' ' << inst.set_count() << '\n';
    for (const auto& s : inst.sets) {
        for (size_t i = 0; i < s.size(); ++i) {
            if (i > 0) out << ' ';
            out << s[i];
        }
        out << '\n';
    }
}

}  // namespace megset
