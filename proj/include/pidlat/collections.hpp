#pragma once

/*
 * Collections of source indices and antichains thereof.
 *
 * A collection is a subset of the source indices {1,...,n}, stored as an
 * n-bit mask (bit i-1 <=> source i).  An antichain is a set of pairwise
 * incomparable (under set inclusion) non-empty collections; antichains
 * label the nodes of the decomposition lattice.
 *
 * Text syntax: a collection prints as "{1,3}", an antichain as "{1}{2,3}"
 * (outer braces omitted).  Parsing also accepts the shell-friendly form
 * "1;2,3" with ';' between collections and ',' between indices.
 */

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pidlat/errors.hpp"

namespace pidlat {

struct Collection {
    std::uint32_t mask = 0;

    constexpr Collection() = default;
    constexpr explicit Collection(std::uint32_t m) : mask(m) {}

    // Build from 1-based source indices, e.g. Collection::of({1,3}).
    static Collection of(std::initializer_list<int> indices) {
        Collection c;
        for (int i : indices) {
            if (i < 1 || i > 32) throw std::invalid_argument("source index out of range: " + std::to_string(i));
            c.mask |= std::uint32_t{1} << (i - 1);
        }
        return c;
    }

    bool empty() const { return mask == 0; }
    int size() const { return std::popcount(mask); }
    bool contains(int index) const { return index >= 1 && (mask >> (index - 1) & 1u); }
    bool subset_of(Collection other) const { return (mask & other.mask) == mask; }
    bool superset_of(Collection other) const { return other.subset_of(*this); }

    // 1-based indices in ascending order.
    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t m = mask; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    friend bool operator==(Collection a, Collection b) { return a.mask == b.mask; }
    friend bool operator!=(Collection a, Collection b) { return a.mask != b.mask; }
};

// Canonical ordering used everywhere collections are listed: by size,
// then by mask value.
inline bool collection_less(Collection a, Collection b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask < b.mask;
}

inline Collection full_collection(int n) { return Collection{(std::uint32_t{1} << n) - 1}; }

inline Collection complement_collection(Collection a, int n) {
    return Collection{full_collection(n).mask & ~a.mask};
}

inline std::string to_string(Collection c) {
    std::string out = "{";
    bool first = true;
    for (int i : c.indices()) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

// First pair (a,b) with a strictly contained in b, if any.  Used to reject
// non-antichain input with a precise diagnostic.
inline std::optional<std::pair<Collection, Collection>>
find_nested_pair(const std::vector<Collection>& collections) {
    for (std::size_t i = 0; i < collections.size(); ++i)
        for (std::size_t j = 0; j < collections.size(); ++j) {
            if (i == j) continue;
            if (collections[i] != collections[j] && collections[i].subset_of(collections[j]))
                return std::make_pair(collections[i], collections[j]);
        }
    return std::nullopt;
}

class Antichain {
  public:
    // The empty antichain is representable; it only plays a role for the
    // weak-synergy measure and is never a lattice node.
    Antichain() = default;

    // Canonicalize an arbitrary tuple of collections: drop duplicates and
    // proper supersets, sort by (size, mask).  Mirrors the invariance
    // properties of redundancy (symmetry, idempotency, superset removal).
    static Antichain from_collections(std::vector<Collection> collections) {
        for (Collection c : collections)
            if (c.empty()) throw std::invalid_argument("antichain may not contain the empty collection");
        std::sort(collections.begin(), collections.end(), collection_less);
        collections.erase(std::unique(collections.begin(), collections.end()), collections.end());
        std::vector<Collection> minimal;
        for (Collection c : collections) {
            bool dominated = false;
            for (Collection m : minimal)
                if (m != c && m.subset_of(c)) { dominated = true; break; }
            if (!dominated) minimal.push_back(c);
        }
        Antichain out;
        out.collections_ = std::move(minimal);
        return out;
    }

    static Antichain of(std::initializer_list<std::initializer_list<int>> groups) {
        std::vector<Collection> cs;
        for (const auto& g : groups) cs.push_back(Collection::of(g));
        return from_collections(std::move(cs));
    }

    const std::vector<Collection>& collections() const& { return collections_; }
    // value overload so iterating collections() of a temporary stays valid
    std::vector<Collection> collections() && { return std::move(collections_); }
    bool empty() const { return collections_.empty(); }
    std::size_t size() const { return collections_.size(); }

    // Union of all member collections.
    Collection union_of() const {
        Collection u;
        for (Collection c : collections_) u.mask |= c.mask;
        return u;
    }

    int max_index() const {
        Collection u = union_of();
        return u.empty() ? 0 : 32 - std::countl_zero(u.mask);
    }

    friend bool operator==(const Antichain& a, const Antichain& b) {
        return a.collections_ == b.collections_;
    }
    friend bool operator!=(const Antichain& a, const Antichain& b) { return !(a == b); }

  private:
    std::vector<Collection> collections_; // sorted by (size, mask), pairwise incomparable
};

inline std::string to_string(const Antichain& alpha) {
    std::string out;
    for (Collection c : alpha.collections()) out += to_string(c);
    return out;
}

// Parse an antichain from either "1;2,3" or "{1}{2,3}".  Exact duplicates
// collapse (set semantics); a properly nested pair is an error naming the
// offending collections.  Indices must lie in [1, n].
inline Antichain parse_antichain(std::string_view text, int n) {
    auto parse_group = [&](std::string_view group) -> Collection {
        Collection c;
        std::size_t pos = 0;
        while (pos < group.size()) {
            std::size_t next = group.find(',', pos);
            if (next == std::string_view::npos) next = group.size();
            std::string tok(group.substr(pos, next - pos));
            tok.erase(std::remove_if(tok.begin(), tok.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), tok.end());
            if (tok.empty()) throw parse_error("empty index in antichain '" + std::string(text) + "'");
            std::size_t used = 0;
            int idx = 0;
            try {
                idx = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("bad source index '" + tok + "' in antichain");
            }
            if (used != tok.size()) throw parse_error("bad source index '" + tok + "' in antichain");
            if (idx < 1 || idx > n)
                throw parse_error("source index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
            c.mask |= std::uint32_t{1} << (idx - 1);
            pos = next + 1;
        }
        if (c.empty()) throw parse_error("empty collection in antichain '" + std::string(text) + "'");
        return c;
    };

    std::vector<Collection> groups;
    std::string_view rest = text;
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.remove_suffix(1);
    if (rest.empty()) throw parse_error("empty antichain");

    if (rest.front() == '{') {
        std::size_t pos = 0;
        while (pos < rest.size()) {
            if (rest[pos] != '{') throw parse_error("expected '{' in antichain '" + std::string(text) + "'");
            std::size_t close = rest.find('}', pos);
            if (close == std::string_view::npos) throw parse_error("unbalanced '{' in antichain '" + std::string(text) + "'");
            groups.push_back(parse_group(rest.substr(pos + 1, close - pos - 1)));
            pos = close + 1;
        }
    } else {
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t next = rest.find(';', pos);
            if (next == std::string_view::npos) next = rest.size();
            groups.push_back(parse_group(rest.substr(pos, next - pos)));
            if (next == rest.size()) break;
            pos = next + 1;
        }
    }

    std::sort(groups.begin(), groups.end(), collection_less);
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    if (auto nested = find_nested_pair(groups))
        throw parse_error("not an antichain: " + to_string(nested->first) + " is contained in " +
                          to_string(nested->second));
    return Antichain::from_collections(std::move(groups));
}

} // namespace pidlat
