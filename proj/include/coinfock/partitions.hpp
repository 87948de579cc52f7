#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "coinfock/errors.hpp"

namespace coinfock {

using SiteId = int;

/// Bell number B(n); exact in 64 bits for n <= 25.
inline std::uint64_t bell(int n)
{
    static const std::vector<std::uint64_t> table = [] {
        // Bell triangle
        std::vector<std::uint64_t> out{1};
        std::vector<std::uint64_t> row{1};
        for (int n = 1; n <= 25; ++n) {
            std::vector<std::uint64_t> next(row.size() + 1);
            next[0] = row.back();
            for (std::size_t i = 0; i < row.size(); ++i) next[i + 1] = next[i] + row[i];
            out.push_back(next[0]);
            row = std::move(next);
        }
        return out;
    }();
    if (n < 0 || n >= static_cast<int>(table.size()))
        throw CardinalityTooLarge("bell: n out of tabulated range");
    return table[static_cast<std::size_t>(n)];
}

/// Strictly increasing finite set of naturals. The empty set is legal and
/// denotes the scalar sector.
class IndexSet {
public:
    IndexSet() = default;

    static IndexSet of(std::vector<int> elems)
    {
        std::sort(elems.begin(), elems.end());
        for (std::size_t i = 0; i + 1 < elems.size(); ++i)
            if (elems[i] == elems[i + 1]) throw BadParameter("IndexSet: duplicate element");
        for (int e : elems)
            if (e < 0) throw BadParameter("IndexSet: negative element");
        IndexSet s;
        s.elems_ = std::move(elems);
        return s;
    }

    /// {1, 2, ..., n}
    static IndexSet first_n(int n)
    {
        std::vector<int> e(static_cast<std::size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
        IndexSet s;
        s.elems_ = std::move(e);
        return s;
    }

    int size() const { return static_cast<int>(elems_.size()); }
    bool empty() const { return elems_.empty(); }
    const std::vector<int>& elements() const { return elems_; }
    int at(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    int least() const { return elems_.front(); }

    bool contains(int e) const
    {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }
    /// position of e within the set, -1 if absent
    int position_of(int e) const
    {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
        if (it == elems_.end() || *it != e) return -1;
        return static_cast<int>(it - elems_.begin());
    }
    bool subset_of(const IndexSet& other) const
    {
        return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elems_ == b.elems_; }
    friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.elems_ < b.elems_; }

private:
    std::vector<int> elems_;
};

/// Set partition of a ground IndexSet; blocks are pairwise disjoint, nonempty,
/// cover the ground set, and are kept sorted by least element.
class Partition {
public:
    Partition() = default;

    static Partition of(const IndexSet& ground, std::vector<IndexSet> blocks)
    {
        std::size_t total = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw BadParameter("Partition: empty block");
            if (!b.subset_of(ground)) throw BadParameter("Partition: block outside ground set");
            total += static_cast<std::size_t>(b.size());
        }
        if (static_cast<int>(total) != ground.size())
            throw BadParameter("Partition: blocks do not cover the ground set exactly");
        std::vector<int> seen;
        for (const auto& b : blocks)
            for (int e : b.elements()) seen.push_back(e);
        std::sort(seen.begin(), seen.end());
        if (seen != ground.elements()) throw BadParameter("Partition: blocks overlap");
        std::sort(blocks.begin(), blocks.end(),
                  [](const IndexSet& a, const IndexSet& b) { return a.least() < b.least(); });
        Partition p;
        p.ground_ = ground;
        p.blocks_ = std::move(blocks);
        return p;
    }

    /// all singletons
    static Partition finest(const IndexSet& ground)
    {
        std::vector<IndexSet> blocks;
        for (int e : ground.elements()) blocks.push_back(IndexSet::of({e}));
        return of(ground, std::move(blocks));
    }

    /// one block (empty partition for the empty ground set)
    static Partition coarsest(const IndexSet& ground)
    {
        if (ground.empty()) return of(ground, {});
        return of(ground, {ground});
    }

    const IndexSet& ground() const { return ground_; }
    const std::vector<IndexSet>& blocks() const { return blocks_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }

    /// restricted growth string over the ground set's positional order
    std::vector<int> rgs() const
    {
        std::vector<int> out(static_cast<std::size_t>(ground_.size()), -1);
        for (int j = 0; j < num_blocks(); ++j)
            for (int e : blocks_[static_cast<std::size_t>(j)].elements())
                out[static_cast<std::size_t>(ground_.position_of(e))] = j;
        return out;
    }

    int block_of(int element) const
    {
        for (int j = 0; j < num_blocks(); ++j)
            if (blocks_[static_cast<std::size_t>(j)].contains(element)) return j;
        throw BadParameter("Partition: element not in ground set");
    }

    friend bool operator==(const Partition& a, const Partition& b)
    {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b)
    {
        return a.rgs() < b.rgs();
    }

private:
    IndexSet ground_;
    std::vector<IndexSet> blocks_;
};

/// One point of X^N: a site per index of the domain.
class Config {
public:
    Config() = default;

    static Config of(const IndexSet& domain, std::vector<SiteId> sites)
    {
        if (static_cast<int>(sites.size()) != domain.size())
            throw BadParameter("Config: one site per domain index required");
        Config c;
        c.domain_ = domain;
        c.sites_ = std::move(sites);
        return c;
    }

    const IndexSet& domain() const { return domain_; }
    const std::vector<SiteId>& sites() const { return sites_; }
    SiteId site_of(int index) const
    {
        int p = domain_.position_of(index);
        if (p < 0) throw BadParameter("Config: index not in domain");
        return sites_[static_cast<std::size_t>(p)];
    }

    friend bool operator==(const Config& a, const Config& b)
    {
        return a.domain_ == b.domain_ && a.sites_ == b.sites_;
    }

private:
    IndexSet domain_;
    std::vector<SiteId> sites_;
};

/// Bijection of an IndexSet onto itself.
class Permutation {
public:
    static Permutation of(const IndexSet& domain, std::vector<int> images)
    {
        if (static_cast<int>(images.size()) != domain.size())
            throw NotABijection("Permutation: one image per domain element required");
        std::vector<int> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != domain.elements()) throw NotABijection("Permutation: not a bijection of the domain");
        Permutation p;
        p.domain_ = domain;
        p.images_ = std::move(images);
        return p;
    }

    static Permutation identity(const IndexSet& domain)
    {
        return of(domain, domain.elements());
    }

    const IndexSet& domain() const { return domain_; }
    int apply(int e) const
    {
        int p = domain_.position_of(e);
        if (p < 0) throw BadParameter("Permutation: element not in domain");
        return images_[static_cast<std::size_t>(p)];
    }

    Permutation inverse() const
    {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) {
            int p = domain_.position_of(images_[i]);
            inv[static_cast<std::size_t>(p)] = domain_.at(static_cast<int>(i));
        }
        return of(domain_, std::move(inv));
    }

    /// (a.compose(b))(e) = a(b(e))
    Permutation compose(const Permutation& b) const
    {
        if (domain_ != b.domain_) throw GroundMismatch("Permutation: domains differ");
        std::vector<int> im(images_.size());
        for (int i = 0; i < domain_.size(); ++i)
            im[static_cast<std::size_t>(i)] = apply(b.images_[static_cast<std::size_t>(i)]);
        return of(domain_, std::move(im));
    }

    friend bool operator==(const Permutation& a, const Permutation& b)
    {
        return a.domain_ == b.domain_ && a.images_ == b.images_;
    }

private:
    IndexSet domain_;
    std::vector<int> images_;
};

/// All partitions of N in lexicographic restricted-growth-string order.
/// Guarded at |N| <= 12 (Bell(12) = 4,213,597).
inline std::vector<Partition> enumerate_partitions(const IndexSet& ground)
{
    const int n = ground.size();
    if (n > 12) throw CardinalityTooLarge("enumerate_partitions: |N| > 12");
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition::of(ground, {}));
        return out;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&] {
        int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> raw(static_cast<std::size_t>(nb));
        for (int i = 0; i < n; ++i)
            raw[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(ground.at(i));
        std::vector<IndexSet> blocks;
        blocks.reserve(raw.size());
        for (auto& b : raw) blocks.push_back(IndexSet::of(std::move(b)));
        out.push_back(Partition::of(ground, std::move(blocks)));
    };
    // iterative lexicographic RGS enumeration
    while (true) {
        emit();
        int i = n - 1;
        for (; i > 0; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= mx) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

/// P1 <= P2 in refinement order: every block of P1 lies inside a block of P2
/// (equivalently C_{P2} is contained in C_{P1}).
inline bool refines_leq(const Partition& p1, const Partition& p2)
{
    if (p1.ground() != p2.ground()) throw GroundMismatch("refines_leq: ground sets differ");
    for (const auto& b : p1.blocks()) {
        bool inside = false;
        for (const auto& c : p2.blocks())
            if (b.subset_of(c)) { inside = true; break; }
        if (!inside) return false;
    }
    return true;
}

/// Least upper bound: transitive closure of the union of the block relations.
inline Partition join(const Partition& p1, const Partition& p2)
{
    if (p1.ground() != p2.ground()) throw GroundMismatch("join: ground sets differ");
    const auto& g = p1.ground();
    std::vector<int> parent(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (const Partition* p : {&p1, &p2})
        for (const auto& b : p->blocks())
            for (int i = 1; i < b.size(); ++i)
                unite(g.position_of(b.at(0)), g.position_of(b.at(i)));
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < g.size(); ++i) groups[find(i)].push_back(g.at(i));
    std::vector<IndexSet> blocks;
    for (auto& [root, elems] : groups) blocks.push_back(IndexSet::of(std::move(elems)));
    return Partition::of(g, std::move(blocks));
}

/// Coarsest partition Q with x in C_Q: blocks are the classes of equal sites.
inline Partition equality_pattern(const Config& x)
{
    std::map<SiteId, std::vector<int>> classes;
    for (int i = 0; i < x.domain().size(); ++i)
        classes[x.sites()[static_cast<std::size_t>(i)]].push_back(x.domain().at(i));
    std::vector<IndexSet> blocks;
    for (auto& [site, elems] : classes) blocks.push_back(IndexSet::of(std::move(elems)));
    return Partition::of(x.domain(), std::move(blocks));
}

/// The function 1^N_I evaluated by value pattern: 1 iff the indices sharing
/// the I-site form exactly the set I (pairs not meeting I are unconstrained).
inline int indicator_B(const IndexSet& I, const Config& x)
{
    if (I.empty() || !I.subset_of(x.domain())) throw NotASubset("indicator_B: I must be a nonempty subset of the domain");
    const SiteId v = x.site_of(I.least());
    std::vector<int> cls;
    for (int i = 0; i < x.domain().size(); ++i)
        if (x.sites()[static_cast<std::size_t>(i)] == v) cls.push_back(x.domain().at(i));
    return IndexSet::of(std::move(cls)) == I ? 1 : 0;
}

/// 1 iff x lies on the plane C_P.
inline int membership_C(const Partition& p, const Config& x)
{
    if (p.ground() != x.domain()) throw GroundMismatch("membership_C: ground sets differ");
    return refines_leq(p, equality_pattern(x)) ? 1 : 0;
}

/// Number of partitions P with x in C_P; equals the product of Bell numbers
/// over the blocks of the equality pattern.
inline std::uint64_t coincidence_weight(const Config& x)
{
    if (x.domain().empty()) throw EmptyDomain("coincidence_weight: empty domain");
    const Partition pattern = equality_pattern(x);
    std::uint64_t w = 1;
    for (const auto& b : pattern.blocks()) w *= bell(b.size());
    return w;
}

inline IndexSet act(const Permutation& sigma, const IndexSet& I)
{
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(I.size()));
    for (int e : I.elements()) im.push_back(sigma.apply(e));
    return IndexSet::of(std::move(im));
}

inline Partition act(const Permutation& sigma, const Partition& p)
{
    std::vector<IndexSet> blocks;
    blocks.reserve(p.blocks().size());
    for (const auto& b : p.blocks()) blocks.push_back(act(sigma, b));
    return Partition::of(act(sigma, p.ground()), std::move(blocks));
}

/// f_sigma(x) = x after relabeling indices: the new site at i is the old site
/// at sigma^{-1}(i).
inline Config act(const Permutation& sigma, const Config& x)
{
    if (sigma.domain() != x.domain()) throw GroundMismatch("act: permutation domain differs from config domain");
    Permutation inv = sigma.inverse();
    std::vector<SiteId> sites(static_cast<std::size_t>(x.domain().size()));
    for (int i = 0; i < x.domain().size(); ++i)
        sites[static_cast<std::size_t>(i)] = x.site_of(inv.apply(x.domain().at(i)));
    return Config::of(x.domain(), std::move(sites));
}

}  // namespace coinfock
