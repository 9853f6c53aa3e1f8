#pragma once

// Base and strong generating set machinery (deterministic Schreier-Sims).
//
// The chain invariant is the textbook one: S[i] fixes base[0..i-1] pointwise
// and, once construction finishes, the stabilizer of base[i] inside <S[i]>
// equals <S[i+1]>.  Base points are chosen as the smallest point moved at
// each level (after any caller-forced prefix), Schreier generators are
// processed in orbit/queue order, and transversals are stored as Schreier
// vectors, so the structure is fully deterministic.  Degrees stay in the
// hundreds here, but group orders overflow 64 bits, hence exact big-integer
// order arithmetic.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffperm/orders.hpp"
#include "cliffperm/permutation.hpp"

namespace cliffperm {

class BSGS {
  public:
    // Builds the chain for <gens>; `forced_base` points are installed as the
    // base prefix (even when redundant) so pointwise stabilizers of those
    // points can be read off the chain.
    explicit BSGS(const std::vector<Permutation>& gens, const std::vector<int>& forced_base = {})
        : degree_(gens.empty() ? 1 : gens.front().degree()) {
        for (const auto& g : gens)
            if (g.degree() != degree_)
                throw std::invalid_argument("bsgs: generator degree mismatch");
        {
            std::vector<bool> seen(static_cast<std::size_t>(degree_) + 1, false);
            for (int p : forced_base) {
                if (p < 1 || p > degree_ || seen[p])
                    throw std::invalid_argument("bsgs: forced base points must be distinct points");
                seen[p] = true;
            }
        }
        std::vector<Permutation> start;
        for (const auto& g : gens)
            if (!g.is_identity()) start.push_back(g);
        if (start.empty() && forced_base.empty()) return;  // trivial group, empty chain
        levels_.reserve(forced_base.size() + 8);
        if (!forced_base.empty()) {
            for (std::size_t i = 0; i < forced_base.size(); ++i)
                levels_.push_back(Level{forced_base[i], {}, {}, {}, {}});
            levels_[0].gens = std::move(start);
        } else {
            levels_.push_back(Level{smallest_moved(start), std::move(start), {}, {}, {}});
        }
        build(0);
        // Forced levels past the last generator-bearing one still need their
        // (singleton) orbits for order products and sifting.
        for (auto& lv : levels_)
            if (lv.back_prev.empty()) recompute_orbit(lv);
    }

    int degree() const { return degree_; }

    std::vector<int> base() const {
        std::vector<int> b;
        b.reserve(levels_.size());
        for (const auto& lv : levels_) b.push_back(lv.base_point);
        return b;
    }

    std::size_t num_levels() const { return levels_.size(); }

    // Generators of the stabilizer of base[0..level-1]; level 0 gives the
    // whole group's strong generators at the top of the chain.
    const std::vector<Permutation>& level_generators(std::size_t level) const {
        if (level >= levels_.size())
            throw std::invalid_argument("bsgs: level out of range");
        return levels_[level].gens;
    }

    std::size_t orbit_size(std::size_t level) const {
        if (level >= levels_.size())
            throw std::invalid_argument("bsgs: level out of range");
        return levels_[level].orbit.size();
    }

    bigint order() const {
        bigint n = 1;
        for (const auto& lv : levels_) n *= static_cast<unsigned long>(lv.orbit.size());
        return n;
    }

    // Sifts p through the chain; p is a member iff the residue is trivial.
    bool contains(const Permutation& p) const {
        if (p.degree() != degree_) return false;
        Permutation h = p;
        for (const auto& lv : levels_) {
            const int beta = h.apply(lv.base_point);
            if (!lv.in_orbit(beta)) return false;
            h = compose(h, representative(lv, beta).inverse());
        }
        return h.is_identity();
    }

  private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;  // strong generators active at this level
        std::vector<int> orbit;         // discovery (queue) order; orbit[0] = base_point
        std::vector<int> back_gen;      // per point: index into gens mapping back_prev -> point
        std::vector<int> back_prev;     // per point: predecessor point; 0 when not in orbit

        bool in_orbit(int point) const {
            return !back_prev.empty() && back_prev[point] != 0;
        }
    };

    static int smallest_moved(const std::vector<Permutation>& gens) {
        int best = 0;
        for (const auto& g : gens)
            for (int p = 1; p <= g.degree(); ++p)
                if (g.apply(p) != p) {
                    if (best == 0 || p < best) best = p;
                    break;
                }
        if (best == 0) throw std::logic_error("bsgs: no moved point among non-identity generators");
        return best;
    }

    static int smallest_moved(const Permutation& g) {
        for (int p = 1; p <= g.degree(); ++p)
            if (g.apply(p) != p) return p;
        throw std::logic_error("bsgs: no moved point in identity permutation");
    }

    void recompute_orbit(Level& lv) const {
        lv.back_gen.assign(static_cast<std::size_t>(degree_) + 1, -1);
        lv.back_prev.assign(static_cast<std::size_t>(degree_) + 1, 0);
        lv.orbit.clear();
        lv.orbit.push_back(lv.base_point);
        lv.back_prev[lv.base_point] = lv.base_point;  // root marker
        for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
            const int p = lv.orbit[head];
            for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
                const int q = lv.gens[gi].apply(p);
                if (lv.back_prev[q] == 0) {
                    lv.back_prev[q] = p;
                    lv.back_gen[q] = static_cast<int>(gi);
                    lv.orbit.push_back(q);
                }
            }
        }
    }

    // Transversal element u with u(base_point) = point, rebuilt from the
    // Schreier vector.
    Permutation representative(const Level& lv, int point) const {
        std::vector<int> chain;  // generator indices along the path, deepest first
        int p = point;
        while (p != lv.base_point) {
            chain.push_back(lv.back_gen[p]);
            p = lv.back_prev[p];
        }
        Permutation u(degree_);
        for (std::size_t i = chain.size(); i-- > 0;) u = compose(u, lv.gens[chain[i]]);
        return u;
    }

    // Sift h through levels from..end; returns the residue and the level at
    // which sifting stopped (levels_.size() when h fixed every base point).
    std::pair<Permutation, std::size_t> sift_from(Permutation h, std::size_t from) const {
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const int beta = h.apply(levels_[i].base_point);
            if (!levels_[i].in_orbit(beta)) return {std::move(h), i};
            h = compose(h, representative(levels_[i], beta).inverse());
        }
        return {std::move(h), levels_.size()};
    }

    // Verifies level `level` against the deeper chain, adding sifted Schreier
    // generators where they drop; recurses so deeper levels are consistent
    // before this one finishes.
    void build(std::size_t level) {
        recompute_orbit(levels_[level]);
        // This level's generator list and orbit are fixed for the whole scan
        // (recursion only ever adds to deeper levels), but the levels_ vector
        // itself can reallocate, so access it by index and copy what is used
        // across a recursive call.
        for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
            const int p = levels_[level].orbit[oi];
            const Permutation up = representative(levels_[level], p);
            for (std::size_t gi = 0; gi < levels_[level].gens.size(); ++gi) {
                const Permutation g = levels_[level].gens[gi];
                const Permutation ug = representative(levels_[level], g.apply(p));
                Permutation schreier = compose(compose(up, g), ug.inverse());
                if (schreier.is_identity()) continue;
                auto [residue, drop] = sift_from(std::move(schreier), level + 1);
                if (residue.is_identity()) continue;
                if (drop == levels_.size())
                    levels_.push_back(Level{smallest_moved(residue), {}, {}, {}, {}});
                for (std::size_t j = level + 1; j <= drop; ++j)
                    levels_[j].gens.push_back(residue);
                for (std::size_t j = drop; j > level; --j) build(j);
            }
        }
    }

    int degree_ = 1;
    std::vector<Level> levels_;
};

inline BSGS schreier_sims(const std::vector<Permutation>& gens) { return BSGS(gens); }

inline bigint group_order(const BSGS& b) { return b.order(); }

inline bool membership(const Permutation& p, const BSGS& b) { return b.contains(p); }

// Generators of the pointwise stabilizer of `points`, read off a chain whose
// base starts with exactly those points.  An empty list generates the
// trivial group.
inline std::vector<Permutation> stabilizer(const std::vector<Permutation>& gens,
                                           const std::vector<int>& points) {
    BSGS chain(gens, points);
    if (points.size() >= chain.num_levels()) return {};
    return chain.level_generators(points.size());
}

// True iff g^-1 u g lies in <sub_gens> for every group generator g and
// subgroup generator u.
inline bool is_normal(const std::vector<Permutation>& sub_gens,
                      const std::vector<Permutation>& group_gens) {
    const BSGS sub(sub_gens);
    for (const auto& g : group_gens) {
        const Permutation gi = g.inverse();
        for (const auto& u : sub_gens)
            if (!sub.contains(compose(compose(gi, u), g))) return false;
    }
    return true;
}

}  // namespace cliffperm
