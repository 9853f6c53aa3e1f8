#pragma once

// HLT-style Todd-Coxeter coset enumeration with coincidence handling.
//
// Words are sequences of signed letters: +k stands for generator k (1-based),
// -k for its formal inverse.  The enumerator reports the number of cosets of
// the given subgroup when the table closes; hitting the row cap is reported
// as an inconclusive CapExceeded result, never as an error, because coset
// enumeration need not terminate in general.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliffperm {

enum class TCStatus { Closed, CapExceeded };

struct TCResult {
    TCStatus status = TCStatus::CapExceeded;
    std::size_t num_cosets = 0;      // live cosets when status == Closed
    std::size_t cosets_defined = 0;  // rows ever allocated (diagnostic)
};

// Cancels adjacent inverse pairs until none remain.
inline std::vector<int> free_reduce(const std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int c : w) {
        if (!out.empty() && out.back() == -c)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

namespace detail {

// Coset table over the 2g-column alphabet (generator, inverse) with
// union-find coincidence processing.  Cosets are 1-based; entry 0 means
// undefined.
class CosetEnumerator {
  public:
    CosetEnumerator(int num_gens, std::size_t cap)
        : cols_(2 * num_gens), cap_(cap) {
        if (num_gens <= 0) throw std::invalid_argument("coset table needs at least one generator");
        if (cap_ < 1) throw std::invalid_argument("coset table cap must be positive");
        table_.assign(cols_, 0);  // dummy row 0
        parent_.push_back(0);
        new_coset();  // coset 1: the subgroup itself
    }

    std::size_t defined() const { return parent_.size() - 1; }
    std::size_t live() const { return live_; }

    bool alive(int a) const { return parent_[a] == a; }

    int rep(int a) {
        int r = a;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[a] != r) {
            const int next = parent_[a];
            parent_[a] = r;
            a = next;
        }
        return r;
    }

    // Scans relator/subgroup word w (column letters) from coset a, filling
    // undefined entries with fresh cosets.  Returns false iff the row cap
    // was hit.
    bool scan_and_fill(int a, const std::vector<int>& w) {
        if (w.empty()) return true;
        int f = a, b = a;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && at(f, w[i]) != 0) {
                f = at(f, w[i]);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j >= i && at(b, inv(w[j])) != 0) {
                b = at(b, inv(w[j]));
                --j;
            }
            if (j < i) {
                if (f != b) coincidence(f, b);
                return true;
            }
            if (j == i) {
                set(f, w[i], b);
                set(b, inv(w[i]), f);
                return true;
            }
            if (defined() >= cap_) return false;
            const int c = new_coset();
            set(f, w[i], c);
            set(c, inv(w[i]), f);
            // the forward scan resumes through the fresh coset
        }
    }

    // Merges the classes of a and b and drains the consequence queue,
    // rerouting every table reference that went through a dead coset.
    void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int y = queue[head];  // dead coset to strip
            for (int x = 0; x < cols_; ++x) {
                const int d = at(y, x);
                if (d == 0) continue;
                set(d, inv(x), 0);  // drop the back-reference to y
                const int mu = rep(y);
                const int nu = rep(d);
                if (at(mu, x) != 0)
                    merge(nu, at(mu, x), queue);
                else if (at(nu, inv(x)) != 0)
                    merge(mu, at(nu, inv(x)), queue);
                else {
                    set(mu, x, nu);
                    set(nu, inv(x), mu);
                }
            }
        }
    }

    int entry(int a, int x) const { return table_[static_cast<std::size_t>(a) * cols_ + x]; }
    int columns() const { return cols_; }

    static int inv(int x) { return x ^ 1; }

    // Signed letter (+-k) to column letter.
    static int column(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }

    int new_coset() {
        parent_.push_back(static_cast<int>(parent_.size()));
        table_.insert(table_.end(), cols_, 0);
        ++live_;
        return static_cast<int>(parent_.size()) - 1;
    }

    // Allocates a fresh coset as the image of a under column x (both table
    // directions are set, keeping the involution invariant).
    int define_at(int a, int x) {
        const int c = new_coset();
        set(a, x, c);
        set(c, inv(x), a);
        return c;
    }

  private:
    int at(int a, int x) const { return table_[static_cast<std::size_t>(a) * cols_ + x]; }
    void set(int a, int x, int v) { table_[static_cast<std::size_t>(a) * cols_ + x] = v; }

    void merge(int a, int b, std::vector<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_;
        queue.push_back(b);
    }

    int cols_;
    std::size_t cap_;
    std::vector<int> table_;   // flat rows of cols_ entries, row 0 unused
    std::vector<int> parent_;  // union-find; parent_[a] == a iff a is alive
    std::size_t live_ = 0;
};

}  // namespace detail

// Enumerates cosets of <subgroup> in the group on num_gens generators with
// the given relators (signed-letter words).  Deterministic HLT strategy:
// subgroup words are scanned at coset 1 first, then every live coset is
// scanned against every relator in order, filling gaps left to right.
inline TCResult coset_enumerate(int num_gens, const std::vector<std::vector<int>>& relators,
                                const std::vector<std::vector<int>>& subgroup,
                                std::size_t max_cosets = 1000000) {
    detail::CosetEnumerator table(num_gens, max_cosets);
    auto to_columns = [&](const std::vector<int>& w) {
        std::vector<int> cols;
        cols.reserve(w.size());
        for (int letter : free_reduce(w)) {
            if (letter == 0 || letter > num_gens || letter < -num_gens)
                throw std::invalid_argument("coset_enumerate: letter outside generator range");
            cols.push_back(detail::CosetEnumerator::column(letter));
        }
        return cols;
    };
    std::vector<std::vector<int>> rels;
    for (const auto& r : relators) {
        auto cols = to_columns(r);
        if (!cols.empty()) rels.push_back(std::move(cols));
    }
    TCResult res;
    for (const auto& w : subgroup) {
        if (!table.scan_and_fill(1, to_columns(w))) {
            res.cosets_defined = table.defined();
            return res;  // CapExceeded
        }
    }
    for (int a = 1; a <= static_cast<int>(table.defined()); ++a) {
        if (!table.alive(a)) continue;
        for (const auto& r : rels) {
            if (!table.scan_and_fill(a, r)) {
                res.cosets_defined = table.defined();
                return res;
            }
            if (!table.alive(a)) break;
        }
        if (!table.alive(a)) continue;
        for (int x = 0; x < table.columns(); ++x) {
            if (table.entry(a, x) != 0) continue;
            if (table.defined() >= max_cosets) {
                res.cosets_defined = table.defined();
                return res;
            }
            table.define_at(a, x);
        }
    }
    res.status = TCStatus::Closed;
    res.num_cosets = table.live();
    res.cosets_defined = table.defined();
    return res;
}

}  // namespace cliffperm
