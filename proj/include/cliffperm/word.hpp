#pragma once

// Words over the generating set {h_i, s_i, cz_{i:j}} and their tableau
// evaluation.  Words compose left to right: the first letter is the leftmost
// gate of the circuit, matching the right-action convention of
// CliffordTableau (see tableau.hpp).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cliffperm/tableau.hpp"

namespace cliffperm {

enum class Gate { H, S, CZ };

struct Letter {
    Gate gate;
    int a = 0;  // qubit (h, s) or first qubit (cz)
    int b = 0;  // second qubit (cz only)

    friend bool operator==(const Letter& l, const Letter& r) {
        return l.gate == r.gate && l.a == r.a && l.b == r.b;
    }
};

class Word {
  public:
    explicit Word(int n) : n_(n) { detail::require_qubit_count(n); }

    int num_qubits() const { return n_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    Word& h(int q) {
        detail::require_qubit_index(n_, q);
        letters_.push_back({Gate::H, q, 0});
        return *this;
    }

    Word& s(int q) {
        detail::require_qubit_index(n_, q);
        letters_.push_back({Gate::S, q, 0});
        return *this;
    }

    Word& cz(int a, int b) {
        detail::require_qubit_index(n_, a);
        detail::require_qubit_index(n_, b);
        if (a == b) throw std::invalid_argument("cz needs two distinct qubits");
        if (a > b) std::swap(a, b);  // the gate is symmetric
        letters_.push_back({Gate::CZ, a, b});
        return *this;
    }

    Word& append(const Word& other) {
        if (other.n_ != n_) throw std::invalid_argument("append: qubit counts differ");
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }

    // Formal inverse: letters reversed, with s^-1 spelled s s s (h and cz are
    // involutions).
    Word inverted() const {
        Word out(n_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
            switch (it->gate) {
                case Gate::S:
                    out.s(it->a).s(it->a).s(it->a);
                    break;
                case Gate::H:
                    out.h(it->a);
                    break;
                case Gate::CZ:
                    out.cz(it->a, it->b);
                    break;
            }
        }
        return out;
    }

    Word repeated(int times) const {
        if (times < 0) throw std::invalid_argument("repeated: negative count");
        Word out(n_);
        for (int i = 0; i < times; ++i) out.append(*this);
        return out;
    }

    // "h3 s1 cz1:2" — whitespace-separated letters.
    std::string str() const {
        std::string out;
        for (const auto& l : letters_) {
            if (!out.empty()) out += ' ';
            switch (l.gate) {
                case Gate::H: out += "h" + std::to_string(l.a); break;
                case Gate::S: out += "s" + std::to_string(l.a); break;
                case Gate::CZ: out += "cz" + std::to_string(l.a) + ":" + std::to_string(l.b); break;
            }
        }
        return out;
    }

    static Word parse(const std::string& text, int n) {
        Word out(n);
        std::size_t pos = 0;
        auto read_int = [&]() {
            if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
                throw std::invalid_argument("expected qubit number in word: " + text);
            int v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                v = v * 10 + (text[pos++] - '0');
            return v;
        };
        while (pos < text.size()) {
            if (text[pos] == ' ' || text[pos] == '\t') {
                ++pos;
                continue;
            }
            if (text.compare(pos, 2, "cz") == 0) {
                pos += 2;
                int a = read_int();
                if (pos >= text.size() || text[pos] != ':')
                    throw std::invalid_argument("cz letter needs \"a:b\" qubits: " + text);
                ++pos;
                int b = read_int();
                out.cz(a, b);
            } else if (text[pos] == 'h') {
                ++pos;
                out.h(read_int());
            } else if (text[pos] == 's') {
                ++pos;
                out.s(read_int());
            } else {
                throw std::invalid_argument(std::string("bad word letter at \"") +
                                            text.substr(pos) + "\"");
            }
        }
        return out;
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.n_ == b.n_ && a.letters_ == b.letters_;
    }

  private:
    int n_;
    std::vector<Letter> letters_;
};

// Parses a word file: one word per line, '#' starts a comment, blank lines
// are skipped.
inline std::vector<Word> parse_word_file(const std::string& text, int n) {
    std::vector<Word> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (!blank) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            out.push_back(Word::parse(line, n));
        }
        if (end == text.size()) break;
    }
    return out;
}

namespace detail {

// Primitive gate tableaus under P -> U^-1 P U (phases pinned by the matrix
// oracle; see the oracle tests):
//   h: X -> Z, Z -> X
//   s: X -> i^3 X Z, Z -> Z
//   cz(a,b): X_a -> X_a Z_b, X_b -> Z_a X_b, Z -> Z
inline CliffordTableau letter_tableau(const Letter& l, int n) {
    std::vector<PhasedPauli> xs, zs;
    for (int q = 1; q <= n; ++q) {
        xs.push_back(PhasedPauli::x_op(n, q));
        zs.push_back(PhasedPauli::z_op(n, q));
    }
    const auto bit = [](int q) { return std::uint32_t{1} << (q - 1); };
    switch (l.gate) {
        case Gate::H:
            xs[l.a - 1] = PhasedPauli::z_op(n, l.a);
            zs[l.a - 1] = PhasedPauli::x_op(n, l.a);
            break;
        case Gate::S:
            xs[l.a - 1] = PhasedPauli(n, bit(l.a), bit(l.a), 3);
            break;
        case Gate::CZ:
            xs[l.a - 1] = PhasedPauli(n, bit(l.a), bit(l.b), 0);
            xs[l.b - 1] = PhasedPauli(n, bit(l.b), bit(l.a), 0);
            break;
    }
    return CliffordTableau(n, std::move(xs), std::move(zs));
}

}  // namespace detail

inline CliffordTableau word_eval(const Word& w) {
    CliffordTableau t(w.num_qubits());
    for (const auto& l : w.letters())
        t = compose(t, detail::letter_tableau(l, w.num_qubits()));
    return t;
}

// ---------------------------------------------------------------------------
// Named gates.  The derived kinds are defined as words over {h, s, cz}:
//   z_i     = s_i^2
//   x_i     = h_i s_i^2 h_i
//   cx(c,t) = h_t cz(c,t) h_t
//   swap    = (cz(i,i+1) h_{i+1} h_i)^3 for adjacent pairs, conjugated
//             through a chain of adjacent swaps otherwise
//   M       = h2 cz(1,2) s2^2 h2 h1 s1^2 h2 cz(1,2) h2       (on qubits 1,2)
//   g       = h1 s1 h1 s1^3 h1                               (on qubit 1)
// ---------------------------------------------------------------------------

enum class GeneratorKind { H, S, CZ, Z, X, CX, Swap, M, GConj };

inline Word generator_word(GeneratorKind kind, const std::vector<int>& qubits, int n) {
    detail::require_qubit_count(n);
    Word w(n);
    auto need = [&](std::size_t k, const char* what) {
        if (qubits.size() != k)
            throw std::invalid_argument(std::string("generator ") + what + " expects " +
                                        std::to_string(k) + " qubit argument(s)");
    };
    switch (kind) {
        case GeneratorKind::H:
            need(1, "h");
            w.h(qubits[0]);
            break;
        case GeneratorKind::S:
            need(1, "s");
            w.s(qubits[0]);
            break;
        case GeneratorKind::CZ:
            need(2, "cz");
            w.cz(qubits[0], qubits[1]);
            break;
        case GeneratorKind::Z:
            need(1, "z");
            w.s(qubits[0]).s(qubits[0]);
            break;
        case GeneratorKind::X:
            need(1, "x");
            w.h(qubits[0]).s(qubits[0]).s(qubits[0]).h(qubits[0]);
            break;
        case GeneratorKind::CX: {
            need(2, "cx");
            int c = qubits[0], t = qubits[1];
            if (c == t) throw std::invalid_argument("cx needs two distinct qubits");
            w.h(t).cz(c, t).h(t);
            break;
        }
        case GeneratorKind::Swap: {
            need(2, "swap");
            int i = qubits[0], j = qubits[1];
            if (i == j) throw std::invalid_argument("swap needs two distinct qubits");
            if (i > j) std::swap(i, j);
            detail::require_qubit_index(n, j);
            auto adjacent = [&](int k) {  // (cz(k,k+1) h_{k+1} h_k)^3
                Word t(n);
                for (int r = 0; r < 3; ++r) t.cz(k, k + 1).h(k + 1).h(k);
                return t;
            };
            // (i,j) = t_i t_{i+1} ... t_{j-2} t_{j-1} t_{j-2} ... t_i with
            // t_k the adjacent transposition (k,k+1).
            for (int k = i; k < j - 1; ++k) w.append(adjacent(k));
            w.append(adjacent(j - 1));
            for (int k = j - 2; k >= i; --k) w.append(adjacent(k));
            break;
        }
        case GeneratorKind::M:
            need(0, "M");
            if (n < 2) throw std::invalid_argument("M needs at least 2 qubits");
            w.h(2).cz(1, 2).s(2).s(2).h(2).h(1).s(1).s(1).h(2).cz(1, 2).h(2);
            break;
        case GeneratorKind::GConj:
            need(0, "g");
            w.h(1).s(1).h(1).s(1).s(1).s(1).h(1);
            break;
    }
    return w;
}

inline CliffordTableau generator(GeneratorKind kind, const std::vector<int>& qubits, int n) {
    return word_eval(generator_word(kind, qubits, n));
}

// The standard generating set in its fixed order h_1..h_n, s_1..s_n,
// cz(1,2)..cz(n-1,n); the names double as the manifest labels.
inline std::vector<std::pair<std::string, Word>> standard_generators(int n) {
    detail::require_qubit_count(n);
    std::vector<std::pair<std::string, Word>> out;
    for (int i = 1; i <= n; ++i) out.emplace_back("h" + std::to_string(i), Word(n).h(i));
    for (int i = 1; i <= n; ++i) out.emplace_back("s" + std::to_string(i), Word(n).s(i));
    for (int i = 1; i < n; ++i)
        out.emplace_back("cz" + std::to_string(i) + ":" + std::to_string(i + 1),
                         Word(n).cz(i, i + 1));
    return out;
}

// Word realizing the wire relabeling of a permutation p of {1..n} (given as
// 1-based images, i -> images[i-1]) as a product of adjacent swaps.
inline Word relabeling_word(const std::vector<int>& images, int n) {
    detail::require_qubit_count(n);
    if (static_cast<int>(images.size()) != n)
        throw std::invalid_argument("relabeling_word: image list must have length n");
    std::vector<int> arr = images;
    {
        std::vector<bool> seen(n + 1, false);
        for (int v : arr) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("relabeling_word: not a permutation of 1..n");
            seen[v] = true;
        }
    }
    // Bubble-sorting the one-line notation left-multiplies by adjacent
    // transpositions; the word is their product in discovery order.
    Word w(n);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = 0; j + 1 < n; ++j) {
            if (arr[j] > arr[j + 1]) {
                std::swap(arr[j], arr[j + 1]);
                w.append(generator_word(GeneratorKind::Swap, {j + 1, j + 2}, n));
                moved = true;
            }
        }
    }
    return w;
}

// Breadth-first closure of the full group under right multiplication by the
// standard generators.  Deterministic; returns the elements sorted by
// canonical key.  Throws if the closure exceeds `guard` elements.
inline std::vector<CliffordTableau> enumerate_clifford_group(int n, std::size_t guard = 1000000) {
    std::vector<CliffordTableau> gens;
    for (const auto& [name, w] : standard_generators(n)) gens.push_back(word_eval(w));
    std::vector<CliffordTableau> elems{CliffordTableau::identity(n)};
    std::unordered_set<std::string> seen{elems[0].canonical_key()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const CliffordTableau cur = elems[head];  // copy: elems may reallocate
        for (const auto& g : gens) {
            CliffordTableau next = compose(cur, g);
            if (seen.insert(next.canonical_key()).second) {
                if (elems.size() + 1 > guard)
                    throw std::runtime_error("group closure exceeded guard of " +
                                             std::to_string(guard) + " elements");
                elems.push_back(std::move(next));
            }
        }
    }
    std::sort(elems.begin(), elems.end(),
              [](const CliffordTableau& a, const CliffordTableau& b) {
                  return a.canonical_key() < b.canonical_key();
              });
    return elems;
}

}  // namespace cliffperm
