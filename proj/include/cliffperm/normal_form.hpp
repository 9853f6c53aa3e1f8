#pragma once
//
// Basic gates A-E, the L/M level grammar, normal-form synthesis, and the
// rewriting-rule verification suite.
//
// A normal form on n qubits is the circuit product
//
//     L(n) M(n) L(n-1) M(n-1) ... L(1) M(1)
//
// where the level-k blocks act on qubits 1..k only:
//
//     L(k): an A gate on qubit ell (the "layer", 1 <= ell <= k), B gates on
//           the pairs (ell-1, ell), (ell-2, ell-1), ..., (1, 2), and a C gate
//           on qubit 1;
//     M(k): D gates on the pairs (1, 2), (2, 3), ..., (k-1, k) and an E gate
//           on qubit k.
//
// Projective scalars are dropped throughout, so the parameter tuple of a
// normal form determines a tableau and every tableau has exactly one such
// tuple.  Synthesis recovers the tuple level by level: the level-k block of f
// is determined by where the inverse tableau of f sends X_k and Z_k (see
// level_table below), because everything below level k acts trivially on
// qubit k.

#include <cassert>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orders.hpp"
#include "report.hpp"
#include "tableau.hpp"
#include "word.hpp"

namespace cliffperm {

enum class GateFamily { A, B, C, D, E };

// Number of variants in each family (A1-A3, B1-B4, C1-C2, D1-D4, E1-E4).
inline int family_size(GateFamily family) {
    switch (family) {
        case GateFamily::A: return 3;
        case GateFamily::B: return 4;
        case GateFamily::C: return 2;
        case GateFamily::D: return 4;
        case GateFamily::E: return 4;
    }
    return 0;
}

inline char family_letter(GateFamily family) {
    switch (family) {
        case GateFamily::A: return 'A';
        case GateFamily::B: return 'B';
        case GateFamily::C: return 'C';
        case GateFamily::D: return 'D';
        case GateFamily::E: return 'E';
    }
    return '?';
}

// Defining word of a basic gate embedded on n wires with its top wire at
// `pos`.  A, C and E act on qubit `pos` alone; B and D act on the adjacent
// pair (pos, pos+1).  Within one time step gates on distinct wires commute,
// so the emission order inside a step is immaterial.
inline Word basic_gate_word(GateFamily family, int index, int pos, int n) {
    detail::require_qubit_count(n);
    if (index < 1 || index > family_size(family))
        throw std::invalid_argument(std::string("basic gate index out of range for family ") +
                                    family_letter(family));
    const int a = pos;
    const int b = pos + 1;
    const bool pair = (family == GateFamily::B || family == GateFamily::D);
    detail::require_qubit_index(n, a);
    if (pair) detail::require_qubit_index(n, b);

    Word w(n);
    switch (family) {
        case GateFamily::A:
            if (index == 2) w.h(a);
            if (index == 3) w.h(a).s(a).h(a);
            break;
        case GateFamily::B:
            switch (index) {
                case 1: w.h(b).cz(a, b).h(a).h(b).cz(a, b).h(a).h(b).cz(a, b); break;
                case 2: w.cz(a, b).h(a).h(b).cz(a, b); break;
                case 3: w.h(a).s(a).cz(a, b).h(a).h(b).cz(a, b); break;
                case 4: w.h(a).cz(a, b).h(a).h(b).cz(a, b); break;
            }
            break;
        case GateFamily::C:
            if (index == 2) w.h(a).s(a).s(a).h(a);
            break;
        case GateFamily::D:
            switch (index) {
                case 1: w.cz(a, b).h(a).h(b).cz(a, b).h(a).h(b).cz(a, b).h(b); break;
                case 2: w.h(a).cz(a, b).h(a).h(b).cz(a, b).h(b); break;
                case 3: w.h(a).h(b).s(b).cz(a, b).h(a).h(b).cz(a, b).h(b); break;
                case 4: w.h(a).h(b).cz(a, b).h(a).h(b).cz(a, b).h(b); break;
            }
            break;
        case GateFamily::E:
            for (int r = 1; r < index; ++r) w.s(a);
            break;
    }
    return w;
}

inline CliffordTableau basic_gate_tableau(GateFamily family, int index, int pos, int n) {
    return word_eval(basic_gate_word(family, index, pos, n));
}

// Parameters of one level-k block pair L(k) M(k).
struct LevelParams {
    int k = 1;           // level; the block acts on qubits 1..k
    int ell = 1;         // layer: qubit carrying the A gate
    int a = 1;           // A index
    std::vector<int> b;  // B indices; b[i] sits on the pair (ell-1-i, ell-i)
    int c = 1;           // C index
    std::vector<int> d;  // D indices; d[i] sits on the pair (i+1, i+2)
    int e = 1;           // E index

    friend bool operator==(const LevelParams&, const LevelParams&) = default;
};

inline void validate_level(const LevelParams& p) {
    if (p.k < 1 || p.k > kMaxQubits) throw std::invalid_argument("level out of range");
    if (p.ell < 1 || p.ell > p.k) throw std::invalid_argument("layer out of range");
    if (static_cast<int>(p.b.size()) != p.ell - 1)
        throw std::invalid_argument("a layer-ell level needs exactly ell-1 B gates");
    if (static_cast<int>(p.d.size()) != p.k - 1)
        throw std::invalid_argument("a level-k block needs exactly k-1 D gates");
    auto in_range = [](int v, GateFamily f) { return v >= 1 && v <= family_size(f); };
    if (!in_range(p.a, GateFamily::A)) throw std::invalid_argument("A index out of range");
    for (int v : p.b)
        if (!in_range(v, GateFamily::B)) throw std::invalid_argument("B index out of range");
    if (!in_range(p.c, GateFamily::C)) throw std::invalid_argument("C index out of range");
    for (int v : p.d)
        if (!in_range(v, GateFamily::D)) throw std::invalid_argument("D index out of range");
    if (!in_range(p.e, GateFamily::E)) throw std::invalid_argument("E index out of range");
}

// Circuit word of L(k) M(k) embedded on n wires (k <= n).
inline Word level_word(const LevelParams& p, int n) {
    validate_level(p);
    if (p.k > n) throw std::invalid_argument("level exceeds qubit count");
    Word w(n);
    w.append(basic_gate_word(GateFamily::A, p.a, p.ell, n));
    for (int i = 0; i < static_cast<int>(p.b.size()); ++i)
        w.append(basic_gate_word(GateFamily::B, p.b[i], p.ell - 1 - i, n));
    w.append(basic_gate_word(GateFamily::C, p.c, 1, n));
    for (int i = 0; i < static_cast<int>(p.d.size()); ++i)
        w.append(basic_gate_word(GateFamily::D, p.d[i], i + 1, n));
    w.append(basic_gate_word(GateFamily::E, p.e, p.k, n));
    return w;
}

// A complete normal form: levels[0] is level n, levels.back() is level 1.
struct NormalForm {
    int n = 1;
    std::vector<LevelParams> levels;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

inline void validate_normal_form(const NormalForm& nf) {
    detail::require_qubit_count(nf.n);
    if (static_cast<int>(nf.levels.size()) != nf.n)
        throw std::invalid_argument("normal form needs one level block per qubit");
    for (int i = 0; i < nf.n; ++i) {
        if (nf.levels[i].k != nf.n - i)
            throw std::invalid_argument("normal form levels must descend from n to 1");
        validate_level(nf.levels[i]);
    }
}

inline Word nf_word(const NormalForm& nf) {
    validate_normal_form(nf);
    Word w(nf.n);
    for (const auto& level : nf.levels) w.append(level_word(level, nf.n));
    return w;
}

inline CliffordTableau nf_to_tableau(const NormalForm& nf) { return word_eval(nf_word(nf)); }

// Number of parameter tuples at one level: 2(4^k - 1) choices of L times 4^k
// choices of M.  The product over k = 1..n of these equals order_Cn(n).
inline std::uint64_t level_param_count(int k) {
    if (k < 1 || k > 15) throw std::invalid_argument("level out of range");
    const std::uint64_t four_k = std::uint64_t{1} << (2 * k);
    return 2 * (four_k - 1) * four_k;
}

// Calls fn(params) for every level-k parameter tuple, in a fixed
// lexicographic order (ell, a, b..., c, d..., e).
template <typename Fn>
inline void for_each_level_params(int k, Fn&& fn) {
    LevelParams p;
    p.k = k;
    for (p.ell = 1; p.ell <= k; ++p.ell) {
        p.b.assign(p.ell - 1, 1);
        p.d.assign(k - 1, 1);
        for (p.a = 1; p.a <= 3; ++p.a) {
            // odometer over the B indices
            std::fill(p.b.begin(), p.b.end(), 1);
            while (true) {
                for (p.c = 1; p.c <= 2; ++p.c) {
                    std::fill(p.d.begin(), p.d.end(), 1);
                    while (true) {
                        for (p.e = 1; p.e <= 4; ++p.e) fn(static_cast<const LevelParams&>(p));
                        int i = 0;
                        while (i < static_cast<int>(p.d.size()) && p.d[i] == 4) p.d[i++] = 1;
                        if (i == static_cast<int>(p.d.size())) break;
                        ++p.d[i];
                    }
                }
                int i = 0;
                while (i < static_cast<int>(p.b.size()) && p.b[i] == 4) p.b[i++] = 1;
                if (i == static_cast<int>(p.b.size())) break;
                ++p.b[i];
            }
        }
    }
}

namespace detail {

// Packed lookup key for a level-k block: the two rows (images of X_k and Z_k
// under the inverse block tableau), 2k+2 bits each.
inline std::uint64_t pack_level_key(const PhasedPauli& px, const PhasedPauli& pz, int k) {
    assert((px.x_bits() | px.z_bits() | pz.x_bits() | pz.z_bits()) >> k == 0);
    auto one = [&](const PhasedPauli& p) {
        return static_cast<std::uint64_t>(p.x_bits()) |
               (static_cast<std::uint64_t>(p.z_bits()) << k) |
               (static_cast<std::uint64_t>(p.delta()) << (2 * k));
    };
    return one(px) | (one(pz) << (2 * k + 2));
}

}  // namespace detail

// Lookup table for one level: maps the pair of rows
//
//     (image of X_k, image of Z_k) under inverse(L(k) M(k))
//
// to the unique parameter tuple realizing it.  Keying by the *inverse* rows
// is what makes per-level synthesis work: if f = block * rest with rest
// acting trivially on qubit k, then inverse(f) = inverse(rest) * inverse(block)
// sends X_k and Z_k exactly where inverse(block) does, so the key of f at
// level k depends on the block alone.  The table is exhaustive over all
// 2(4^k - 1) * 4^k tuples and collision-free; both facts are enforced here,
// and together they make every synthesis lookup hit.
class LevelTable {
  public:
    explicit LevelTable(int k) : k_(k) {
        if (k < 1 || k > 5) throw std::invalid_argument("level tables support levels 1..5 only");
        map_.reserve(level_param_count(k));
        for_each_level_params(k, [&](const LevelParams& p) {
            const CliffordTableau inv = word_eval(level_word(p, k)).inverse();
            const std::uint64_t key =
                detail::pack_level_key(inv.image_of_x(k), inv.image_of_z(k), k);
            if (!map_.emplace(key, p).second)
                throw std::logic_error("level table collision: basic gate transcription fault");
        });
        if (map_.size() != level_param_count(k))
            throw std::logic_error("level table is not exhaustive");
    }

    int level() const { return k_; }
    std::size_t size() const { return map_.size(); }

    const LevelParams* find(std::uint64_t key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

  private:
    int k_;
    std::unordered_map<std::uint64_t, LevelParams> map_;
};

// Shared per-level tables, built on first use.  Entries are immutable once
// built and the map never shrinks, so returned references stay valid.
inline const LevelTable& level_table(int k) {
    static std::mutex mu;
    static std::map<int, LevelTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, LevelTable(k)).first;
    return it->second;
}

// Unique normal form of a tableau, found level by level from the top.
inline NormalForm synthesize(const CliffordTableau& f) {
    const int n = f.num_qubits();
    NormalForm out;
    out.n = n;
    out.levels.reserve(n);
    CliffordTableau residual = f;
    for (int k = n; k >= 1; --k) {
        const LevelTable& table = level_table(k);
        const CliffordTableau inv = residual.inverse();
        const PhasedPauli& px = inv.image_of_x(k);
        const PhasedPauli& pz = inv.image_of_z(k);
        if ((px.x_bits() | px.z_bits() | pz.x_bits() | pz.z_bits()) >> k != 0)
            throw std::logic_error("synthesize: residual leaks above its level");
        const LevelParams* found =
            table.find(detail::pack_level_key(px, pz, k));
        if (found == nullptr) throw std::logic_error("synthesize: level lookup missed");
        out.levels.push_back(*found);
        const CliffordTableau block = word_eval(level_word(*found, n));
        residual = compose(block.inverse(), residual);
        if (residual.image_of_x(k) != PhasedPauli::x_op(n, k) ||
            residual.image_of_z(k) != PhasedPauli::z_op(n, k))
            throw std::logic_error("synthesize: stripped residual still acts on its level");
    }
    if (!residual.is_identity())
        throw std::logic_error("synthesize: residual did not reduce to the identity");
    return out;
}

// Text form, one level per line:  "L3: l=2 A1 B[1] C2 | M3: D[3,4] E2"
// (the B list is omitted when the layer is 1, the D list at level 1).
inline std::string nf_str(const NormalForm& nf) {
    validate_normal_form(nf);
    std::string out;
    for (const auto& p : nf.levels) {
        if (!out.empty()) out += '\n';
        out += "L" + std::to_string(p.k) + ": l=" + std::to_string(p.ell) +
               " A" + std::to_string(p.a);
        if (!p.b.empty()) {
            out += " B[";
            for (std::size_t i = 0; i < p.b.size(); ++i)
                out += (i ? "," : "") + std::to_string(p.b[i]);
            out += "]";
        }
        out += " C" + std::to_string(p.c) + " | M" + std::to_string(p.k) + ":";
        if (!p.d.empty()) {
            out += " D[";
            for (std::size_t i = 0; i < p.d.size(); ++i)
                out += (i ? "," : "") + std::to_string(p.d[i]);
            out += "]";
        }
        out += " E" + std::to_string(p.e);
    }
    return out;
}

inline NormalForm nf_parse(const std::string& text) {
    // Tokenize: separators and list punctuation all count as blanks.
    std::vector<std::vector<std::string>> lines;
    {
        std::vector<std::string> current;
        std::string token;
        auto flush_token = [&]() {
            if (!token.empty()) {
                current.push_back(token);
                token.clear();
            }
        };
        for (char ch : text + "\n") {
            if (ch == '\n') {
                flush_token();
                if (!current.empty()) lines.push_back(std::move(current));
                current.clear();
            } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ':' || ch == '|' ||
                       ch == ',' || ch == '[' || ch == ']') {
                flush_token();
            } else {
                token += ch;
            }
        }
    }
    if (lines.empty()) throw std::invalid_argument("empty normal form text");

    auto tagged_int = [](const std::string& tok, const std::string& tag) {
        if (tok.size() <= tag.size() || tok.compare(0, tag.size(), tag) != 0)
            throw std::invalid_argument("expected '" + tag + "<int>', got '" + tok + "'");
        std::size_t pos = tag.size();
        int value = 0;
        for (; pos < tok.size(); ++pos) {
            if (tok[pos] < '0' || tok[pos] > '9')
                throw std::invalid_argument("expected '" + tag + "<int>', got '" + tok + "'");
            value = value * 10 + (tok[pos] - '0');
        }
        return value;
    };
    auto is_plain_int = [](const std::string& tok) {
        for (char c : tok)
            if (c < '0' || c > '9') return false;
        return !tok.empty();
    };

    NormalForm nf;
    for (const auto& toks : lines) {
        LevelParams p;
        std::size_t i = 0;
        auto need = [&]() -> const std::string& {
            if (i >= toks.size()) throw std::invalid_argument("truncated normal form line");
            return toks[i];
        };
        p.k = tagged_int(need(), "L");
        ++i;
        p.ell = tagged_int(need(), "l=");
        ++i;
        p.a = tagged_int(need(), "A");
        ++i;
        if (need() == "B") {
            ++i;
            while (i < toks.size() && is_plain_int(toks[i])) p.b.push_back(std::stoi(toks[i++]));
        }
        p.c = tagged_int(need(), "C");
        ++i;
        if (tagged_int(need(), "M") != p.k)
            throw std::invalid_argument("level mismatch between L and M tags");
        ++i;
        if (i < toks.size() && toks[i] == "D") {
            ++i;
            while (i < toks.size() && is_plain_int(toks[i])) p.d.push_back(std::stoi(toks[i++]));
        }
        p.e = tagged_int(need(), "E");
        ++i;
        if (i != toks.size()) throw std::invalid_argument("trailing tokens in normal form line");
        nf.levels.push_back(std::move(p));
    }
    nf.n = nf.levels.front().k;
    validate_normal_form(nf);
    return nf;
}

// ---------------------------------------------------------------------------
// Rewriting-rule verification.
//
// The identities below are the commutation rules that push an S gate (or one
// of its conjugates S^2, HSH, HS^2H) from the left of a basic gate to its
// right.  They justify the centralizer structure theorems; here each one is
// checked directly as a tableau equation on one, two, or three qubits.
// ---------------------------------------------------------------------------

namespace detail {

struct RuleChecker {
    Report* rep;

    // words on two wires
    static Word w2() { return Word(2); }
    static Word gate2(GateFamily f, int idx, int pos = 1) { return basic_gate_word(f, idx, pos, 2); }
    // common one-wire tails on two qubits
    static Word ss(int q) { return Word(2).s(q).s(q); }
    static Word hssh(int q) { return Word(2).h(q).s(q).s(q).h(q); }
    static Word hsh(int q) { return Word(2).h(q).s(q).h(q); }
    static Word sgl(int q) { return Word(2).s(q); }

    void check(const std::string& name, const Word& lhs, const Word& rhs) {
        const bool pass = word_eval(lhs) == word_eval(rhs);
        rep->add(name, pass, pass ? "sides equal" : "sides differ", "sides equal");
    }
};

}  // namespace detail

inline Report verify_rewrite_rules() {
    Report rep;
    detail::RuleChecker rc{&rep};
    using GF = GateFamily;
    auto cat = [](std::initializer_list<Word> parts) {
        Word out = *parts.begin();
        bool first = true;
        for (const Word& p : parts) {
            if (first) {
                first = false;
                continue;
            }
            out.append(p);
        }
        return out;
    };
    const Word none = Word(2);

    // --- pushing S^2 through a B gate (S^2 enters on the top wire) ---
    {
        auto B = [&](int i) { return detail::RuleChecker::gate2(GF::B, i); };
        const Word u2 = cat({rc.hssh(2), rc.ss(2)});  // h2 s2^2 h2 s2^2
        rc.check("ss-B1", cat({rc.ss(1), B(1)}), cat({B(1), rc.hssh(2)}));
        rc.check("ss-B2", cat({rc.ss(1), B(2)}), cat({B(2), rc.hssh(1), rc.ss(2)}));
        rc.check("ss-B3", cat({rc.ss(1), B(3)}), cat({B(3), rc.hssh(1), u2}));
        rc.check("ss-B4", cat({rc.ss(1), B(4)}), cat({B(4), rc.hssh(2)}));
        rc.check("hssh-B1", cat({rc.hssh(1), B(1)}), cat({B(1), rc.ss(2)}));
        rc.check("hssh-B2", cat({rc.hssh(1), B(2)}), cat({B(2), rc.hssh(2)}));
        rc.check("hssh-B3", cat({rc.hssh(1), B(3)}), cat({B(3), rc.hssh(1), rc.ss(2)}));
        rc.check("hssh-B4", cat({rc.hssh(1), B(4)}), cat({B(4), rc.hssh(1), rc.ss(2)}));
    }

    // --- pushing S^2 through a D gate (S^2 enters on the bottom wire) ---
    {
        auto D = [&](int i) { return detail::RuleChecker::gate2(GF::D, i); };
        const Word u1 = cat({rc.hssh(1), rc.ss(1)});  // h1 s1^2 h1 s1^2
        rc.check("ss-D1", cat({rc.ss(2), D(1)}), cat({D(1), rc.hssh(1)}));
        rc.check("ss-D2", cat({rc.ss(2), D(2)}), cat({D(2), rc.ss(1), rc.ss(2)}));
        rc.check("ss-D3", cat({rc.ss(2), D(3)}), cat({D(3), u1, rc.ss(2)}));
        rc.check("ss-D4", cat({rc.ss(2), D(4)}), cat({D(4), rc.hssh(1)}));
        rc.check("hssh-D1", cat({rc.hssh(2), D(1)}), cat({D(1), rc.ss(1)}));
        rc.check("hssh-D2", cat({rc.hssh(2), D(2)}), cat({D(2), rc.hssh(1)}));
        rc.check("hssh-D3", cat({rc.hssh(2), D(3)}), cat({D(3), rc.ss(1), rc.ss(2)}));
        rc.check("hssh-D4", cat({rc.hssh(2), D(4)}), cat({D(4), rc.ss(1), rc.ss(2)}));
    }

    // --- pushing S through a B gate ---
    {
        auto B = [&](int i) { return detail::RuleChecker::gate2(GF::B, i); };
        const Word s2_tail = Word(2).s(2).s(2).s(2).h(2).s(2);  // s2^3 h2 s2
        rc.check("s-B1", cat({rc.sgl(1), B(1)}), cat({B(1), rc.hsh(2)}));
        rc.check("s-B2", cat({rc.sgl(1), B(2)}), cat({B(3), rc.hssh(1), s2_tail}));
        rc.check("s-B3", cat({rc.sgl(1), B(3)}), cat({B(2), Word(2).s(2).h(2).s(2)}));
        rc.check("s-B4", cat({rc.sgl(1), B(4)}), cat({B(4), rc.hsh(2)}));
        rc.check("hsh-B1", cat({rc.hsh(1), B(1)}), cat({B(1), rc.sgl(2)}));
        rc.check("hsh-B2", cat({rc.hsh(1), B(2)}), cat({B(2), rc.hsh(2)}));
        rc.check("hsh-B3", cat({rc.hsh(1), B(3)}), cat({B(4), rc.hssh(1), rc.ss(2)}));
        rc.check("hsh-B4", cat({rc.hsh(1), B(4)}), cat({B(3), none}));
    }

    // --- pushing S through a D gate ---
    {
        auto D = [&](int i) { return detail::RuleChecker::gate2(GF::D, i); };
        const Word s1_tail = Word(2).s(1).s(1).s(1).h(1).s(1);  // s1^3 h1 s1
        rc.check("s-D1", cat({rc.sgl(2), D(1)}), cat({D(1), rc.hsh(1)}));
        rc.check("s-D2", cat({rc.sgl(2), D(2)}), cat({D(3), s1_tail, rc.ss(2)}));
        rc.check("s-D3", cat({rc.sgl(2), D(3)}), cat({D(2), Word(2).s(1).h(1).s(1)}));
        rc.check("s-D4", cat({rc.sgl(2), D(4)}), cat({D(4), rc.hsh(1)}));
        rc.check("hsh-D1", cat({rc.hsh(2), D(1)}), cat({D(1), rc.sgl(1)}));
        rc.check("hsh-D2", cat({rc.hsh(2), D(2)}), cat({D(2), rc.hsh(1)}));
        rc.check("hsh-D3", cat({rc.hsh(2), D(3)}), cat({D(4), rc.ss(1), rc.ss(2)}));
        rc.check("hsh-D4", cat({rc.hsh(2), D(4)}), cat({D(3), none}));
    }

    // --- conditions on the top gates B C D of a block that let S^2 / S pass
    //     through unchanged (B in {B1, B4}) ---
    for (int bi : {1, 4}) {
        for (int ci : {1, 2}) {
            const Word bcd1 = cat({detail::RuleChecker::gate2(GF::B, bi),
                                   detail::RuleChecker::gate2(GF::C, ci),
                                   detail::RuleChecker::gate2(GF::D, 1)});
            const Word bcd2 = cat({detail::RuleChecker::gate2(GF::B, bi),
                                   detail::RuleChecker::gate2(GF::C, ci),
                                   detail::RuleChecker::gate2(GF::D, 2)});
            const std::string tag = "-B" + std::to_string(bi) + "-C" + std::to_string(ci);
            rc.check("cond-ss" + tag + "-D2", cat({rc.ss(1), bcd2}), cat({bcd2, rc.hssh(1)}));
            rc.check("cond-ss" + tag + "-D1", cat({rc.ss(1), bcd1}), cat({bcd1, rc.ss(1)}));
            rc.check("cond-s" + tag + "-D2", cat({rc.sgl(1), bcd2}), cat({bcd2, rc.hsh(1)}));
            rc.check("cond-s" + tag + "-D1", cat({rc.sgl(1), bcd1}), cat({bcd1, rc.sgl(1)}));
        }
    }

    // --- the matching conditions entered from the conjugated side
    //     (HS^2H / HSH on the top wire; B in {B1, B2}) ---
    for (int ci : {1, 2}) {
        auto bcd = [&](int bi, int di) {
            return cat({detail::RuleChecker::gate2(GF::B, bi),
                        detail::RuleChecker::gate2(GF::C, ci),
                        detail::RuleChecker::gate2(GF::D, di)});
        };
        const std::string c = "-C" + std::to_string(ci);
        rc.check("num-hssh-B1" + c + "-D1", cat({rc.hssh(1), bcd(1, 1)}), cat({bcd(1, 1), rc.hssh(1)}));
        rc.check("num-hssh-B1" + c + "-D4", cat({rc.hssh(1), bcd(1, 4)}), cat({bcd(1, 4), rc.hssh(1)}));
        rc.check("num-hssh-B2" + c + "-D1", cat({rc.hssh(1), bcd(2, 1)}), cat({bcd(2, 1), rc.ss(1)}));
        rc.check("num-hssh-B2" + c + "-D2", cat({rc.hssh(1), bcd(2, 2)}), cat({bcd(2, 2), rc.hssh(1)}));
        rc.check("num-hsh-B1" + c + "-D1", cat({rc.hsh(1), bcd(1, 1)}), cat({bcd(1, 1), rc.hsh(1)}));
        rc.check("num-hsh-B1" + c + "-D4", cat({rc.hsh(1), bcd(1, 4)}), cat({bcd(1, 4), rc.hsh(1)}));
        rc.check("num-hsh-B2" + c + "-D1", cat({rc.hsh(1), bcd(2, 1)}), cat({bcd(2, 1), rc.sgl(1)}));
        rc.check("num-hsh-B2" + c + "-D2", cat({rc.hsh(1), bcd(2, 2)}), cat({bcd(2, 2), rc.hsh(1)}));
        // the pair of conditions preserved by both S and HSH simultaneously
        rc.check("pair-s-B1" + c + "-D1", cat({rc.sgl(1), bcd(1, 1)}), cat({bcd(1, 1), rc.sgl(1)}));
        rc.check("pair-hsh-B1" + c + "-D1", cat({rc.hsh(1), bcd(1, 1)}), cat({bcd(1, 1), rc.hsh(1)}));
    }

    // --- layer-1 rules: S^2 meeting an A C (D) prefix ---
    {
        auto A = [&](int i) { return detail::RuleChecker::gate2(GF::A, i); };
        auto C = [&](int i) { return detail::RuleChecker::gate2(GF::C, i); };
        auto D = [&](int i) { return detail::RuleChecker::gate2(GF::D, i); };
        for (int ci : {1, 2})
            for (int di = 1; di <= 4; ++di) {
                const Word acd = cat({A(1), C(ci), D(di)});
                rc.check("layer1-ss-A1-C" + std::to_string(ci) + "-D" + std::to_string(di),
                         cat({rc.ss(1), acd}), cat({acd, rc.ss(2)}));
            }
        for (int di = 1; di <= 4; ++di) {
            const Word tail = (di == 1) ? rc.hssh(2) : cat({rc.hssh(1), rc.hssh(2)});
            rc.check("layer1-ss-A2-C1-D" + std::to_string(di),
                     cat({rc.ss(1), A(2), C(1), D(di)}), cat({A(2), C(1), D(di), tail}));
            rc.check("layer1-ss-A2-C2-D" + std::to_string(di),
                     cat({rc.ss(1), A(2), C(2), D(di)}), cat({A(2), C(1), D(di)}));
        }
        for (int t : {1, 2}) {
            const Word lhs = Word(1).s(1).s(1)
                                 .append(basic_gate_word(GF::A, 3, 1, 1))
                                 .append(basic_gate_word(GF::C, t, 1, 1));
            const Word rhs = basic_gate_word(GF::A, 3, 1, 1)
                                 .append(basic_gate_word(GF::C, 3 - t, 1, 1))
                                 .append(Word(1).s(1).s(1));
            const bool pass = word_eval(lhs) == word_eval(rhs);
            rep.add("layer1-ss-A3-C" + std::to_string(t), pass,
                    pass ? "sides equal" : "sides differ", "sides equal");
        }
    }

    // --- the worked three-qubit chain: pushing one S through a full normal
    //     form only retunes the D/E/C gates it touches ---
    {
        NormalForm before;
        before.n = 3;
        before.levels = {
            LevelParams{3, 2, 1, {1}, 2, {3, 4}, 2},
            LevelParams{2, 2, 1, {4}, 1, {2}, 4},
            LevelParams{1, 1, 1, {}, 2, {}, 3},
        };
        NormalForm after;
        after.n = 3;
        after.levels = {
            LevelParams{3, 2, 1, {1}, 2, {4, 4}, 4},
            LevelParams{2, 2, 1, {4}, 1, {2}, 4},
            LevelParams{1, 1, 1, {}, 1, {}, 3},
        };
        const CliffordTableau lhs = word_eval(Word(3).s(1).append(nf_word(before)));
        const CliffordTableau rhs = nf_to_tableau(after);
        rep.add("example-chain", lhs == rhs, lhs == rhs ? "sides equal" : "sides differ",
                "sides equal");
        bool params_match = false;
        std::string synthesized = "<synthesis failed>";
        try {
            const NormalForm result = synthesize(lhs);
            params_match = (result == after);
            synthesized = nf_str(result);
        } catch (const std::exception&) {
        }
        rep.add("example-params", params_match, synthesized, nf_str(after));
    }

    return rep;
}

}  // namespace cliffperm
