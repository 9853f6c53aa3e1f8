#pragma once

// The three finite presentations realized by the engine, as data.
//
// Kinds: the full projective Clifford group (Cn), the normalizer-type
// subgroup isomorphic to the centralizer of s_1^2 (INn), and its quotient by
// the projective Pauli group (INnModPn).  Generator symbols are h1..hn,
// s1..sn, cz1..cz{n-1} (czk acts on wires k,k+1) plus the order-two symbol g
// for the INn kinds; g evaluates to h1 s1 h1 s1^3 h1 in the tableau model.
// Relator words keep formal inverses (negative letters); free reduction is
// applied at evaluation and enumeration time, not at construction.
//
// The two INn kinds restate shared relator families under their own
// numbering and index ranges, which differ from the Cn list on purpose; each
// list is encoded exactly as stated, and verify_relators reports any
// instance that fails rather than reconciling the ranges.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffperm/report.hpp"
#include "cliffperm/tableau.hpp"
#include "cliffperm/todd_coxeter.hpp"
#include "cliffperm/word.hpp"

namespace cliffperm {

enum class PresentationKind { Cn, INn, INnModPn };

inline std::string presentation_kind_name(PresentationKind kind) {
    switch (kind) {
        case PresentationKind::Cn: return "Cn";
        case PresentationKind::INn: return "INn";
        case PresentationKind::INnModPn: return "INnModPn";
    }
    throw std::logic_error("unreachable presentation kind");
}

struct Presentation {
    PresentationKind kind = PresentationKind::Cn;
    int n = 0;                  // qubit count; 0 for presentations built from text
    bool extrapolated = false;  // true for the n = 1 variants, which the source
                                // theorems (stated for n >= 2) do not assert
    std::vector<std::string> symbols;
    std::vector<std::string> labels;            // one tag per relator, e.g. "R8[j=1]"
    std::vector<std::vector<int>> relators;     // signed letters over symbols (1-based)
};

namespace detail {

// Incremental relator builder over a fixed symbol list.
class RelatorBuilder {
  public:
    explicit RelatorBuilder(Presentation* p) : p_(p) {}

    int sym(const std::string& name) const {
        for (std::size_t i = 0; i < p_->symbols.size(); ++i)
            if (p_->symbols[i] == name) return static_cast<int>(i) + 1;
        throw std::logic_error("presentation builder: unknown symbol " + name);
    }

    using Rel = std::vector<int>;

    Rel h(int i, int exp = 1) const { return letter("h" + std::to_string(i), exp); }
    Rel s(int j, int exp = 1) const { return letter("s" + std::to_string(j), exp); }
    Rel cz(int k, int exp = 1) const { return letter("cz" + std::to_string(k), exp); }
    Rel g(int exp = 1) const { return letter("g", exp); }

    static Rel cat(std::initializer_list<Rel> parts) {
        Rel out;
        for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
        return out;
    }

    static Rel inv(const Rel& w) {
        Rel out;
        out.reserve(w.size());
        for (std::size_t i = w.size(); i-- > 0;) out.push_back(-w[i]);
        return out;
    }

    static Rel pw(const Rel& w, int k) {
        Rel out;
        out.reserve(w.size() * static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) out.insert(out.end(), w.begin(), w.end());
        return out;
    }

    // lhs = rhs, stored as the relator lhs * rhs^-1.
    void add_eq(std::string label, const Rel& lhs, const Rel& rhs) {
        p_->labels.push_back(std::move(label));
        p_->relators.push_back(cat({lhs, inv(rhs)}));
    }

    // w = 1.
    void add(std::string label, const Rel& w) {
        p_->labels.push_back(std::move(label));
        p_->relators.push_back(w);
    }

    void add_commute(std::string label, const Rel& a, const Rel& b) {
        add(std::move(label), cat({a, b, inv(a), inv(b)}));
    }

  private:
    Rel letter(const std::string& name, int exp) const {
        const int k = sym(name);
        Rel out;
        out.reserve(static_cast<std::size_t>(exp < 0 ? -exp : exp));
        for (int t = 0; t < (exp < 0 ? -exp : exp); ++t) out.push_back(exp < 0 ? -k : k);
        return out;
    }

    Presentation* p_;
};

inline std::string idx_tag(const char* var, int value) {
    return std::string("[") + var + "=" + std::to_string(value) + "]";
}

}  // namespace detail

// The presented group of the full projective Clifford group on n qubits
// (generators h_i, s_i and adjacent-wire cz_j).  Stated for n >= 2; the n = 1
// restriction to R1-R4 is an engine extrapolation and flagged as such.
inline Presentation builtin_presentation_Cn(int n) {
    if (n < 1) throw std::invalid_argument("presentation requires n >= 1");
    Presentation p;
    p.kind = PresentationKind::Cn;
    p.n = n;
    p.extrapolated = (n == 1);
    for (int i = 1; i <= n; ++i) p.symbols.push_back("h" + std::to_string(i));
    for (int i = 1; i <= n; ++i) p.symbols.push_back("s" + std::to_string(i));
    for (int k = 1; k < n; ++k) p.symbols.push_back("cz" + std::to_string(k));
    detail::RelatorBuilder b(&p);
    using R = detail::RelatorBuilder;
    for (int i = 1; i <= n; ++i) b.add("R1" + detail::idx_tag("h", i), b.h(i, 2));
    for (int i = 1; i <= n; ++i) b.add("R1" + detail::idx_tag("s", i), b.s(i, 4));
    for (int j = 1; j < n; ++j) b.add("R1" + detail::idx_tag("cz", j), b.cz(j, 2));
    for (int i = 1; i <= n; ++i)
        b.add("R2" + detail::idx_tag("i", i), R::pw(R::cat({b.s(i), b.h(i)}), 3));
    for (int i = 1; i <= n; ++i)
        b.add("R3" + detail::idx_tag("i", i),
              R::pw(R::cat({b.s(i, 3), b.h(i), b.s(i), b.h(i)}), 3));
    for (int i = 1; i <= n; ++i)
        b.add("R4" + detail::idx_tag("i", i),
              R::pw(R::cat({b.s(i, 2), b.h(i), b.s(i, 2), b.h(i)}), 2));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            b.add_commute("R5[h" + std::to_string(i) + ",h" + std::to_string(j) + "]", b.h(i),
                          b.h(j));
            b.add_commute("R5[s" + std::to_string(i) + ",s" + std::to_string(j) + "]", b.s(i),
                          b.s(j));
        }
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_commute("R5[cz" + std::to_string(i) + ",cz" + std::to_string(j) + "]", b.cz(i),
                          b.cz(j));
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= n; ++i)
            b.add_commute("R6[cz" + std::to_string(j) + ",s" + std::to_string(i) + "]", b.cz(j),
                          b.s(i));
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= n; ++i) {
            if (i == j || i == j + 1) continue;
            b.add_commute("R7[cz" + std::to_string(j) + ",h" + std::to_string(i) + "]", b.cz(j),
                          b.h(i));
        }
    for (int j = 1; j < n; ++j)
        b.add_eq("R8" + detail::idx_tag("j", j),
                 R::cat({b.h(j), b.s(j, 2), b.h(j), b.cz(j)}),
                 R::cat({b.cz(j), b.h(j), b.s(j + 1, 2), b.s(j, 2), b.h(j)}));
    for (int j = 1; j < n; ++j)
        b.add_eq("R9" + detail::idx_tag("j", j),
                 R::cat({b.h(j + 1), b.s(j + 1, 2), b.h(j + 1), b.cz(j)}),
                 R::cat({b.cz(j), b.h(j + 1), b.s(j + 1, 2), b.s(j, 2), b.h(j + 1)}));
    for (int j = 1; j < n; ++j)
        b.add_eq("R10" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j), b.cz(j)}),
                 R::cat({b.s(j), b.h(j), b.cz(j), b.s(j + 1), b.s(j), b.h(j), b.s(j)}));
    for (int j = 1; j < n; ++j)
        b.add_eq("R11" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.cz(j)}),
                 R::cat({b.s(j + 1), b.h(j + 1), b.cz(j), b.s(j + 1), b.s(j), b.h(j + 1),
                         b.s(j + 1)}));
    for (int j = 1; j <= n - 2; ++j)
        b.add_eq("R12" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j), b.h(j + 1), b.h(j),
                         b.cz(j)}),
                 R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 1), b.h(j),
                         b.cz(j), b.h(j + 1), b.h(j), b.cz(j + 1), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1)}));
    for (int j = 1; j <= n - 2; ++j)
        b.add("R13" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 1), b.h(j),
                            b.cz(j + 1)}),
                    3));
    for (int j = 1; j <= n - 2; ++j)
        b.add("R14" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 2),
                            b.h(j + 1), b.cz(j)}),
                    3));
    return p;
}

// The presented group isomorphic to the centralizer of s_1^2 (generators g,
// h_2..h_n, s_1..s_n, cz_1..cz_{n-1}).  Relation ranges follow the source
// statement, which restricts several families compared with the full-group
// list.  n = 1 collapses to <g, s1 | g^2, g s1 g = s1^3, s1^4>, an engine
// extrapolation.
inline Presentation builtin_presentation_INn(int n) {
    if (n < 1) throw std::invalid_argument("presentation requires n >= 1");
    Presentation p;
    p.kind = PresentationKind::INn;
    p.n = n;
    p.extrapolated = (n == 1);
    p.symbols.push_back("g");
    for (int i = 2; i <= n; ++i) p.symbols.push_back("h" + std::to_string(i));
    for (int j = 1; j <= n; ++j) p.symbols.push_back("s" + std::to_string(j));
    for (int k = 1; k < n; ++k) p.symbols.push_back("cz" + std::to_string(k));
    detail::RelatorBuilder b(&p);
    using R = detail::RelatorBuilder;
    b.add("Q1[g]", b.g(2));
    for (int i = 2; i <= n; ++i)
        b.add_eq("Q2" + detail::idx_tag("h", i), R::cat({b.g(), b.h(i), b.g()}), b.h(i));
    b.add_eq("Q3[s1]", R::cat({b.g(), b.s(1), b.g()}), b.s(1, 3));
    for (int j = 2; j <= n; ++j)
        b.add_eq("Q3" + detail::idx_tag("s", j), R::cat({b.g(), b.s(j), b.g()}), b.s(j));
    if (n >= 2)
        b.add_eq("Q4[cz1]", R::cat({b.g(), b.cz(1), b.g()}), R::cat({b.cz(1), b.s(2, 2)}));
    for (int k = 2; k < n; ++k)
        b.add_eq("Q4" + detail::idx_tag("cz", k), R::cat({b.g(), b.cz(k), b.g()}), b.cz(k));
    for (int i = 2; i <= n; ++i) b.add("R1" + detail::idx_tag("h", i), b.h(i, 2));
    for (int j = 1; j <= n; ++j) b.add("R1" + detail::idx_tag("s", j), b.s(j, 4));
    for (int k = 1; k < n; ++k) b.add("R1" + detail::idx_tag("cz", k), b.cz(k, 2));
    for (int i = 2; i <= n; ++i)
        b.add("R2" + detail::idx_tag("i", i), R::pw(R::cat({b.s(i), b.h(i)}), 3));
    for (int i = 2; i <= n; ++i)
        b.add("R3" + detail::idx_tag("i", i),
              R::pw(R::cat({b.s(i, 3), b.h(i), b.s(i), b.h(i)}), 3));
    for (int i = 2; i <= n; ++i)
        b.add("R4" + detail::idx_tag("i", i),
              R::pw(R::cat({b.s(i, 2), b.h(i), b.s(i, 2), b.h(i)}), 2));
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            b.add_commute("R5[h" + std::to_string(i) + ",h" + std::to_string(j) + "]", b.h(i),
                          b.h(j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            b.add_commute("R5[s" + std::to_string(i) + ",s" + std::to_string(j) + "]", b.s(i),
                          b.s(j));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_commute("R5[cz" + std::to_string(i) + ",cz" + std::to_string(j) + "]", b.cz(i),
                          b.cz(j));
    for (int k = 1; k < n; ++k)
        for (int j = 1; j <= n; ++j)
            b.add_commute("R6[cz" + std::to_string(k) + ",s" + std::to_string(j) + "]", b.cz(k),
                          b.s(j));
    for (int k = 1; k < n; ++k)
        for (int i = 2; i <= n; ++i) {
            if (i == k || i == k + 1) continue;
            b.add_commute("R7[cz" + std::to_string(k) + ",h" + std::to_string(i) + "]", b.cz(k),
                          b.h(i));
        }
    for (int i = 2; i <= n - 1; ++i)
        b.add_eq("R8" + detail::idx_tag("i", i),
                 R::cat({b.h(i), b.s(i, 2), b.h(i), b.cz(i)}),
                 R::cat({b.cz(i), b.h(i), b.s(i + 1, 2), b.s(i, 2), b.h(i)}));
    for (int i = 1; i <= n - 1; ++i)
        b.add_eq("R9" + detail::idx_tag("i", i),
                 R::cat({b.h(i + 1), b.s(i + 1, 2), b.h(i + 1), b.cz(i)}),
                 R::cat({b.cz(i), b.h(i + 1), b.s(i + 1, 2), b.s(i, 2), b.h(i + 1)}));
    for (int i = 2; i <= n - 1; ++i)
        b.add_eq("R10" + detail::idx_tag("i", i),
                 R::cat({b.cz(i), b.h(i), b.cz(i)}),
                 R::cat({b.s(i), b.h(i), b.cz(i), b.s(i + 1), b.s(i), b.h(i), b.s(i)}));
    for (int j = 1; j <= n - 1; ++j)
        b.add_eq("R11" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.cz(j)}),
                 R::cat({b.s(j + 1), b.h(j + 1), b.cz(j), b.s(j + 1), b.s(j), b.h(j + 1),
                         b.s(j + 1)}));
    for (int j = 2; j <= n - 2; ++j)
        b.add_eq("R12" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j), b.h(j + 1), b.h(j),
                         b.cz(j)}),
                 R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 1), b.h(j),
                         b.cz(j), b.h(j + 1), b.h(j), b.cz(j + 1), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1)}));
    for (int j = 2; j <= n - 2; ++j)
        b.add("R13" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 1), b.h(j),
                            b.cz(j + 1)}),
                    3));
    for (int j = 1; j <= n - 2; ++j)
        b.add("R14" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 2),
                            b.h(j + 1), b.cz(j)}),
                    3));
    return p;
}

// The quotient of the INn group by the projective Pauli group.  Relators
// evaluate into the Pauli subgroup rather than to the identity in the
// tableau model.
inline Presentation builtin_presentation_INnModPn(int n) {
    if (n < 1) throw std::invalid_argument("presentation requires n >= 1");
    Presentation p;
    p.kind = PresentationKind::INnModPn;
    p.n = n;
    p.extrapolated = (n == 1);
    p.symbols.push_back("g");
    for (int i = 2; i <= n; ++i) p.symbols.push_back("h" + std::to_string(i));
    for (int j = 1; j <= n; ++j) p.symbols.push_back("s" + std::to_string(j));
    for (int k = 1; k < n; ++k) p.symbols.push_back("cz" + std::to_string(k));
    detail::RelatorBuilder b(&p);
    using R = detail::RelatorBuilder;
    b.add("P1[s1g]", R::cat({b.s(1), b.g()}));
    for (int j = 1; j <= n; ++j) b.add("P1" + detail::idx_tag("s", j), b.s(j, 2));
    b.add("Q1[g]", b.g(2));
    for (int i = 2; i <= n; ++i)
        b.add_commute("Q2" + detail::idx_tag("h", i), b.g(), b.h(i));
    for (int j = 1; j <= n; ++j)
        b.add_commute("Q2" + detail::idx_tag("s", j), b.g(), b.s(j));
    for (int k = 1; k < n; ++k)
        b.add_commute("Q2" + detail::idx_tag("cz", k), b.g(), b.cz(k));
    for (int i = 2; i <= n; ++i) b.add("R1" + detail::idx_tag("h", i), b.h(i, 2));
    for (int k = 1; k < n; ++k) b.add("R1" + detail::idx_tag("cz", k), b.cz(k, 2));
    for (int i = 2; i <= n; ++i)
        b.add("R2" + detail::idx_tag("i", i), R::pw(R::cat({b.s(i), b.h(i)}), 3));
    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            b.add_commute("R3[h" + std::to_string(i) + ",h" + std::to_string(j) + "]", b.h(i),
                          b.h(j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            b.add_commute("R3[s" + std::to_string(i) + ",s" + std::to_string(j) + "]", b.s(i),
                          b.s(j));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            b.add_commute("R3[cz" + std::to_string(i) + ",cz" + std::to_string(j) + "]", b.cz(i),
                          b.cz(j));
    for (int k = 1; k < n; ++k)
        for (int j = 1; j <= n; ++j)
            b.add_commute("R4[cz" + std::to_string(k) + ",s" + std::to_string(j) + "]", b.cz(k),
                          b.s(j));
    for (int k = 1; k < n; ++k)
        for (int i = 2; i <= n; ++i) {
            if (i == k || i == k + 1) continue;
            b.add_commute("R5[cz" + std::to_string(k) + ",h" + std::to_string(i) + "]", b.cz(k),
                          b.h(i));
        }
    for (int i = 2; i <= n - 1; ++i)
        b.add_eq("R6" + detail::idx_tag("i", i),
                 R::cat({b.cz(i), b.h(i), b.cz(i)}),
                 R::cat({b.s(i), b.h(i), b.cz(i), b.s(i + 1), b.s(i), b.h(i), b.s(i)}));
    for (int j = 1; j <= n - 1; ++j)
        b.add_eq("R7" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.cz(j)}),
                 R::cat({b.s(j + 1), b.h(j + 1), b.cz(j), b.s(j + 1), b.s(j), b.h(j + 1),
                         b.s(j + 1)}));
    for (int j = 2; j <= n - 2; ++j)
        b.add_eq("R8" + detail::idx_tag("j", j),
                 R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j), b.h(j + 1), b.h(j),
                         b.cz(j)}),
                 R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 1), b.h(j),
                         b.cz(j), b.h(j + 1), b.h(j), b.cz(j + 1), b.h(j + 2), b.h(j + 1),
                         b.cz(j + 1)}));
    for (int j = 2; j <= n - 2; ++j)
        b.add("R9" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j), b.h(j + 1), b.h(j), b.cz(j), b.h(j + 1), b.h(j),
                            b.cz(j + 1)}),
                    3));
    for (int j = 1; j <= n - 2; ++j)
        b.add("R10" + detail::idx_tag("j", j),
              R::pw(R::cat({b.cz(j + 1), b.h(j + 2), b.h(j + 1), b.cz(j + 1), b.h(j + 2),
                            b.h(j + 1), b.cz(j)}),
                    3));
    return p;
}

inline Presentation builtin_presentation(PresentationKind kind, int n) {
    switch (kind) {
        case PresentationKind::Cn: return builtin_presentation_Cn(n);
        case PresentationKind::INn: return builtin_presentation_INn(n);
        case PresentationKind::INnModPn: return builtin_presentation_INnModPn(n);
    }
    throw std::logic_error("unreachable presentation kind");
}

// Tableau realization of one presentation symbol.
inline Word symbol_word(const std::string& symbol, int n) {
    if (symbol == "g") {
        Word w(n);
        w.h(1).s(1).h(1).s(1).s(1).s(1).h(1);
        return w;
    }
    if (symbol.size() >= 2 && symbol[0] == 'h')
        return Word(n).h(std::stoi(symbol.substr(1)));
    if (symbol.size() >= 2 && symbol[0] == 's')
        return Word(n).s(std::stoi(symbol.substr(1)));
    if (symbol.size() >= 3 && symbol.rfind("cz", 0) == 0) {
        const int k = std::stoi(symbol.substr(2));
        return Word(n).cz(k, k + 1);
    }
    throw std::invalid_argument("unknown presentation symbol: " + symbol);
}

// Word realizing a relator in the tableau model (after free reduction).
inline Word relator_word(const Presentation& p, const std::vector<int>& relator, int n) {
    Word w(n);
    for (int letter : free_reduce(relator)) {
        const std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
        if (k == 0 || k > p.symbols.size())
            throw std::invalid_argument("relator letter outside the symbol list");
        const Word gw = symbol_word(p.symbols[k - 1], n);
        w.append(letter > 0 ? gw : gw.inverted());
    }
    return w;
}

// Evaluates every relator in the tableau model.  Cn and INn relators must be
// the identity; INnModPn relators must land in the projective Pauli group.
inline Report verify_relators(PresentationKind kind, int n) {
    const Presentation p = builtin_presentation(kind, n);
    const std::string prefix = presentation_kind_name(kind) + " n=" + std::to_string(n) + " ";
    Report rep;
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        const CliffordTableau t = word_eval(relator_word(p, p.relators[r], n));
        const bool pass = kind == PresentationKind::INnModPn ? t.is_pauli() : t.is_identity();
        rep.add(prefix + p.labels[r], pass, pass ? "holds" : "violated",
                kind == PresentationKind::INnModPn ? "in Pauli subgroup" : "identity");
    }
    return rep;
}

// Coset enumeration over a presentation; subgroup generators are words over
// the presentation's symbols.  With an empty subgroup the coset count is the
// presented group's order.
inline TCResult todd_coxeter(const Presentation& p,
                             const std::vector<std::vector<int>>& subgroup = {},
                             std::size_t max_cosets = 1000000) {
    return coset_enumerate(static_cast<int>(p.symbols.size()), p.relators, subgroup, max_cosets);
}

// One-line-per-clause text form: "gen <symbols>;" then "rel <letters>;" per
// relator, with "^-1" marking formal inverses.
inline std::string presentation_str(const Presentation& p) {
    std::string out = "gen";
    for (const auto& s : p.symbols) out += " " + s;
    out += ";\n";
    for (const auto& rel : p.relators) {
        out += "rel";
        for (int letter : rel) {
            const std::size_t k = static_cast<std::size_t>(letter < 0 ? -letter : letter);
            out += " " + p.symbols[k - 1];
            if (letter < 0) out += "^-1";
        }
        out += ";\n";
    }
    return out;
}

// Parses the presentation text format.  The result carries symbols and
// relators only: kind, n and the extrapolation flag are meaningful for
// builtin presentations alone.
inline Presentation presentation_parse(const std::string& text) {
    Presentation p;
    p.n = 0;
    std::vector<std::string> segments;
    {
        std::string cur;
        for (char c : text) {
            if (c == ';') {
                segments.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        std::istringstream rest(cur);
        std::string leftover;
        if (rest >> leftover)
            throw std::invalid_argument("presentation text: trailing tokens after last ';'");
    }
    bool have_gen = false;
    int rel_count = 0;
    for (const auto& seg : segments) {
        std::istringstream in(seg);
        std::string head;
        if (!(in >> head)) continue;  // blank segment
        if (head == "gen") {
            if (have_gen) throw std::invalid_argument("presentation text: duplicate gen clause");
            std::string name;
            while (in >> name) {
                for (const auto& s : p.symbols)
                    if (s == name)
                        throw std::invalid_argument("presentation text: duplicate symbol " + name);
                p.symbols.push_back(name);
            }
            if (p.symbols.empty())
                throw std::invalid_argument("presentation text: gen clause lists no symbols");
            have_gen = true;
        } else if (head == "rel") {
            if (!have_gen)
                throw std::invalid_argument("presentation text: rel clause before gen clause");
            std::vector<int> rel;
            std::string tok;
            while (in >> tok) {
                bool inverse = false;
                if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
                    inverse = true;
                    tok = tok.substr(0, tok.size() - 3);
                }
                int k = 0;
                for (std::size_t i = 0; i < p.symbols.size(); ++i)
                    if (p.symbols[i] == tok) k = static_cast<int>(i) + 1;
                if (k == 0)
                    throw std::invalid_argument("presentation text: unknown symbol " + tok);
                rel.push_back(inverse ? -k : k);
            }
            p.relators.push_back(std::move(rel));
            p.labels.push_back("rel" + std::to_string(++rel_count));
        } else {
            throw std::invalid_argument("presentation text: unknown clause " + head);
        }
    }
    if (!have_gen) throw std::invalid_argument("presentation text: missing gen clause");
    return p;
}

}  // namespace cliffperm
