#pragma once

// Cross-model verification driver.  The routines here tie the three
// realizations of the projective Clifford group together -- symplectic
// tableaus, permutations of the conjugacy classes of s_1 and z_1 = s_1^2,
// and finitely presented groups -- and check the structural facts the
// library is built around: centralizer orders, distinguished generating
// sets, the normal form, the rewriting identities, and the unitary-matrix
// semantics of every gate word.  Expected constants are pinned to the
// closed-form orders in orders.hpp.  Every check lands in a Report so
// callers (tests, CLI) can print one PASS/FAIL line per fact.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsgs.hpp"
#include "class_index.hpp"
#include "matrix_oracle.hpp"
#include "normal_form.hpp"
#include "orders.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "tableau.hpp"
#include "todd_coxeter.hpp"
#include "word.hpp"

namespace cliffperm {

using NamedWords = std::vector<std::pair<std::string, Word>>;

// ---------------------------------------------------------------------------
// Distinguished words and generating sets.
//
// Two subgroups organize the centralizer theory:
//
//   IN_n, of order |C_n| / (4^n - 1), is carried onto Cent(z_1) by the
//   conjugation u -> (h1 s1) u (h1 s1)^-1, and
//
//   F_n, its index-two subgroup (IN_n = <h1, F_n>), is carried onto
//   Cent(s_1) by the same conjugation.
//
// The element g = h1 s1 h1 s1^3 h1 normalizes F_n: conjugation by g sends
// s_1 to s_1^3 and cz_12 to cz_12 s_2^2 while fixing the remaining
// generators, which exhibits IN_n as a semidirect product F_n x <g> at the
// level of its presentation.
// ---------------------------------------------------------------------------

inline Word word_M(int n) { return generator_word(GeneratorKind::M, {}, n); }
inline Word word_g(int n) { return generator_word(GeneratorKind::GConj, {}, n); }

// (h1 s1) u (h1 s1)^-1 spelled as the word h1 s1 u s1^3 h1.
inline Word conjugate_by_h1s1(const Word& u) {
    Word w(u.num_qubits());
    w.h(1).s(1).append(u).s(1).s(1).s(1).h(1);
    return w;
}

namespace detail {
inline Word wh(int n, int i) { return Word(n).h(i); }
inline Word ws(int n, int i) { return Word(n).s(i); }
inline Word wcz(int n, int k) { return Word(n).cz(k, k + 1); }
inline std::string idx(const char* stem, int i) { return stem + std::to_string(i); }
}  // namespace detail

// IN_n = the full preimage of the z_1 stabilizer under u -> h1 s1 u s1^3 h1.
inline NamedWords in_subgroup_generators(int n) {
    NamedWords g;
    if (n == 1) {
        g.emplace_back("h1", detail::wh(1, 1));
        Word w(1);
        w.s(1).s(1).s(1).h(1).s(1).h(1).s(1);
        g.emplace_back("s1^3 h1 s1 h1 s1", std::move(w));
        return g;
    }
    if (n == 2) {
        g.emplace_back("h1", detail::wh(2, 1));
        g.emplace_back("h2", detail::wh(2, 2));
        g.emplace_back("s2", detail::ws(2, 2));
        Word x1(2);
        x1.h(1).s(1).s(1).h(1);
        g.emplace_back("h1 s1^2 h1", std::move(x1));
        g.emplace_back("M", word_M(2));
        return g;
    }
    for (int i = 1; i <= n; ++i) g.emplace_back(detail::idx("h", i), detail::wh(n, i));
    for (int i = 2; i <= n; ++i) g.emplace_back(detail::idx("s", i), detail::ws(n, i));
    g.emplace_back("M", word_M(n));
    for (int k = 2; k <= n - 1; ++k) g.emplace_back(detail::idx("cz", k), detail::wcz(n, k));
    return g;
}

// F_n: drop h1 from the list above (n = 1 keeps only the long word).
inline NamedWords f_subgroup_generators(int n) {
    NamedWords g = in_subgroup_generators(n);
    g.erase(g.begin());  // h1 is always listed first
    return g;
}

// Cent(s_1): everything touching only qubits 2..n, together with s_1 and
// the diagonal gates cz.
inline NamedWords cent_s1_generators(int n) {
    NamedWords g;
    for (int i = 2; i <= n; ++i) g.emplace_back(detail::idx("h", i), detail::wh(n, i));
    for (int i = 1; i <= n; ++i) g.emplace_back(detail::idx("s", i), detail::ws(n, i));
    for (int k = 1; k <= n - 1; ++k) g.emplace_back(detail::idx("cz", k), detail::wcz(n, k));
    return g;
}

// Cent(z_1): adjoin g = h1 s1 h1 s1^3 h1 to Cent(s_1).
inline NamedWords cent_z1_generators(int n) {
    NamedWords g;
    g.emplace_back("g", word_g(n));
    NamedWords rest = cent_s1_generators(n);
    g.insert(g.end(), rest.begin(), rest.end());
    return g;
}

// Cent({s_1, h1 s1 h1}): the copy of C_{n-1} on qubits 2..n.
inline NamedWords cent_pair_generators(int n) {
    NamedWords g;
    for (int i = 2; i <= n; ++i) g.emplace_back(detail::idx("h", i), detail::wh(n, i));
    for (int i = 2; i <= n; ++i) g.emplace_back(detail::idx("s", i), detail::ws(n, i));
    for (int k = 2; k <= n - 1; ++k) g.emplace_back(detail::idx("cz", k), detail::wcz(n, k));
    return g;
}

// ---------------------------------------------------------------------------
// Combined class action.
//
// The action on the class V of s_1 is faithful; the action on the class of
// z_1 alone is not (the Pauli subgroup acts trivially there).  Stabilizer
// computations that pin the z_1 point therefore run on the disjoint union
// of the two classes, with z-class points shifted past the s-class block.
// ---------------------------------------------------------------------------

class CombinedClassAction {
  public:
    explicit CombinedClassAction(int n, std::size_t guard = 1000000)
        : s_class_(enumerate_class(word_eval(detail::ws(n, 1)), guard)),
          z_class_(enumerate_class(word_eval(Word(n).s(1).s(1)), guard)) {}

    int num_qubits() const { return s_class_.num_qubits(); }
    int degree() const { return static_cast<int>(s_class_.size() + z_class_.size()); }
    const ClassIndex& s_class() const { return s_class_; }
    const ClassIndex& z_class() const { return z_class_; }

    int s_point(const CliffordTableau& t) const { return s_class_.point_of(t); }
    int z_point(const CliffordTableau& t) const {
        return static_cast<int>(s_class_.size()) + z_class_.point_of(t);
    }

    Permutation image(const CliffordTableau& g) const {
        const Permutation ps = permutation_of(g, s_class_);
        const Permutation pz = permutation_of(g, z_class_);
        const int off = static_cast<int>(s_class_.size());
        std::vector<int> im(static_cast<std::size_t>(degree()));
        for (int i = 1; i <= ps.degree(); ++i) im[static_cast<std::size_t>(i - 1)] = ps.apply(i);
        for (int i = 1; i <= pz.degree(); ++i)
            im[static_cast<std::size_t>(off + i - 1)] = off + pz.apply(i);
        return Permutation(im);
    }

    Permutation image(const Word& w) const { return image(word_eval(w)); }

  private:
    ClassIndex s_class_;
    ClassIndex z_class_;
};

namespace detail {

inline std::vector<Permutation> images_on(const NamedWords& gens, const ClassIndex& idx) {
    std::vector<Permutation> out;
    out.reserve(gens.size());
    for (const auto& [name, w] : gens) {
        (void)name;
        out.push_back(permutation_of(word_eval(w), idx));
    }
    return out;
}

inline std::vector<Permutation> images_on(const NamedWords& gens, const CombinedClassAction& act) {
    std::vector<Permutation> out;
    out.reserve(gens.size());
    for (const auto& [name, w] : gens) {
        (void)name;
        out.push_back(act.image(w));
    }
    return out;
}

inline bool all_members(const std::vector<Permutation>& perms, const BSGS& b) {
    return std::all_of(perms.begin(), perms.end(),
                       [&](const Permutation& p) { return membership(p, b); });
}

// "<generated> = <stabilizer>" via containment of the generators plus
// equality of orders; reports the two orders for the transcript.
inline void add_group_equality(Report& rep, const std::string& name,
                               const std::vector<Permutation>& gens, const BSGS& target,
                               const bigint& expected_order) {
    const BSGS sub(gens);
    const bool contained = all_members(gens, target);
    const bool same_order = sub.order() == target.order() && target.order() == expected_order;
    rep.add(name, contained && same_order, sub.order().str() + " inside " + target.order().str(),
            expected_order.str() + " = " + expected_order.str());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Centralizer / subgroup theorem driver (n = 1..3).
// ---------------------------------------------------------------------------

inline Report verify_theorems(int n, std::size_t guard = 1000000) {
    if (n < 1 || n > 3) throw std::invalid_argument("verify_theorems supports n = 1..3");
    Report rep;
    const std::string tag = " n=" + std::to_string(n);

    CombinedClassAction act(n, guard);
    const ClassIndex& V = act.s_class();
    const bigint pow4 = bigint(1) << (2 * n);

    const NamedWords std_gens = standard_generators(n);
    std::vector<Permutation> full_V = detail::images_on(std_gens, V);
    std::vector<Permutation> full_comb = detail::images_on(std_gens, act);

    // --- the set V and faithfulness ---------------------------------------
    rep.add("|class(s1)| = 2(4^n-1)" + tag, bigint(V.size()) == class_size_s(n),
            std::to_string(V.size()), class_size_s(n).str());
    rep.add("|class(z1)| = 4^n-1" + tag, bigint(act.z_class().size()) == class_size_z(n),
            std::to_string(act.z_class().size()), class_size_z(n).str());

    const BSGS bV(full_V);
    rep.add("action on class(s1) faithful: order = |C_n|" + tag, bV.order() == order_Cn(n),
            bV.order().str(), order_Cn(n).str());
    const BSGS bComb(full_comb);
    rep.add("combined action order = |C_n|" + tag, bComb.order() == order_Cn(n),
            bComb.order().str(), order_Cn(n).str());

    // --- Cent(z_1) ---------------------------------------------------------
    const CliffordTableau z1 = word_eval(Word(n).s(1).s(1));
    const BSGS bz(stabilizer(full_comb, {act.z_point(z1)}));
    rep.add("|Cent(z1)| = |IN_n|" + tag, bz.order() == order_INn(n), bz.order().str(),
            order_INn(n).str());
    detail::add_group_equality(rep, "Cent(z1) = <g, h/s/cz list>" + tag,
                               detail::images_on(cent_z1_generators(n), act), bz, order_INn(n));

    NamedWords in_conj;
    for (const auto& [name, w] : in_subgroup_generators(n))
        in_conj.emplace_back("h1 s1 (" + name + ") s1^3 h1", conjugate_by_h1s1(w));
    detail::add_group_equality(rep, "Cent(z1) = h1 s1 IN_n s1^3 h1" + tag,
                               detail::images_on(in_conj, act), bz, order_INn(n));

    // --- Cent(s_1) ---------------------------------------------------------
    const CliffordTableau s1t = word_eval(detail::ws(n, 1));
    const BSGS bs(stabilizer(full_V, {V.point_of(s1t)}));
    rep.add("|Cent(s1)| = |IN_n|/2" + tag, bs.order() == order_Fn(n), bs.order().str(),
            order_Fn(n).str());
    detail::add_group_equality(rep, "Cent(s1) = <h/s/cz list>" + tag,
                               detail::images_on(cent_s1_generators(n), V), bs, order_Fn(n));

    NamedWords f_conj;
    for (const auto& [name, w] : f_subgroup_generators(n))
        f_conj.emplace_back("h1 s1 (" + name + ") s1^3 h1", conjugate_by_h1s1(w));
    if (n != 2) {
        detail::add_group_equality(rep, "Cent(s1) = h1 s1 F_n s1^3 h1" + tag,
                                   detail::images_on(f_conj, V), bs, order_Fn(n));
    } else {
        // At n = 2 the listed F_2 generators <h2, s2, h1 s1^2 h1, M> form an
        // index-two normal subgroup of IN_2 of the right order, but not the
        // one conjugate to Cent(s1): h1 s1 (h1 s1^2 h1) s1^3 h1 is the Pauli
        // Y on qubit 1, which inverts s1, and (h1 s1)^-1 s1 (h1 s1) is not
        // generated by the list.  The engine must detect this discrepancy.
        const std::vector<Permutation> ci = detail::images_on(f_conj, V);
        const BSGS bconj(ci);
        Word e(n);
        e.s(1).s(1).s(1).h(1).s(1).h(1).s(1);  // (h1 s1)^-1 s1 (h1 s1)
        const BSGS bF2(detail::images_on(f_subgroup_generators(n), V));
        const bool detected = bconj.order() == order_Fn(n) && !detail::all_members(ci, bs) &&
                              !membership(permutation_of(word_eval(e), V), bF2);
        rep.add("conjugated F_2 list is not Cent(s1): defect detected" + tag, detected,
                bconj.order().str() + " escapes", order_Fn(n).str() + " escapes");
    }

    if (n >= 2) {
        // s1 = h2 s2 h2 s2 cz12 h2 s2 h2 cz12 h2 cz12, so s_1 already lies in
        // the subgroup generated by the qubit-2 gates and cz12.
        Word rhs(n);
        rhs.h(2).s(2).h(2).s(2).cz(1, 2).h(2).s(2).h(2).cz(1, 2).h(2).cz(1, 2);
        rep.add("s1 = h2 s2 h2 s2 cz12 h2 s2 h2 cz12 h2 cz12" + tag, word_eval(rhs) == s1t);

        NamedWords without_s1;
        for (const auto& [name, w] : cent_s1_generators(n))
            if (name != "s1") without_s1.emplace_back(name, w);
        const BSGS bwo(detail::images_on(without_s1, V));
        rep.add("s1 in <Cent(s1) generators minus s1>" + tag,
                membership(permutation_of(s1t, V), bwo));
    }

    // --- IN_n and F_n ------------------------------------------------------
    const std::vector<Permutation> in_imgs = detail::images_on(in_subgroup_generators(n), V);
    const std::vector<Permutation> f_imgs = detail::images_on(f_subgroup_generators(n), V);
    const BSGS bIN(in_imgs);
    const BSGS bF(f_imgs);
    rep.add("|IN_n| from its generators" + tag, bIN.order() == order_INn(n), bIN.order().str(),
            order_INn(n).str());
    rep.add("|F_n| = |IN_n|/2" + tag, bF.order() == order_Fn(n), bF.order().str(),
            order_Fn(n).str());
    rep.add("F_n normal in IN_n" + tag, is_normal(f_imgs, in_imgs));
    rep.add("h1 not in F_n" + tag, !membership(permutation_of(word_eval(detail::wh(n, 1)), V), bF));
    {
        std::vector<Permutation> with_h1 = f_imgs;
        with_h1.push_back(permutation_of(word_eval(detail::wh(n, 1)), V));
        const BSGS bwh(with_h1);
        rep.add("IN_n = <h1, F_n>" + tag, bwh.order() == order_INn(n), bwh.order().str(),
                order_INn(n).str());
    }
    if (n >= 2) {
        Word lhs(n);
        lhs.h(1).append(word_M(n)).h(1);
        rep.add("h1 M h1 = M^3" + tag, word_eval(lhs) == word_eval(word_M(n).repeated(3)));
    }

    // --- two-point stabilizer and the descending chain ----------------------
    const CliffordTableau x1conj = word_eval(Word(n).h(1).s(1).h(1));
    const std::vector<int> pair_pts{V.point_of(s1t), V.point_of(x1conj)};
    const BSGS b2(stabilizer(full_V, pair_pts));
    const bigint cnm1 = order_Cn(n - 1);
    rep.add("|Cent({s1, h1 s1 h1})| = |C_{n-1}|" + tag, b2.order() == cnm1, b2.order().str(),
            cnm1.str());
    detail::add_group_equality(rep, "Cent({s1, h1 s1 h1}) = <qubit 2..n gates>" + tag,
                               detail::images_on(cent_pair_generators(n), V), b2, cnm1);
    {
        std::vector<int> pts;
        bool chain_ok = true;
        std::string computed, expected;
        for (int i = 1; i <= n; ++i) {
            pts.push_back(V.point_of(word_eval(detail::ws(n, i))));
            pts.push_back(V.point_of(word_eval(Word(n).h(i).s(i).h(i))));
            const BSGS bi(stabilizer(full_V, pts));
            const bigint want = order_Cn(n - i);
            if (i > 1) {
                computed += " ";
                expected += " ";
            }
            computed += bi.order().str();
            expected += want.str();
            chain_ok = chain_ok && bi.order() == want;
        }
        rep.add("stabilizer chain {s_i, h_i s_i h_i} -> |C_{n-i}|" + tag, chain_ok, computed,
                expected);
    }

    // --- redundancy and change of basis at n = 3 ----------------------------
    if (n == 3) {
        NamedWords big;
        big.emplace_back("h1", detail::wh(3, 1));
        big.emplace_back("h2", detail::wh(3, 2));
        big.emplace_back("h3", detail::wh(3, 3));
        big.emplace_back("M", word_M(3));
        big.emplace_back("cz2", detail::wcz(3, 2));
        const BSGS bbig(detail::images_on(big, V));
        rep.add("h1 s1^2 h1 in <h1,h2,h3,M,cz23>" + tag,
                membership(permutation_of(word_eval(Word(3).h(1).s(1).s(1).h(1)), V), bbig));

        NamedWords lhs;
        lhs.emplace_back("h2", detail::wh(3, 2));
        lhs.emplace_back("h3", detail::wh(3, 3));
        lhs.emplace_back("s2", detail::ws(3, 2));
        lhs.emplace_back("s3", detail::ws(3, 3));
        lhs.emplace_back("h1 s1 M s1^3 h1", conjugate_by_h1s1(word_M(3)));
        lhs.emplace_back("h1 cz23 h1", Word(3).h(1).cz(2, 3).h(1));
        NamedWords rhs;
        rhs.emplace_back("h2", detail::wh(3, 2));
        rhs.emplace_back("h3", detail::wh(3, 3));
        rhs.emplace_back("s2", detail::ws(3, 2));
        rhs.emplace_back("s3", detail::ws(3, 3));
        rhs.emplace_back("cz1", detail::wcz(3, 1));
        rhs.emplace_back("cz2", detail::wcz(3, 2));
        const std::vector<Permutation> li = detail::images_on(lhs, V);
        const std::vector<Permutation> ri = detail::images_on(rhs, V);
        const BSGS bl(li);
        const BSGS br(ri);
        const bool equal =
            detail::all_members(li, br) && detail::all_members(ri, bl) && bl.order() == br.order();
        rep.add("change of basis: conjugated M set = cz set" + tag, equal, bl.order().str(),
                br.order().str());
    }

    // --- the twisting element g ---------------------------------------------
    {
        const CliffordTableau g = word_eval(word_g(n));
        rep.add("g^2 = 1" + tag, compose(g, g).is_identity());
        rep.add("g s1 g = s1^3" + tag,
                compose(compose(g, s1t), g) == word_eval(detail::ws(n, 1).repeated(3)));
        rep.add("g does not centralize s1" + tag, compose(g, s1t) != compose(s1t, g));
        if (n >= 2) {
            const CliffordTableau cz1 = word_eval(detail::wcz(n, 1));
            rep.add("g cz12 g = cz12 s2^2" + tag,
                    compose(compose(g, cz1), g) == word_eval(Word(n).cz(1, 2).s(2).s(2)));
            bool fixes = true;
            for (const auto& [name, w] : cent_pair_generators(n)) {
                (void)name;
                const CliffordTableau t = word_eval(w);
                fixes = fixes && compose(g, t) == compose(t, g);
            }
            rep.add("g centralizes qubit 2..n gates" + tag, fixes);
        }
    }

    // --- brute-force centralizer counts over all of C_n (n <= 2) ------------
    if (n <= 2) {
        const auto all = enumerate_clifford_group(n);
        const CliffordTableau hsh = x1conj;
        const CliffordTableau x1 = word_eval(Word(n).h(1).s(1).s(1).h(1));
        std::size_t fix_s = 0, map_hsh_s = 0, fix_z = 0, map_x_z = 0;
        for (const auto& u : all) {
            if (compose(s1t, u) == compose(u, s1t)) ++fix_s;
            if (compose(hsh, u) == compose(u, s1t)) ++map_hsh_s;
            if (compose(z1, u) == compose(u, z1)) ++fix_z;
            if (compose(x1, u) == compose(u, z1)) ++map_x_z;
        }
        rep.add("#{u : u^-1 s1 u = s1} = |F_n|" + tag, bigint(fix_s) == order_Fn(n),
                std::to_string(fix_s), order_Fn(n).str());
        rep.add("#{u : u^-1 (h1 s1 h1) u = s1} = |F_n|" + tag, bigint(map_hsh_s) == order_Fn(n),
                std::to_string(map_hsh_s), order_Fn(n).str());
        rep.add("#{u : u^-1 z1 u = z1} = |IN_n|" + tag, bigint(fix_z) == order_INn(n),
                std::to_string(fix_z), order_INn(n).str());
        rep.add("#{u : u^-1 (h1 s1^2 h1) u = z1} = |IN_n|" + tag, bigint(map_x_z) == order_INn(n),
                std::to_string(map_x_z), order_INn(n).str());
    }

    return rep;
}

// ---------------------------------------------------------------------------
// CLI suites.
// ---------------------------------------------------------------------------

// Relator evaluation for all three presentations, plus coset enumeration
// against the known orders where the tables stay small (n <= 2).
inline Report verify_relations_suite(int n, std::size_t max_cosets = 1000000) {
    if (n < 1 || n > 4) throw std::invalid_argument("relations suite supports n = 1..4");
    Report rep;
    for (PresentationKind kind :
         {PresentationKind::Cn, PresentationKind::INn, PresentationKind::INnModPn})
        rep.merge(verify_relators(kind, n));

    if (n <= 2) {
        struct Target {
            PresentationKind kind;
            bigint expected;
        };
        const std::vector<Target> targets{
            {PresentationKind::Cn, order_Cn(n)},
            {PresentationKind::INn, order_INn(n)},
            {PresentationKind::INnModPn, order_INn(n) / order_Pn(n)},
        };
        for (const auto& t : targets) {
            const Presentation p = builtin_presentation(t.kind, n);
            const TCResult r = todd_coxeter(p, {}, max_cosets);
            std::string name = std::string("coset enumeration ") + presentation_kind_name(t.kind) +
                               " n=" + std::to_string(n);
            if (p.extrapolated) name += " (n=1 extrapolation)";
            if (r.status == TCStatus::CapExceeded) {
                rep.add(name, false, "CapExceeded", t.expected.str());
            } else {
                rep.add(name, bigint(r.num_cosets) == t.expected, std::to_string(r.num_cosets),
                        t.expected.str());
            }
        }
    }
    return rep;
}

// Normal form: counting identity, exhaustive bijectivity for n <= 2,
// seeded random round-trips for n >= 3, level tables, text round-trip.
inline Report verify_normalform_suite(int n, std::uint64_t seed = 0) {
    if (n < 1 || n > 4) throw std::invalid_argument("normal form suite supports n = 1..4");
    Report rep;
    const std::string tag = " n=" + std::to_string(n);

    rep.add("normal-form parameter count = |C_n|" + tag, normal_form_count(n) == order_Cn(n),
            normal_form_count(n).str(), order_Cn(n).str());

    static const std::uint64_t kLevelSizes[] = {0, 24, 480, 8064};
    for (int k = 1; k <= std::min(n, 3); ++k) {
        const LevelTable& t = level_table(k);
        rep.add("level table k=" + std::to_string(k) + " complete, no collisions",
                t.size() == kLevelSizes[k] && t.size() == level_param_count(k),
                std::to_string(t.size()), std::to_string(kLevelSizes[k]));
    }

    if (n <= 2) {
        const auto all = enumerate_clifford_group(n);
        bool ok = bigint(all.size()) == order_Cn(n);
        for (const auto& t : all) {
            const NormalForm nf = synthesize(t);
            if (nf_to_tableau(nf) != t || nf_parse(nf_str(nf)) != nf) {
                ok = false;
                break;
            }
        }
        rep.add("exhaustive synthesis round-trip" + tag, ok, std::to_string(all.size()),
                order_Cn(n).str());
    } else {
        std::mt19937_64 rng(seed);
        const NamedWords gens = standard_generators(n);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        const int trials = 1000;
        int good = 0;
        for (int t = 0; t < trials; ++t) {
            Word w(n);
            for (int i = 0; i < 32; ++i) w.append(gens[pick(rng)].second);
            const CliffordTableau f = word_eval(w);
            const NormalForm nf = synthesize(f);
            if (nf_to_tableau(nf) == f && nf_parse(nf_str(nf)) == nf) ++good;
        }
        rep.add("random synthesis round-trips" + tag, good == trials, std::to_string(good),
                std::to_string(trials));
    }
    return rep;
}

// The rewriting identities behind the normal form (fixed small sizes).
inline Report verify_rewrite_suite() { return verify_rewrite_rules(); }

// Unitary-matrix semantics: every gate word conjugates Paulis exactly as
// its tableau says, phase included.
inline Report verify_oracle_suite(int n, std::uint64_t seed = 0) {
    if (n < 1 || n > kMaxOracleQubits)
        throw std::invalid_argument("oracle suite supports n = 1.." +
                                    std::to_string(kMaxOracleQubits));
    Report rep;
    const std::string tag = " n=" + std::to_string(n);

    bool gens_ok = true;
    for (const auto& [name, w] : standard_generators(n)) {
        (void)name;
        gens_ok = gens_ok && check_tableau(w, kOracleTolerance);
    }
    rep.add("generator words phase-exact" + tag, gens_ok);

    {
        bool named_ok = check_tableau(generator_word(GeneratorKind::Z, {1}, n)) &&
                        check_tableau(generator_word(GeneratorKind::X, {1}, n)) &&
                        check_tableau(word_g(n));
        if (n >= 2) {
            named_ok = named_ok && check_tableau(generator_word(GeneratorKind::CX, {1, 2}, n)) &&
                       check_tableau(generator_word(GeneratorKind::Swap, {1, 2}, n)) &&
                       check_tableau(word_M(n));
        }
        rep.add("named composite words phase-exact" + tag, named_ok);
    }

    if (n >= 2) {
        const Matrix cx = cx_matrix(1, 2, n);
        rep.add("cx word matches controlled-X" + tag,
                equal_up_to_phase(matrix_of_word(generator_word(GeneratorKind::CX, {1, 2}, n)), cx,
                                  kOracleTolerance));
        // The shorter candidate h2 s1^2 h2 is *not* a controlled-X: the
        // matrices differ beyond a global phase, and the oracle must say so.
        Word candidate(n);
        candidate.h(2).s(1).s(1).h(2);
        rep.add("h2 z1 h2 is not controlled-X" + tag,
                !equal_up_to_phase(matrix_of_word(candidate), cx, kOracleTolerance));
        rep.add("swap word matches SWAP" + tag,
                equal_up_to_phase(matrix_of_word(generator_word(GeneratorKind::Swap, {1, 2}, n)),
                                  swap_matrix(1, 2, n), kOracleTolerance));
    }

    if (n == 1) {
        // Exhaustive sweep over all {h,s} words of length 1..8 (2 + 4 + ... +
        // 256 = 510 words).
        std::size_t checked = 0, passed = 0;
        for (int len = 1; len <= 8; ++len) {
            for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
                Word w(1);
                for (int i = 0; i < len; ++i) {
                    if ((mask >> i) & 1u)
                        w.s(1);
                    else
                        w.h(1);
                }
                ++checked;
                if (check_tableau(w, kOracleTolerance)) ++passed;
            }
        }
        rep.add("exhaustive words length<=8" + tag, checked == 510 && passed == checked,
                std::to_string(passed) + "/" + std::to_string(checked), "510/510");
    }
    {
        const int trials = n <= 2 ? 1000 : 100;
        std::mt19937_64 rng(seed);
        const NamedWords gens = standard_generators(n);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        int good = 0;
        for (int t = 0; t < trials; ++t) {
            Word w(n);
            for (int i = 0; i < 24; ++i) w.append(gens[pick(rng)].second);
            if (check_tableau(w, kOracleTolerance)) ++good;
        }
        rep.add("random words phase-exact" + tag, good == trials, std::to_string(good),
                std::to_string(trials));
    }
    return rep;
}

// Dispatch used by the command-line driver.  "all" runs every suite whose
// domain includes n.
inline Report verify_suite(const std::string& suite, int n, std::uint64_t seed = 0,
                           std::size_t max_cosets = 1000000, std::size_t guard = 1000000) {
    if (suite == "relations") return verify_relations_suite(n, max_cosets);
    if (suite == "centralizers") return verify_theorems(n, guard);
    if (suite == "normalform") return verify_normalform_suite(n, seed);
    if (suite == "rewrite") return verify_rewrite_suite();
    if (suite == "oracle") return verify_oracle_suite(n, seed);
    if (suite == "all") {
        Report rep;
        rep.merge(verify_relations_suite(n, max_cosets));
        if (n <= 3) rep.merge(verify_theorems(n, guard));
        rep.merge(verify_normalform_suite(n, seed));
        rep.merge(verify_rewrite_suite());
        if (n <= kMaxOracleQubits) rep.merge(verify_oracle_suite(n, seed));
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + suite +
                                " (expected relations, centralizers, normalform, rewrite, "
                                "oracle, or all)");
}

}  // namespace cliffperm
