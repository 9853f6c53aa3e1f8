#pragma once

// Conjugacy-class indexing for the permutation embedding.
//
// enumerate_class closes a seed tableau under conjugation by the standard
// generators and labels the resulting class with 1-based points ordered by
// canonical key, so every export is bit-stable across runs and platforms.
// permutation_of extracts the permutation a group element induces on the
// class by conjugation (right action g^-1 v g, matching left-to-right
// products).  A small text cache format stores the key list for reuse;
// loading revalidates closure rather than trusting the file.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cliffperm/permutation.hpp"
#include "cliffperm/tableau.hpp"
#include "cliffperm/word.hpp"

namespace cliffperm {

// Thrown when a configured size guard is exceeded; distinct from logic and
// input errors so callers can map it to a capacity exit code.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

inline std::string from_hex(const std::string& hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) throw std::invalid_argument("hex string has odd length");
    std::string out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = nibble(hex[i]);
        const int lo = nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("hex string has a non-hex digit");
        out.push_back(static_cast<char>((hi << 4) | lo));
    }
    return out;
}

}  // namespace detail

class ClassIndex {
  public:
    // Takes ownership of a complete class; sorts by canonical key and builds
    // the key -> 1-based point lookup.  Closure is the caller's obligation
    // (enumerate_class guarantees it; validate_closure re-checks).
    ClassIndex(int n, CliffordTableau seed, std::vector<CliffordTableau> elements)
        : n_(n), seed_(std::move(seed)), elements_(std::move(elements)) {
        if (seed_.num_qubits() != n_)
            throw std::invalid_argument("class index: seed qubit count mismatch");
        std::sort(elements_.begin(), elements_.end(),
                  [](const CliffordTableau& a, const CliffordTableau& b) {
                      return a.canonical_key() < b.canonical_key();
                  });
        lookup_.reserve(elements_.size());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i].num_qubits() != n_)
                throw std::invalid_argument("class index: element qubit count mismatch");
            if (!lookup_.emplace(elements_[i].canonical_key(), static_cast<int>(i) + 1).second)
                throw std::invalid_argument("class index: duplicate element");
        }
        if (find(seed_.canonical_key()) == 0)
            throw std::invalid_argument("class index: seed is not among the elements");
    }

    int num_qubits() const { return n_; }
    const CliffordTableau& seed() const { return seed_; }
    const std::vector<CliffordTableau>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    // 1-based point of the element with this canonical key, or 0 if absent.
    int find(const std::string& key) const {
        auto it = lookup_.find(key);
        return it == lookup_.end() ? 0 : it->second;
    }

    int point_of(const CliffordTableau& t) const {
        const int p = find(t.canonical_key());
        if (p == 0) throw std::invalid_argument("class index: element not in the class");
        return p;
    }

    const CliffordTableau& element(int point) const {
        if (point < 1 || point > static_cast<int>(elements_.size()))
            throw std::invalid_argument("class index: point outside 1..size");
        return elements_[point - 1];
    }

    // Re-checks that the class is closed under conjugation by every standard
    // generator (used after loading a cache file).
    bool validate_closure() const {
        for (const auto& [name, w] : standard_generators(n_)) {
            const CliffordTableau g = word_eval(w);
            const CliffordTableau gi = g.inverse();
            for (const auto& v : elements_) {
                if (find(compose(compose(gi, v), g).canonical_key()) == 0) return false;
            }
        }
        return true;
    }

  private:
    int n_;
    CliffordTableau seed_;
    std::vector<CliffordTableau> elements_;
    std::unordered_map<std::string, int> lookup_;
};

// Breadth-first closure of {seed} under v -> g^-1 v g over the standard
// generators in their fixed order, queue discipline.  Throws capacity_error
// if the class would exceed `guard` elements.
inline ClassIndex enumerate_class(const CliffordTableau& seed, std::size_t guard = 1000000) {
    const int n = seed.num_qubits();
    std::vector<std::pair<CliffordTableau, CliffordTableau>> gens;  // (g, g^-1)
    for (const auto& [name, w] : standard_generators(n)) {
        CliffordTableau g = word_eval(w);
        CliffordTableau gi = g.inverse();
        gens.emplace_back(std::move(g), std::move(gi));
    }
    std::vector<CliffordTableau> elems{seed};
    std::unordered_set<std::string> seen{seed.canonical_key()};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        const CliffordTableau cur = elems[head];  // copy: elems may reallocate
        for (const auto& [g, gi] : gens) {
            CliffordTableau next = compose(compose(gi, cur), g);
            if (seen.insert(next.canonical_key()).second) {
                if (elems.size() + 1 > guard)
                    throw capacity_error("class closure exceeded guard of " +
                                         std::to_string(guard) + " elements");
                elems.push_back(std::move(next));
            }
        }
    }
    return ClassIndex(n, seed, std::move(elems));
}

// The permutation sigma_g: point i maps to the point of g^-1 * element(i) * g.
inline Permutation permutation_of(const CliffordTableau& g, const ClassIndex& idx) {
    if (g.num_qubits() != idx.num_qubits())
        throw std::invalid_argument("permutation_of: qubit count mismatch");
    const CliffordTableau gi = g.inverse();
    std::vector<int> images(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const int p = idx.find(compose(compose(gi, idx.elements()[i]), g).canonical_key());
        if (p == 0)
            throw std::logic_error("class index corruption: conjugate left the class");
        images[i] = p;
    }
    return Permutation(std::move(images));
}

// One line per standard generator, in the fixed generator order.
inline std::string export_generators(const ClassIndex& idx, PermFormat format) {
    std::string out;
    for (const auto& [name, w] : standard_generators(idx.num_qubits())) {
        out += permutation_of(word_eval(w), idx).str(format);
        out.push_back('\n');
    }
    return out;
}

// Cache format: one header line, then one lowercase-hex canonical key per
// element in point order.
inline std::string class_cache_text(const ClassIndex& idx) {
    std::string out = "cliffperm-class v1 n=" + std::to_string(idx.num_qubits()) +
                      " size=" + std::to_string(idx.size()) +
                      " seed=" + detail::to_hex(idx.seed().canonical_key()) + "\n";
    for (const auto& v : idx.elements()) {
        out += detail::to_hex(v.canonical_key());
        out.push_back('\n');
    }
    return out;
}

inline void save_class_cache(const ClassIndex& idx, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << class_cache_text(idx);
    if (!out) throw std::runtime_error("cache write failed: " + path);
}

// Parses and revalidates a cache file: element count, key shapes, seed
// membership, and closure under the standard generators must all hold.
inline ClassIndex load_class_cache_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag, version, n_field, size_field, seed_field;
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("class cache: empty file");
    {
        std::istringstream h(header);
        if (!(h >> tag >> version >> n_field >> size_field >> seed_field) ||
            tag != "cliffperm-class" || version != "v1" || n_field.rfind("n=", 0) != 0 ||
            size_field.rfind("size=", 0) != 0 || seed_field.rfind("seed=", 0) != 0)
            throw std::runtime_error("class cache: malformed header");
    }
    const int n = std::stoi(n_field.substr(2));
    const std::size_t m = static_cast<std::size_t>(std::stoull(size_field.substr(5)));
    CliffordTableau seed = CliffordTableau::from_canonical_key(
        detail::from_hex(seed_field.substr(5)), n);
    std::vector<CliffordTableau> elems;
    elems.reserve(m);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        elems.push_back(CliffordTableau::from_canonical_key(detail::from_hex(line), n));
    }
    if (elems.size() != m) throw std::runtime_error("class cache: element count mismatch");
    ClassIndex idx(n, std::move(seed), std::move(elems));
    if (!idx.validate_closure())
        throw std::runtime_error("class cache: key list is not closed under conjugation");
    return idx;
}

inline ClassIndex load_class_cache(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open cache file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_class_cache_text(buf.str());
}

}  // namespace cliffperm
