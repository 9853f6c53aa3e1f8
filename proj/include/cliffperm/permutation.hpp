#pragma once

// Permutations on the points 1..degree.
//
// Composition is left-to-right to match the tableau convention: the image of
// i under (a then b) is b(a(i)).  Two text formats are supported, disjoint
// cycle notation "(1,5,3)(2,7)" and the one-line image array "5 7 1 2 3 ...",
// both 1-based; cycle output starts each cycle at its smallest point and
// orders cycles by that point, so printing is canonical.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliffperm/orders.hpp"

namespace cliffperm {

enum class PermFormat { Cycles, Arrays };

inline PermFormat perm_format_from_string(const std::string& s) {
    if (s == "cycles") return PermFormat::Cycles;
    if (s == "arrays") return PermFormat::Arrays;
    throw std::invalid_argument("unknown permutation format: " + s);
}

class Permutation {
  public:
    // Identity on `degree` points.
    explicit Permutation(int degree) : images_(static_cast<std::size_t>(require_degree(degree))) {
        for (int i = 0; i < degree; ++i) images_[i] = i + 1;
    }

    // From the 1-based image list: point i maps to images[i-1].
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        const int d = static_cast<int>(images_.size());
        require_degree(d);
        std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
        for (int v : images_) {
            if (v < 1 || v > d || seen[v])
                throw std::invalid_argument("permutation images are not a bijection on 1..degree");
            seen[v] = true;
        }
    }

    static Permutation identity(int degree) { return Permutation(degree); }

    int degree() const { return static_cast<int>(images_.size()); }

    int apply(int point) const {
        if (point < 1 || point > degree())
            throw std::invalid_argument("permutation applied to point outside 1..degree");
        return images_[point - 1];
    }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i + 1) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
        return Permutation(std::move(inv));
    }

    // Exact element order: lcm of the cycle lengths.
    bigint order() const {
        bigint ord = 1;
        std::vector<bool> done(images_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (done[i]) continue;
            bigint len = 0;
            for (int j = i; !done[j]; j = images_[j] - 1) {
                done[j] = true;
                ++len;
            }
            ord = boost::multiprecision::lcm(ord, len);
        }
        return ord;
    }

    // Disjoint cycles, fixed points omitted; the identity prints as "()".
    std::string cycles_str() const {
        std::string out;
        std::vector<bool> done(images_.size(), false);
        for (int i = 0; i < degree(); ++i) {
            if (done[i] || images_[i] == i + 1) continue;
            out.push_back('(');
            bool first = true;
            for (int j = i; !done[j]; j = images_[j] - 1) {
                done[j] = true;
                if (!first) out.push_back(',');
                out += std::to_string(j + 1);
                first = false;
            }
            out.push_back(')');
        }
        if (out.empty()) out = "()";
        return out;
    }

    std::string arrays_str() const {
        std::string out;
        for (int i = 0; i < degree(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(images_[i]);
        }
        return out;
    }

    std::string str(PermFormat format) const {
        return format == PermFormat::Cycles ? cycles_str() : arrays_str();
    }

    // The cycle text does not pin down fixed points, so the degree is explicit.
    static Permutation parse_cycles(const std::string& text, int degree) {
        Permutation p(degree);
        std::vector<bool> used(static_cast<std::size_t>(require_degree(degree)) + 1, false);
        std::size_t pos = 0;
        auto skip_space = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip_space();
        bool any = false;
        while (pos < text.size()) {
            if (text[pos] != '(') throw std::invalid_argument("cycle text: expected '('");
            ++pos;
            std::vector<int> cyc;
            skip_space();
            while (pos < text.size() && text[pos] != ')') {
                std::size_t len = 0;
                int v = 0;
                while (pos + len < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[pos + len])))
                    ++len;
                if (len == 0) throw std::invalid_argument("cycle text: expected a point number");
                v = std::stoi(text.substr(pos, len));
                pos += len;
                if (v < 1 || v > degree || used[v])
                    throw std::invalid_argument("cycle text: point out of range or repeated");
                used[v] = true;
                cyc.push_back(v);
                skip_space();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    skip_space();
                }
            }
            if (pos >= text.size()) throw std::invalid_argument("cycle text: missing ')'");
            ++pos;  // consume ')'
            if (cyc.size() == 1) throw std::invalid_argument("cycle text: singleton cycle");
            for (std::size_t i = 0; i < cyc.size(); ++i)
                p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
            any = true;
            skip_space();
        }
        if (!any) throw std::invalid_argument("cycle text: empty input");
        return p;
    }

    static Permutation parse_arrays(const std::string& text) {
        std::istringstream in(text);
        std::vector<int> images;
        int v = 0;
        while (in >> v) images.push_back(v);
        if (!in.eof()) throw std::invalid_argument("array text: trailing non-numeric input");
        return Permutation(std::move(images));
    }

    static Permutation parse(const std::string& text, PermFormat format, int degree) {
        return format == PermFormat::Cycles ? parse_cycles(text, degree) : parse_arrays(text);
    }

  private:
    static int require_degree(int degree) {
        if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
        return degree;
    }

    std::vector<int> images_;  // images_[i] is the image of point i+1
};

// a then b: the image of i is b(a(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: permutation degree mismatch");
    std::vector<int> images(a.images().size());
    for (int i = 0; i < a.degree(); ++i) images[i] = b.images()[a.images()[i] - 1];
    return Permutation(std::move(images));
}

}  // namespace cliffperm
