// Exact arithmetic for finite abelian groups G = Z_{n_1} x ... x Z_{n_k},
// their duals (via the explicit pairing chi_a(x) = e(sum a_i x_i / n_i)),
// and integer-matrix endomorphisms with image-index bookkeeping.
//
// Elements are residue tuples; everywhere that counts, elements are handled
// as flat indices in [0, |G|) with mixed-radix encoding (last coordinate
// fastest). All values are immutable after construction and all operations
// are pure.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "abel/common.hpp"

namespace abel {

struct Element {
    std::vector<int64_t> coords;
    bool operator==(const Element&) const = default;
};

// Same coordinate shape as Element; self-duality of finite abelian groups.
struct DualElement {
    std::vector<int64_t> coords;
    bool operator==(const DualElement&) const = default;
};

class GroupSpec {
  public:
    static constexpr int64_t kDefaultCap = int64_t{1} << 22;

    explicit GroupSpec(std::vector<int64_t> orders, int64_t cap = kDefaultCap)
        : orders_(std::move(orders)) {
        if (orders_.empty()) throw argument_error("group needs at least one cyclic factor");
        cardinality_ = 1;
        for (int64_t n : orders_) {
            if (n < 1) throw argument_error("cyclic order must be >= 1");
            if (cardinality_ > cap / n) throw resource_error("group cardinality exceeds cap");
            cardinality_ *= n;
        }
        strides_.assign(orders_.size(), 1);
        for (size_t i = orders_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * orders_[i];
        exponent_ = 1;
        for (int64_t n : orders_) exponent_ = std::lcm(exponent_, n);
    }

    size_t rank() const { return orders_.size(); }
    int64_t order(size_t i) const { return orders_[i]; }
    const std::vector<int64_t>& orders() const { return orders_; }
    int64_t cardinality() const { return cardinality_; }
    int64_t exponent() const { return exponent_; }

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    int64_t reduce_coord(size_t i, int64_t v) const {
        int64_t n = orders_[i];
        v %= n;
        return v < 0 ? v + n : v;
    }

    Element reduce(Element x) const {
        check_shape(x.coords);
        for (size_t i = 0; i < orders_.size(); ++i) x.coords[i] = reduce_coord(i, x.coords[i]);
        return x;
    }

    int64_t index_of(const Element& x) const {
        check_shape(x.coords);
        int64_t idx = 0;
        for (size_t i = 0; i < orders_.size(); ++i) idx += reduce_coord(i, x.coords[i]) * strides_[i];
        return idx;
    }

    Element element_at(int64_t idx) const {
        Element x;
        x.coords.resize(orders_.size());
        for (size_t i = 0; i < orders_.size(); ++i) {
            x.coords[i] = (idx / strides_[i]) % orders_[i];
        }
        return x;
    }

    int64_t zero_index() const { return 0; }

    int64_t add_index(int64_t a, int64_t b) const {
        int64_t out = 0;
        for (size_t i = 0; i < orders_.size(); ++i) {
            int64_t ai = (a / strides_[i]) % orders_[i];
            int64_t bi = (b / strides_[i]) % orders_[i];
            int64_t s = ai + bi;
            if (s >= orders_[i]) s -= orders_[i];
            out += s * strides_[i];
        }
        return out;
    }

    int64_t neg_index(int64_t a) const {
        int64_t out = 0;
        for (size_t i = 0; i < orders_.size(); ++i) {
            int64_t ai = (a / strides_[i]) % orders_[i];
            out += (ai == 0 ? 0 : orders_[i] - ai) * strides_[i];
        }
        return out;
    }

    int64_t sub_index(int64_t a, int64_t b) const { return add_index(a, neg_index(b)); }

    // Pairing phase <a, x> = sum a_i x_i / n_i as an exact residue num/exponent.
    int64_t pairing_phase_num(const DualElement& a, const Element& x) const {
        check_shape(a.coords);
        check_shape(x.coords);
        int64_t num = 0;
        for (size_t i = 0; i < orders_.size(); ++i) {
            int64_t t = (reduce_coord(i, a.coords[i]) * reduce_coord(i, x.coords[i])) % exponent_;
            num = (num + t * (exponent_ / orders_[i])) % exponent_;
        }
        return num;
    }

    cplx character(const DualElement& a, const Element& x) const {
        int64_t num = pairing_phase_num(a, x);
        return std::polar(1.0, kTwoPi * static_cast<double>(num) / static_cast<double>(exponent_));
    }

    // |chi_a(x) - 1|, computed so that equal rational phases give bit-identical
    // doubles (needed for exact strict-inequality Bohr membership).
    double char_dist(const DualElement& a, const Element& x) const {
        return root_of_unity_dist(pairing_phase_num(a, x), exponent_);
    }

    double char_dist_index(int64_t a_idx, int64_t x_idx) const {
        DualElement a{element_at(a_idx).coords};
        return char_dist(a, element_at(x_idx));
    }

    // |e(num/den) - 1| with the phase folded into [0, 1/2] and reduced.
    static double root_of_unity_dist(int64_t num, int64_t den) {
        num %= den;
        if (num < 0) num += den;
        num = std::min(num, den - num);
        if (num == 0) return 0.0;
        int64_t g = std::gcd(num, den);
        return 2.0 * std::sin(M_PI * static_cast<double>(num / g) / static_cast<double>(den / g));
    }

    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < orders_.size(); ++i) {
            if (i) s += "x";
            s += "Z" + std::to_string(orders_[i]);
        }
        return s;
    }

    // Accepts "Z8", "Z8xZ8", "Z2^10" (and mixes like "Z4xZ3^2").
    static GroupSpec parse(const std::string& text, int64_t cap = kDefaultCap) {
        std::vector<int64_t> orders;
        size_t i = 0;
        while (i < text.size()) {
            if (text[i] == 'x' || text[i] == 'X' || text[i] == '*') ++i;
            if (i >= text.size() || (text[i] != 'Z' && text[i] != 'z'))
                throw argument_error("bad group literal: " + text);
            ++i;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw argument_error("bad group literal: " + text);
            int64_t n = std::stoll(text.substr(i, j - i));
            int64_t reps = 1;
            i = j;
            if (i < text.size() && text[i] == '^') {
                ++i;
                j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw argument_error("bad group literal: " + text);
                reps = std::stoll(text.substr(i, j - i));
                i = j;
            }
            for (int64_t r = 0; r < reps; ++r) orders.push_back(n);
        }
        if (orders.empty()) throw argument_error("bad group literal: " + text);
        return GroupSpec(std::move(orders), cap);
    }

  private:
    void check_shape(const std::vector<int64_t>& c) const {
        if (c.size() != orders_.size()) throw argument_error("coordinate shape mismatch");
    }

    std::vector<int64_t> orders_;
    std::vector<int64_t> strides_;
    int64_t cardinality_ = 1;
    int64_t exponent_ = 1;
};

// A homomorphism G -> G given by an integer matrix M acting by
// apply(M, x)_i = sum_j M[i][j] x_j mod n_i. Well-definedness requires the
// compatibility condition M[i][j] n_j = 0 mod n_i for all i, j; the
// constructor rejects exactly the matrices violating it.
class Endomorphism {
  public:
    Endomorphism(GroupSpec domain, std::vector<int64_t> row_major)
        : domain_(std::move(domain)), m_(std::move(row_major)) {
        size_t k = domain_.rank();
        if (m_.size() != k * k) throw argument_error("endomorphism matrix shape mismatch");
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < k; ++j) {
                int64_t ni = domain_.order(i);
                int64_t e = m_[i * k + j] % ni;
                if (e < 0) e += ni;
                m_[i * k + j] = e;
                if ((e * domain_.order(j)) % ni != 0)
                    throw argument_error("incompatible endomorphism entry at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    const GroupSpec& domain() const { return domain_; }
    int64_t entry(size_t i, size_t j) const { return m_[i * domain_.rank() + j]; }
    const std::vector<int64_t>& entries() const { return m_; }

    bool operator==(const Endomorphism& o) const {
        return domain_ == o.domain_ && m_ == o.m_;
    }

    static Endomorphism identity(const GroupSpec& g) { return dilation(g, 1); }
    static Endomorphism zero(const GroupSpec& g) { return dilation(g, 0); }

    static Endomorphism dilation(const GroupSpec& g, int64_t c) {
        size_t k = g.rank();
        std::vector<int64_t> m(k * k, 0);
        for (size_t i = 0; i < k; ++i) m[i * k + i] = c;
        return Endomorphism(g, std::move(m));
    }

    Element apply(const Element& x) const {
        size_t k = domain_.rank();
        if (x.coords.size() != k) throw argument_error("element shape mismatch");
        Element y;
        y.coords.assign(k, 0);
        for (size_t i = 0; i < k; ++i) {
            int64_t ni = domain_.order(i);
            int64_t acc = 0;
            for (size_t j = 0; j < k; ++j)
                acc = (acc + entry(i, j) * domain_.reduce_coord(j, x.coords[j])) % ni;
            y.coords[i] = acc;
        }
        return y;
    }

    int64_t apply_index(int64_t idx) const { return domain_.index_of(apply(domain_.element_at(idx))); }

    Endomorphism operator+(const Endomorphism& o) const { return combine(o, +1); }
    Endomorphism operator-(const Endomorphism& o) const { return combine(o, -1); }
    Endomorphism operator-() const { return Endomorphism::zero(domain_).combine(*this, -1); }

  private:
    Endomorphism combine(const Endomorphism& o, int64_t sign) const {
        if (domain_ != o.domain_) throw argument_error("endomorphism domain mismatch");
        std::vector<int64_t> m(m_.size());
        for (size_t t = 0; t < m_.size(); ++t) m[t] = m_[t] + sign * o.m_[t];
        return Endomorphism(domain_, std::move(m));
    }

    GroupSpec domain_;
    std::vector<int64_t> m_;
};

inline Element apply(const Endomorphism& phi, const Element& x) { return phi.apply(x); }

// phi o psi (apply psi first).
inline Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
    if (phi.domain() != psi.domain()) throw argument_error("endomorphism domain mismatch");
    const GroupSpec& g = phi.domain();
    size_t k = g.rank();
    std::vector<int64_t> m(k * k, 0);
    for (size_t i = 0; i < k; ++i) {
        int64_t ni = g.order(i);
        for (size_t j = 0; j < k; ++j) {
            int64_t acc = 0;
            for (size_t l = 0; l < k; ++l) acc = (acc + phi.entry(i, l) * psi.entry(l, j)) % ni;
            m[i * k + j] = acc;
        }
    }
    return Endomorphism(g, std::move(m));
}

inline bool commutes(const Endomorphism& phi, const Endomorphism& psi) {
    return compose(phi, psi) == compose(psi, phi);
}

// Full index->index action table; the workhorse for enumeration loops.
inline std::vector<int64_t> apply_table(const Endomorphism& phi) {
    const GroupSpec& g = phi.domain();
    int64_t n = g.cardinality();
    std::vector<int64_t> t(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) t[static_cast<size_t>(i)] = phi.apply_index(i);
    return t;
}

// [G : phi(G)] by exhaustive image enumeration.
inline int64_t image_index(const Endomorphism& phi) {
    const GroupSpec& g = phi.domain();
    int64_t n = g.cardinality();
    std::vector<uint8_t> hit(static_cast<size_t>(n), 0);
    int64_t count = 0;
    for (int64_t i = 0; i < n; ++i) {
        int64_t y = phi.apply_index(i);
        if (!hit[static_cast<size_t>(y)]) {
            hit[static_cast<size_t>(y)] = 1;
            ++count;
        }
    }
    return n / count;
}

// chi_b = chi_a o phi; b_j = sum_i a_i M[i][j] n_j / n_i mod n_j, an integer
// by the compatibility condition.
inline DualElement dual_map(const Endomorphism& phi, const DualElement& a) {
    const GroupSpec& g = phi.domain();
    size_t k = g.rank();
    if (a.coords.size() != k) throw argument_error("dual element shape mismatch");
    DualElement b;
    b.coords.assign(k, 0);
    for (size_t j = 0; j < k; ++j) {
        int64_t nj = g.order(j);
        int64_t acc = 0;
        for (size_t i = 0; i < k; ++i) {
            int64_t step = (phi.entry(i, j) * nj) / g.order(i);  // integer by compatibility
            acc = (acc + g.reduce_coord(i, a.coords[i]) * step) % nj;
        }
        b.coords[j] = acc;
    }
    return b;
}

// The endomorphism of the (coordinate-identified) dual group induced by phi,
// i.e. dual_matrix(phi).apply(a) == dual_map(phi, a) for all a.
inline Endomorphism dual_matrix(const Endomorphism& phi) {
    const GroupSpec& g = phi.domain();
    size_t k = g.rank();
    std::vector<int64_t> m(k * k, 0);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < k; ++i)
            m[j * k + i] = (phi.entry(i, j) * g.order(j)) / g.order(i);
    return Endomorphism(g, std::move(m));
}

// Checks that uniform measure pushes forward to uniform measure on phi(G),
// i.e. all nonempty fibers have the same size.
inline bool pushforward_check(const Endomorphism& phi) {
    const GroupSpec& g = phi.domain();
    int64_t n = g.cardinality();
    std::vector<int64_t> fiber(static_cast<size_t>(n), 0);
    for (int64_t i = 0; i < n; ++i) ++fiber[static_cast<size_t>(phi.apply_index(i))];
    int64_t sz = 0;
    for (int64_t f : fiber) {
        if (f == 0) continue;
        if (sz == 0) sz = f;
        if (f != sz) return false;
    }
    return true;
}

// Set images/preimages as sorted index vectors.
inline std::vector<int64_t> image_of_set(const Endomorphism& phi, const std::vector<int64_t>& set) {
    std::vector<int64_t> out;
    out.reserve(set.size());
    for (int64_t i : set) out.push_back(phi.apply_index(i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<int64_t> preimage_of_set(const Endomorphism& phi, const std::vector<int64_t>& set) {
    const GroupSpec& g = phi.domain();
    int64_t n = g.cardinality();
    std::vector<uint8_t> in(static_cast<size_t>(n), 0);
    for (int64_t i : set) in[static_cast<size_t>(i)] = 1;
    std::vector<int64_t> out;
    for (int64_t i = 0; i < n; ++i)
        if (in[static_cast<size_t>(phi.apply_index(i))]) out.push_back(i);
    return out;
}

// Row-major matrix literal: "1,0;0,1". Also accepts "id", "zero", and a bare
// integer for a dilation.
inline Endomorphism parse_endomorphism(const GroupSpec& g, const std::string& text) {
    if (text == "id") return Endomorphism::identity(g);
    if (text == "zero" || text == "0") return Endomorphism::zero(g);
    if (text.find(';') == std::string::npos && text.find(',') == std::string::npos)
        return Endomorphism::dilation(g, std::stoll(text));
    std::vector<int64_t> m;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find_first_of(",;", pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (!tok.empty()) m.push_back(std::stoll(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Endomorphism(g, std::move(m));
}

}  // namespace abel
