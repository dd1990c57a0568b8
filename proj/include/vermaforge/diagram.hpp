#pragma once

// Young diagrams built from column blocks: block height i with multiplicity
// l_i contributes l_i columns of height i. Row lengths of the associated
// partition are the tail sums of the multiplicities.

#include "vermaforge/poly.hpp"
#include "vermaforge/series.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace vermaforge::young {

using exact::Poly;
using exact::Rational;
using exact::RingPtr;

inline RingPtr mu_ring() {
    static RingPtr r = exact::PolyRing::make({"mu"});
    return r;
}

class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::map<int, long> blocks) {
        for (const auto& [h, l] : blocks) {
            if (h < 1) throw std::invalid_argument("Diagram: block height must be >= 1");
            if (l < 0) throw std::invalid_argument("Diagram: negative multiplicity");
            if (l > 0) blocks_[h] = l;
        }
    }

    const std::map<int, long>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    long block(int height) const {
        auto it = blocks_.find(height);
        return it == blocks_.end() ? 0 : it->second;
    }

    int max_height() const { return blocks_.empty() ? 0 : blocks_.rbegin()->first; }

    // Number of cells.
    long size() const {
        long s = 0;
        for (const auto& [h, l] : blocks_) s += static_cast<long>(h) * l;
        return s;
    }

    // Module level of the attached vector: sum of l_i * i^2.
    long weight() const {
        long w = 0;
        for (const auto& [h, l] : blocks_) w += static_cast<long>(h) * h * l;
        return w;
    }

    // Row lengths, weakly decreasing: lambda_r = sum of l_j over j >= r.
    std::vector<long> partition() const {
        std::vector<long> rows;
        int hmax = max_height();
        for (int r = 1; r <= hmax; ++r) {
            long len = 0;
            for (const auto& [h, l] : blocks_)
                if (h >= r) len += l;
            rows.push_back(len);
        }
        return rows;
    }

    long tail_sum(int from) const {
        long s = 0;
        for (const auto& [h, l] : blocks_)
            if (h >= from) s += l;
        return s;
    }

    std::string to_string() const {
        if (blocks_.empty()) return "D{}";
        std::ostringstream out;
        out << "D{";
        bool first = true;
        for (const auto& [h, l] : blocks_) {
            if (!first) out << ",";
            first = false;
            out << h << ":" << l;
        }
        out << "}";
        return out.str();
    }

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.blocks_ == b.blocks_; }
    friend bool operator<(const Diagram& a, const Diagram& b) { return a.blocks_ < b.blocks_; }

private:
    std::map<int, long> blocks_;
};

struct Stats {
    std::vector<long> partition;
    long size = 0;
    long weight = 0;
    int max_height = 0;
    long central_diagonal = 0;
    // diagonal d = column - row  ->  number of cells on it
    std::map<long, long> diagonal_counts;
};

inline Stats stats(const Diagram& d) {
    Stats s;
    s.partition = d.partition();
    s.size = d.size();
    s.weight = d.weight();
    s.max_height = d.max_height();
    for (std::size_t r = 0; r < s.partition.size(); ++r)
        for (long c = 1; c <= s.partition[r]; ++c) s.diagonal_counts[c - static_cast<long>(r) - 1]++;
    auto it = s.diagonal_counts.find(0);
    s.central_diagonal = it == s.diagonal_counts.end() ? 0 : it->second;
    return s;
}

// Monic polynomial whose root at mu = m has multiplicity equal to the number
// of cells on the diagonal d = m: the product over cells of (mu - (c - r)).
inline Poly p_poly(const Diagram& d) {
    RingPtr ring = mu_ring();
    Poly mu = Poly::variable(ring, "mu");
    Poly p = Poly::constant(ring, Rational(1));
    Stats s = stats(d);
    for (const auto& [diag, count] : s.diagonal_counts) {
        Poly f = mu - Poly::constant(ring, Rational(diag));
        p = p * f.pow(static_cast<unsigned long>(count));
    }
    return p;
}

// Same polynomial by the shifting rule: list the column blocks from height 1
// upward, give a block of height k the factor mu(mu+1)...(mu+k-1), and shift
// the argument down by one for every block strictly to its right.
inline Poly p_poly_technique1(const Diagram& d) {
    RingPtr ring = mu_ring();
    Poly mu = Poly::variable(ring, "mu");
    std::vector<int> factors;
    for (const auto& [h, l] : d.blocks())
        for (long i = 0; i < l; ++i) factors.push_back(h);
    Poly p = Poly::constant(ring, Rational(1));
    for (std::size_t pos = 0; pos < factors.size(); ++pos) {
        long shift = static_cast<long>(factors.size() - 1 - pos);
        for (int m = 0; m < factors[pos]; ++m)
            p *= mu + Poly::constant(ring, Rational(m - shift));
    }
    return p;
}

namespace detail {

struct Cell {
    long hook;
    long content;
};

inline std::vector<Cell> cells(const Diagram& d) {
    std::vector<long> part = d.partition();
    std::vector<long> conj;
    if (!part.empty()) {
        conj.assign(static_cast<std::size_t>(part[0]), 0);
        for (long len : part)
            for (long c = 0; c < len; ++c) conj[static_cast<std::size_t>(c)]++;
    }
    std::vector<Cell> out;
    for (std::size_t r = 0; r < part.size(); ++r) {
        for (long c = 1; c <= part[r]; ++c) {
            long arm = part[r] - c;
            long leg = conj[static_cast<std::size_t>(c - 1)] - static_cast<long>(r) - 1;
            out.push_back({arm + leg + 1, c - static_cast<long>(r) - 1});
        }
    }
    return out;
}

inline qseries::Series geometric_inverse(int order, long exp) {
    // 1 / (1 - q^exp)
    qseries::ProductSpec spec;
    spec.factors.push_back({0, exp, 1});
    return qseries::series_from_product(spec, order);
}

}  // namespace detail

// Normalized principal-specialization character. Infinite form: product over
// cells of 1/(1 - q^hook). Finite form for n rows: product over cells of
// (1 - q^{n + content}) / (1 - q^hook).
inline qseries::Series chi_series(const Diagram& d, int order, std::optional<int> nrows = {}) {
    if (nrows) {
        long rows = static_cast<long>(d.partition().size());
        if (rows > *nrows) throw std::invalid_argument("chi_series: diagram too tall for given n");
    }
    qseries::ProductSpec spec;
    for (const auto& cell : detail::cells(d)) {
        spec.factors.push_back({0, cell.hook, 1});
        if (nrows) spec.factors.push_back({0, *nrows + cell.content, -1});
    }
    return qseries::series_from_product(spec, order);
}

// Lower/upper bounds on tail sums of block multiplicities.
struct DiagramFilter {
    struct TailBound {
        int from;
        std::optional<long> min;
        std::optional<long> max;
    };
    std::vector<TailBound> bounds;

    bool admits(const Diagram& d) const {
        for (const auto& b : bounds) {
            long s = d.tail_sum(b.from);
            if (b.min && s < *b.min) return false;
            if (b.max && s > *b.max) return false;
        }
        return true;
    }
};

namespace detail {

inline void enumerate_rec(long budget, int height, std::map<int, long>& acc,
                          std::vector<Diagram>& out) {
    if (height == 0) {
        out.emplace_back(acc);
        return;
    }
    long hh = static_cast<long>(height) * height;
    for (long l = 0; l * hh <= budget; ++l) {
        if (l > 0) acc[height] = l;
        enumerate_rec(budget - l * hh, height - 1, acc, out);
        if (l > 0) acc.erase(height);
    }
}

}  // namespace detail

// All diagrams of weight <= maxWeight satisfying the filter, sorted by
// (weight, block map) for a reproducible order.
inline std::vector<Diagram> enumerate_diagrams(long maxWeight, const DiagramFilter* filter = nullptr) {
    if (maxWeight < 0) throw std::invalid_argument("enumerate_diagrams: negative weight bound");
    int hmax = 0;
    while (static_cast<long>(hmax + 1) * (hmax + 1) <= maxWeight) ++hmax;
    std::map<int, long> acc;
    std::vector<Diagram> all;
    detail::enumerate_rec(maxWeight, hmax, acc, all);
    std::vector<Diagram> out;
    for (auto& d : all)
        if (!filter || filter->admits(d)) out.push_back(std::move(d));
    std::sort(out.begin(), out.end(), [](const Diagram& a, const Diagram& b) {
        long wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

}  // namespace vermaforge::young
