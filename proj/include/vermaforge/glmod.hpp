#pragma once

// The gl(2n) module induced from the largest parabolic: explicit polynomial
// model on the lowering block, contravariant Gram matrices polynomial in the
// central parameter mu, singular vector tests, and the deformation
// filtration at integer parameter values.
//
// Conventions. Matrix units E_{ab} with 1 <= a,b <= 2n and bracket
// [E_ab, E_cd] = d_bc E_ad - d_da E_cb. The lowering block variable y_{ij}
// (1 <= i,j <= n) is E_{n+i, n+1-j}, so deg y_{ij} = i + j - 1 and the
// raising ladder is E_{m,m+1}, m = 1..2n-1. The highest weight vector is
// killed by the raising side and by the strictly triangular parts of both
// diagonal gl_n blocks; E_aa acts by mu (+ an optional trace shift) for
// a <= n and by the trace shift alone for a > n.

#include "vermaforge/diagram.hpp"
#include "vermaforge/linalg.hpp"
#include "vermaforge/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vermaforge::glmod {

using exact::Matrix;
using exact::Poly;
using exact::Rational;
using exact::RingPtr;

using YMono = std::vector<std::uint16_t>;

class ModuleElement {
public:
    std::map<YMono, Poly> t;

    bool is_zero() const { return t.empty(); }

    void add(const YMono& m, const Poly& c) {
        if (c.is_zero()) return;
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    ModuleElement& operator+=(const ModuleElement& o) {
        for (const auto& [m, c] : o.t) add(m, c);
        return *this;
    }
    ModuleElement& operator-=(const ModuleElement& o) {
        for (const auto& [m, c] : o.t) add(m, -c);
        return *this;
    }
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement& operator*=(const Poly& c) {
        if (c.is_zero()) {
            t.clear();
            return *this;
        }
        for (auto& [m, v] : t) v = v * c;
        return *this;
    }

    friend ModuleElement operator*(const ModuleElement& a, const ModuleElement& b) {
        ModuleElement r;
        for (const auto& [ma, ca] : a.t) {
            for (const auto& [mb, cb] : b.t) {
                YMono m = ma;
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] = static_cast<std::uint16_t>(m[i] + mb[i]);
                r.add(m, ca * cb);
            }
        }
        return r;
    }
};

struct WeightBlock {
    std::vector<YMono> basis;
    Matrix<Poly> gram;
    Poly det;
};

struct LevelBlocks {
    std::vector<YMono> basis;  // block-contiguous
    std::vector<WeightBlock> blocks;
};

struct GramReport {
    int n = 0;
    int level = 0;
    std::vector<std::string> basis;
    Matrix<Poly> gram;
    Poly det;
    std::vector<std::pair<long, int>> roots;  // (integer root, multiplicity)
    std::string det_factored;
};

class AlgebraContext {
public:
    explicit AlgebraContext(int n, Rational trace_shift = Rational(0))
        : n_(n), shift_(std::move(trace_shift)), ring_(young::mu_ring()) {
        if (n < 1) throw std::invalid_argument("AlgebraContext: n must be >= 1");
    }

    int n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const Rational& trace_shift() const { return shift_; }

    int var_index(int i, int j) const { return (i - 1) * n_ + (j - 1); }
    int var_i(int v) const { return v / n_ + 1; }
    int var_j(int v) const { return v % n_ + 1; }
    int var_grading(int v) const { return var_i(v) + var_j(v) - 1; }

    YMono empty_mono() const { return YMono(static_cast<std::size_t>(n_) * n_, 0); }

    ModuleElement highest_weight_vector() const {
        ModuleElement e;
        e.add(empty_mono(), Poly::constant(ring_, Rational(1)));
        return e;
    }

    mutable std::map<int, LevelBlocks> level_cache;
    mutable std::map<std::pair<std::string, int>, long> slice_cache;

private:
    int n_;
    Rational shift_;
    RingPtr ring_;
};

inline long mono_level(const AlgebraContext& ctx, const YMono& m) {
    long lv = 0;
    for (std::size_t v = 0; v < m.size(); ++v)
        lv += static_cast<long>(m[v]) * ctx.var_grading(static_cast<int>(v));
    return lv;
}

inline std::vector<int> mono_weight(const AlgebraContext& ctx, const YMono& m) {
    std::vector<int> w(static_cast<std::size_t>(2 * ctx.n()), 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        int i = ctx.var_i(static_cast<int>(v));
        int j = ctx.var_j(static_cast<int>(v));
        w[static_cast<std::size_t>(ctx.n() + i - 1)] += m[v];
        w[static_cast<std::size_t>(ctx.n() - j)] -= m[v];
    }
    return w;
}

inline std::string mono_to_string(const AlgebraContext& ctx, const YMono& m) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "y" << ctx.var_i(static_cast<int>(v)) << ctx.var_j(static_cast<int>(v));
        if (m[v] > 1) out << "^" << m[v];
    }
    if (first) out << "1";
    return out.str();
}

namespace detail {

inline std::vector<int> mono_factors(const YMono& m) {
    std::vector<int> f;
    for (std::size_t v = 0; v < m.size(); ++v)
        for (int k = 0; k < m[v]; ++k) f.push_back(static_cast<int>(v));
    return f;
}

inline YMono factors_to_mono(const AlgebraContext& ctx, const std::vector<int>& f, std::size_t pos,
                             int extra_var = -1) {
    YMono m = ctx.empty_mono();
    for (std::size_t k = pos; k < f.size(); ++k) m[static_cast<std::size_t>(f[k])]++;
    if (extra_var >= 0) m[static_cast<std::size_t>(extra_var)]++;
    return m;
}

// Action of E_{ab} on (y_{f[pos]} ... y_{f[end]}) v.
inline ModuleElement act_suffix(const AlgebraContext& ctx, int a, int b,
                                const std::vector<int>& f, std::size_t pos) {
    const int n = ctx.n();
    ModuleElement res;
    if (a == b) {
        // Diagonal elements act on monomials by a scalar.
        Poly scalar = Poly::constant(ctx.ring(), ctx.trace_shift());
        if (a <= n) scalar += Poly::variable(ctx.ring(), "mu");
        long wt = 0;
        for (std::size_t k = pos; k < f.size(); ++k) {
            int i = ctx.var_i(f[k]), j = ctx.var_j(f[k]);
            if (a == n + i) ++wt;
            if (a == n + 1 - j) --wt;
        }
        scalar += Poly::constant(ctx.ring(), Rational(wt));
        res.add(factors_to_mono(ctx, f, pos), scalar);
        return res;
    }
    if (a > n && b <= n) {
        // Lowering block: multiplication by y_{a-n, n+1-b}.
        res.add(factors_to_mono(ctx, f, pos, ctx.var_index(a - n, n + 1 - b)),
                Poly::constant(ctx.ring(), Rational(1)));
        return res;
    }
    if (pos == f.size()) return res;  // raising side and strict triangles kill v

    int i0 = ctx.var_i(f[pos]), j0 = ctx.var_j(f[pos]);
    int c = n + i0, d = n + 1 - j0;  // y factor as E_{cd}
    if (b == c) res += act_suffix(ctx, a, d, f, pos + 1);
    if (d == a) res -= act_suffix(ctx, c, b, f, pos + 1);
    ModuleElement tail = act_suffix(ctx, a, b, f, pos + 1);
    for (const auto& [m, coeff] : tail.t) {
        YMono mm = m;
        mm[static_cast<std::size_t>(f[pos])]++;
        res.add(mm, coeff);
    }
    return res;
}

}  // namespace detail

inline ModuleElement act(const AlgebraContext& ctx, int a, int b, const ModuleElement& x) {
    if (a < 1 || b < 1 || a > 2 * ctx.n() || b > 2 * ctx.n())
        throw std::invalid_argument("act: index out of range");
    ModuleElement res;
    for (const auto& [m, coeff] : x.t) {
        std::vector<int> f = detail::mono_factors(m);
        ModuleElement part = detail::act_suffix(ctx, a, b, f, 0);
        part *= coeff;
        res += part;
    }
    return res;
}

// Determinant of the k x k corner of the lowering block, with the column
// order reversed relative to row order; Det_1 = y11, Det_2 = y12 y21 - y11 y22.
inline ModuleElement det_element(const AlgebraContext& ctx, int k) {
    if (k < 1 || k > ctx.n()) throw std::invalid_argument("det_element: need 1 <= k <= n");
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    ModuleElement res;
    int reversal = (k * (k - 1) / 2) % 2;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
        YMono m = ctx.empty_mono();
        for (int i = 0; i < k; ++i)
            m[static_cast<std::size_t>(ctx.var_index(i + 1, perm[static_cast<std::size_t>(i)]))]++;
        Rational sign(((inv + reversal) % 2 == 0) ? 1 : -1);
        res.add(m, Poly::constant(ctx.ring(), sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

inline ModuleElement diagram_element(const AlgebraContext& ctx, const young::Diagram& d) {
    ModuleElement res = ctx.highest_weight_vector();
    for (const auto& [h, l] : d.blocks()) {
        ModuleElement dk = det_element(ctx, h);
        for (long m = 0; m < l; ++m) res = res * dk;
    }
    return res;
}

namespace detail {

inline void basis_rec(const AlgebraContext& ctx, int v, long budget, YMono& acc,
                      std::vector<YMono>& out) {
    if (v < 0) {
        if (budget == 0) out.push_back(acc);
        return;
    }
    long g = ctx.var_grading(v);
    for (long e = 0; e * g <= budget; ++e) {
        acc[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
        basis_rec(ctx, v - 1, budget - e * g, acc, out);
    }
    acc[static_cast<std::size_t>(v)] = 0;
}

}  // namespace detail

inline std::vector<YMono> basis(const AlgebraContext& ctx, int level) {
    if (level < 0) throw std::invalid_argument("basis: negative level");
    YMono acc = ctx.empty_mono();
    std::vector<YMono> out;
    detail::basis_rec(ctx, ctx.n() * ctx.n() - 1, level, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

// True iff every raising ladder operator E_{m,m+1} kills the vector, at the
// given parameter value or identically in mu.
inline bool is_singular(const AlgebraContext& ctx, const ModuleElement& v,
                        std::optional<Rational> mu0 = {}) {
    for (int m = 1; m < 2 * ctx.n(); ++m) {
        ModuleElement r = act(ctx, m, m + 1, v);
        for (const auto& [mono, coeff] : r.t) {
            if (mu0) {
                if (!coeff.eval_all({{"mu", *mu0}}).is_zero()) return false;
            } else if (!coeff.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

namespace detail {

inline Poly gram_entry(const AlgebraContext& ctx, const YMono& bi, const YMono& bj) {
    ModuleElement w;
    w.add(bj, Poly::constant(ctx.ring(), Rational(1)));
    for (int v : mono_factors(bi)) {
        int i = ctx.var_i(v), j = ctx.var_j(v);
        w = act(ctx, ctx.n() + 1 - j, ctx.n() + i, w);  // transpose of y_{ij}
        if (w.is_zero()) break;
    }
    Poly entry = Poly::zero(ctx.ring());
    YMono empty = ctx.empty_mono();
    for (const auto& [m, c] : w.t) {
        if (m == empty)
            entry = c;
        else
            throw std::logic_error("gram_entry: contraction left a nonscalar term");
    }
    return entry;
}

}  // namespace detail

inline const LevelBlocks& level_blocks(const AlgebraContext& ctx, int level) {
    auto it = ctx.level_cache.find(level);
    if (it != ctx.level_cache.end()) return it->second;

    std::vector<YMono> all = basis(ctx, level);
    std::map<std::vector<int>, std::vector<YMono>> grouped;
    for (const auto& m : all) grouped[mono_weight(ctx, m)].push_back(m);

    LevelBlocks lb;
    for (auto& [w, monos] : grouped) {
        WeightBlock blk;
        blk.basis = monos;
        std::size_t d = monos.size();
        blk.gram = Matrix<Poly>(d, d, Poly::zero(ctx.ring()));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i; j < d; ++j) {
                Poly e = detail::gram_entry(ctx, monos[i], monos[j]);
                blk.gram.at(i, j) = e;
                if (i != j) blk.gram.at(j, i) = e;
            }
        }
        blk.det = exact::bareiss_det(blk.gram);
        for (const auto& m : monos) lb.basis.push_back(m);
        lb.blocks.push_back(std::move(blk));
    }
    return ctx.level_cache.emplace(level, std::move(lb)).first->second;
}

inline std::string factored_root_string(const Poly& det, const std::vector<std::pair<long, int>>& roots) {
    if (det.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, m] : roots) {
        if (!first) out << "*";
        first = false;
        if (r == 0)
            out << "mu";
        else if (r > 0)
            out << "(mu-" << r << ")";
        else
            out << "(mu+" << -r << ")";
        if (m > 1) out << "^" << m;
    }
    if (first) out << "1";
    return out.str();
}

inline GramReport gram(const AlgebraContext& ctx, int level) {
    if (level < 1) throw std::invalid_argument("gram: level must be >= 1");
    const LevelBlocks& lb = level_blocks(ctx, level);
    GramReport rep;
    rep.n = ctx.n();
    rep.level = level;
    std::size_t dim = lb.basis.size();
    rep.gram = Matrix<Poly>(dim, dim, Poly::zero(ctx.ring()));
    rep.det = Poly::constant(ctx.ring(), Rational(1));
    std::size_t off = 0;
    for (const auto& blk : lb.blocks) {
        std::size_t d = blk.basis.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) rep.gram.at(off + i, off + j) = blk.gram.at(i, j);
        rep.det = rep.det * blk.det;
        off += d;
    }
    for (const auto& m : lb.basis) rep.basis.push_back(mono_to_string(ctx, m));

    Poly rest = rep.det.monic();
    for (long r = -(ctx.n() - 1); r <= level && !rest.is_constant(); ++r) {
        int mult = exact::root_multiplicity(rest, Rational(r));
        if (mult == 0) continue;
        rep.roots.push_back({r, mult});
        Poly mu = Poly::variable(ctx.ring(), "mu");
        Poly factor = (mu - Poly::constant(ctx.ring(), Rational(r))).pow(static_cast<unsigned long>(mult));
        rest = rest.divexact(factor);
    }
    if (!rest.is_constant())
        throw std::logic_error("gram: determinant has a non-integer root");
    rep.det_factored = factored_root_string(rep.det, rep.roots);
    return rep;
}

inline long det_mu_degree(const AlgebraContext& ctx, int level) {
    const LevelBlocks& lb = level_blocks(ctx, level);
    long deg = 0;
    for (const auto& blk : lb.blocks) deg += blk.det.degree("mu");
    return deg;
}

// Dimension of the level slice of the irreducible two-sided module generated
// by the diagram's highest vector: closure under the simple lowering
// operators of both diagonal blocks.
inline long slice_dim(const AlgebraContext& ctx, const young::Diagram& d, int level) {
    long wt = d.weight();
    if (wt > level) return 0;
    auto key = std::make_pair(d.to_string(), level);
    auto it = ctx.slice_cache.find(key);
    if (it != ctx.slice_cache.end()) return it->second;

    std::vector<int> lowerings;
    for (int m = 1; m < ctx.n(); ++m) lowerings.push_back(m);
    for (int m = ctx.n() + 1; m < 2 * ctx.n(); ++m) lowerings.push_back(m);

    std::vector<ModuleElement> current{diagram_element(ctx, d)};
    for (long step = wt; step < level; ++step) {
        // Echelonized span of all one-step lowerings.
        std::vector<ModuleElement> next;
        for (const auto& vec : current) {
            for (int m : lowerings) {
                ModuleElement r = act(ctx, m + 1, m, vec);
                // reduce against existing echelon rows (pivot = largest monomial)
                for (const auto& row : next) {
                    if (r.is_zero()) break;
                    const YMono& pivot = row.t.rbegin()->first;
                    auto hit = r.t.find(pivot);
                    if (hit == r.t.end()) continue;
                    Poly f = hit->second;
                    ModuleElement sub = row;
                    sub *= f;
                    r -= sub;
                }
                if (!r.is_zero()) {
                    Poly lead = r.t.rbegin()->second;
                    Rational inv = Rational(1) / lead.constant_value();
                    r *= Poly::constant(ctx.ring(), inv);
                    next.push_back(std::move(r));
                    std::sort(next.begin(), next.end(),
                              [](const ModuleElement& a, const ModuleElement& b) {
                                  return b.t.rbegin()->first < a.t.rbegin()->first;
                              });
                }
            }
        }
        current = std::move(next);
        if (current.empty()) break;
    }
    long dim = static_cast<long>(current.size());
    ctx.slice_cache.emplace(key, dim);
    return dim;
}

inline std::vector<young::Diagram> diagrams_within(const AlgebraContext& ctx, int maxWeight) {
    young::DiagramFilter fits;
    fits.bounds.push_back({ctx.n() + 1, std::nullopt, 0L});
    auto all = young::enumerate_diagrams(maxWeight, &fits);
    std::vector<young::Diagram> out;
    for (auto& d : all)
        if (!d.empty()) out.push_back(std::move(d));
    return out;
}

// Both routes to the filtration dimensions must agree; disagreement is a
// hard failure, not a report entry.
inline std::vector<long> jantzen_dims(const AlgebraContext& ctx, long a, int level) {
    if (level < 1) throw std::invalid_argument("jantzen_dims: level must be >= 1");
    const LevelBlocks& lb = level_blocks(ctx, level);

    RingPtr tring = exact::PolyRing::make({"t"});
    Poly shift = Poly::variable(tring, "t") + Poly::constant(tring, Rational(a));
    std::vector<int> vals;
    for (const auto& blk : lb.blocks) {
        std::size_t d = blk.basis.size();
        Matrix<Poly> mt(d, d, Poly::zero(tring));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) mt.at(i, j) = blk.gram.at(i, j).subst("mu", shift);
        for (int v : exact::invariant_factor_t_valuations(mt)) vals.push_back(v);
    }
    int vmax = 0;
    for (int v : vals) vmax = std::max(vmax, v);
    std::vector<long> smith(static_cast<std::size_t>(vmax), 0);
    for (int v : vals)
        for (int k = 1; k <= v; ++k) smith[static_cast<std::size_t>(k - 1)]++;

    std::vector<long> byroot;
    for (const auto& d : diagrams_within(ctx, level)) {
        int mult = exact::root_multiplicity(young::p_poly(d), Rational(a));
        if (mult == 0) continue;
        long sd = slice_dim(ctx, d, level);
        if (sd == 0) continue;
        if (byroot.size() < static_cast<std::size_t>(mult)) byroot.resize(static_cast<std::size_t>(mult), 0);
        for (int k = 0; k < mult; ++k) byroot[static_cast<std::size_t>(k)] += sd;
    }

    if (smith != byroot)
        throw std::runtime_error("jantzen_dims: matrix route and root-multiplicity route disagree");
    return smith;
}

// Exact rank of the level Gram matrix at mu = a, summed over weight blocks.
inline std::vector<long> irr_quotient_dims(const AlgebraContext& ctx, const Rational& a,
                                           int maxLevel) {
    if (maxLevel < 1) throw std::invalid_argument("irr_quotient_dims: maxLevel must be >= 1");
    std::vector<long> out;
    for (int level = 1; level <= maxLevel; ++level) {
        const LevelBlocks& lb = level_blocks(ctx, level);
        long rank = 0;
        for (const auto& blk : lb.blocks) {
            std::size_t d = blk.basis.size();
            Matrix<Rational> m(d, d, Rational(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    m.at(i, j) = blk.gram.at(i, j).eval_all({{"mu", a}});
            rank += static_cast<long>(exact::rational_rank(m));
        }
        out.push_back(rank);
    }
    return out;
}

// Bases of the spaces W_k = {x : <x, -> vanishes to order k at mu = a} per
// level, together with the nullspace dimension of the induced level-k form.
struct LayerReport {
    std::vector<long> w_dims;          // dim W_k, k = 1..
    std::vector<long> layer_nullity;   // nullspace dim of <,>_k on W_k, k = 0..
    bool layers_nondegenerate = true;  // nullity of <,>_k equals dim W_{k+1}
};

inline LayerReport jantzen_layers(const AlgebraContext& ctx, long a, int level) {
    const LevelBlocks& lb = level_blocks(ctx, level);
    std::size_t dim = lb.basis.size();

    // Assemble the block-diagonal level Gram with mu = a + t, expanded in t.
    RingPtr tring = exact::PolyRing::make({"t"});
    Poly shift = Poly::variable(tring, "t") + Poly::constant(tring, Rational(a));
    long tmax = 0;
    std::vector<Matrix<Poly>> blocks_t;
    std::size_t off = 0;
    Matrix<Poly> full(dim, dim, Poly::zero(tring));
    for (const auto& blk : lb.blocks) {
        std::size_t d = blk.basis.size();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Poly e = blk.gram.at(i, j).subst("mu", shift);
                tmax = std::max(tmax, e.degree("t"));
                full.at(off + i, off + j) = e;
            }
        off += d;
    }
    std::vector<Matrix<Rational>> G;
    for (long m = 0; m <= tmax; ++m) {
        Matrix<Rational> gm(dim, dim, Rational(0));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                gm.at(i, j) = full.at(i, j).coeff_of("t", static_cast<std::uint32_t>(m)).constant_value();
        G.push_back(std::move(gm));
    }

    // W_k for constant vectors: intersection of ker G_0 .. ker G_{k-1}.
    auto wk_basis = [&](int k) {
        Matrix<Rational> stacked(static_cast<std::size_t>(k) * dim, dim, Rational(0));
        for (int m = 0; m < k; ++m) {
            const Matrix<Rational>& gm = m < static_cast<int>(G.size()) ? G[static_cast<std::size_t>(m)]
                                                                        : Matrix<Rational>(dim, dim, Rational(0));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    stacked.at(static_cast<std::size_t>(m) * dim + i, j) = gm.at(i, j);
        }
        return exact::rational_nullspace(stacked);
    };

    LayerReport rep;
    std::vector<std::vector<std::vector<Rational>>> w;  // w[k] = basis of W_k
    w.push_back({});                                    // W_0 = everything (implicit)
    for (int k = 1;; ++k) {
        auto basis_k = wk_basis(k);
        rep.w_dims.push_back(static_cast<long>(basis_k.size()));
        w.push_back(basis_k);
        if (basis_k.empty()) break;
    }

    // Layer form at depth k on W_k: B(x, y) = x^T G_k y.
    for (int k = 0; k + 1 < static_cast<int>(w.size()); ++k) {
        std::vector<std::vector<Rational>> basis_k;
        if (k == 0) {
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<Rational> e(dim, Rational(0));
                e[i] = Rational(1);
                basis_k.push_back(std::move(e));
            }
        } else {
            basis_k = w[static_cast<std::size_t>(k)];
        }
        std::size_t d = basis_k.size();
        const Matrix<Rational>& gk = k < static_cast<int>(G.size()) ? G[static_cast<std::size_t>(k)]
                                                                    : Matrix<Rational>(dim, dim, Rational(0));
        Matrix<Rational> B(d, d, Rational(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rational s(0);
                for (std::size_t p = 0; p < dim; ++p)
                    for (std::size_t q = 0; q < dim; ++q)
                        s += basis_k[i][p] * gk.at(p, q) * basis_k[j][q];
                B.at(i, j) = s;
            }
        long nullity = static_cast<long>(d - exact::rational_rank(B));
        rep.layer_nullity.push_back(nullity);
        long next_dim = (k + 1 < static_cast<int>(w.size())) ? static_cast<long>(w[static_cast<std::size_t>(k) + 1].size()) : 0;
        if (nullity != next_dim) rep.layers_nondegenerate = false;
    }
    return rep;
}

}  // namespace vermaforge::glmod
