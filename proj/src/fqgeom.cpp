#include "dsv/fqgeom.hpp"

#include <algorithm>
#include <set>

#include "dsv/hlexp.hpp"

namespace dsv {

bool prime_allowed(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

namespace {

void require_prime(int p) {
    if (!prime_allowed(p))
        throw UnsupportedPrime("prime " + std::to_string(p) + " is not in {2,3,5,7}");
}

int inv_mod(int a, int p) {
    a %= p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw InvalidArguments("no inverse mod p");
}

// w -= c * g (mod p)
void subtract_scaled(FpVec& w, int c, const FpVec& g, int p) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ((w[i] - c * g[i]) % p + p) % p;
}

int leading_index(const FpVec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

} // namespace

FpMatrix::FpMatrix(int p, int dim) : p_(p), dim_(dim), a_(dim * dim, 0) { require_prime(p); }

FpVec FpMatrix::apply(const FpVec& v) const {
    FpVec out(dim_, 0);
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        for (int r = 0; r < dim_; ++r) out[r] = (out[r] + a_[r * dim_ + c] * v[c]) % p_;
    }
    return out;
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const {
    FpMatrix out(p_, dim_);
    for (int r = 0; r < dim_; ++r)
        for (int k = 0; k < dim_; ++k) {
            int v = a_[r * dim_ + k];
            if (v == 0) continue;
            for (int c = 0; c < dim_; ++c)
                out.a_[r * dim_ + c] = (out.a_[r * dim_ + c] + v * rhs.a_[k * dim_ + c]) % p_;
        }
    return out;
}

FpMatrix FpMatrix::identity(int p, int dim) {
    FpMatrix out(p, dim);
    for (int i = 0; i < dim; ++i) out.set(i, i, 1);
    return out;
}

FpMatrix FpMatrix::power(int e) const {
    FpMatrix out = identity(p_, dim_);
    for (int i = 0; i < e; ++i) out = out.multiply(*this);
    return out;
}

Subspace Subspace::zero(int p, int ambient) {
    require_prime(p);
    Subspace V;
    V.p_ = p;
    V.ambient_ = ambient;
    return V;
}

Subspace Subspace::span(int p, int ambient, const std::vector<FpVec>& vectors) {
    Subspace V = zero(p, ambient);
    for (FpVec v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw InvalidArguments("span: vector dimension mismatch");
        for (auto& x : v) x = ((x % p) + p) % p;
        // Generators stay zero at each other's pivots, so one pass fully
        // reduces v at every existing pivot.
        for (const auto& g : V.gens_) {
            int pv = leading_index(g);
            if (v[pv] != 0) subtract_scaled(v, v[pv], g, p);
        }
        int lead = leading_index(v);
        if (lead < 0) continue;
        int inv = inv_mod(v[lead], p);
        for (auto& x : v) x = x * inv % p;
        for (auto& g : V.gens_)
            if (g[lead] != 0) subtract_scaled(g, g[lead], v, p);
        V.gens_.push_back(std::move(v));
    }
    std::sort(V.gens_.begin(), V.gens_.end(),
              [](const FpVec& a, const FpVec& b) { return leading_index(a) < leading_index(b); });
    return V;
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> out;
    for (const auto& g : gens_) out.push_back(leading_index(g) + 1);
    return out;
}

bool Subspace::contains_vector(const FpVec& v) const {
    FpVec w = v;
    for (auto& x : w) x = ((x % p_) + p_) % p_;
    for (const auto& g : gens_) {
        int lead = leading_index(g);
        if (w[lead] != 0) subtract_scaled(w, w[lead], g, p_);
    }
    return leading_index(w) < 0;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& g : other.gens_)
        if (!contains_vector(g)) return false;
    return true;
}

Subspace Subspace::join(const Subspace& other) const {
    std::vector<FpVec> all = gens_;
    all.insert(all.end(), other.gens_.begin(), other.gens_.end());
    return span(p_, ambient_, all);
}

Subspace Subspace::apply(const FpMatrix& M) const {
    std::vector<FpVec> mapped;
    for (const auto& g : gens_) mapped.push_back(M.apply(g));
    return span(p_, ambient_, mapped);
}

bool Subspace::operator<(const Subspace& other) const { return gens_ < other.gens_; }

std::vector<int> cell_of_subspace(const Subspace& V) { return V.pivots(); }

FpMatrix nilpotent_from_filling(const Filling& T, bool transpose, int p) {
    const DeltaInstance& inst = T.instance();
    FpMatrix N(p, inst.K());
    for (int i = 1; i <= inst.rows(); ++i) {
        for (int j = 1; j <= inst.row_length(i); ++j) {
            if (!transpose && j < inst.row_length(i))
                N.set(T.label({i, j + 1}) - 1, T.label({i, j}) - 1, 1);
            if (transpose && j > 1)
                N.set(T.label({i, j - 1}) - 1, T.label({i, j}) - 1, 1);
        }
    }
    return N;
}

namespace {

struct FlagSearch {
    const FpMatrix& N;
    const Composition& mu;
    FlagMode mode;
    const FlagConstraints& cons;
    const std::function<void(const Flag&)>& visit;
    int K;
    int total_dim;

    bool mode_ok(const Subspace& W, const Subspace& prev,
                 const std::vector<FpVec>& new_gens) const {
        for (const auto& g : new_gens) {
            FpVec image = N.apply(g);
            if (mode == FlagMode::stable ? !W.contains_vector(image)
                                         : !prev.contains_vector(image))
                return false;
        }
        return true;
    }

    bool final_ok(const Subspace& W) const {
        if (cons.contain && !W.contains(*cons.contain)) return false;
        if (cons.final_pivots && W.pivots() != *cons.final_pivots) return false;
        if (cons.final_equals && !(W == *cons.final_equals)) return false;
        return true;
    }

    void recurse(Flag& flag, int step) {
        const Subspace prev =
            flag.parts.empty() ? Subspace::zero(N.p(), K) : flag.parts.back();
        const bool last = step == mu.length();
        if (last) {
            if (final_ok(prev)) visit(flag);
            return;
        }
        const int d = mu.part(step + 1);

        if (step + 1 == mu.length() && cons.final_equals) {
            // Single candidate; test it directly.
            const Subspace& W = *cons.final_equals;
            if (W.dim() != prev.dim() + d || !W.contains(prev)) return;
            std::vector<FpVec> extra;
            for (const auto& g : W.generators())
                if (!prev.contains_vector(g)) extra.push_back(g);
            if (!mode_ok(W, prev, extra)) return;
            flag.parts.push_back(W);
            recurse(flag, step + 1);
            flag.parts.pop_back();
            return;
        }

        std::vector<int> pivots_taken(K + 1, 0);
        for (int pv : prev.pivots()) pivots_taken[pv] = 1;
        std::vector<int> nonpivots;
        for (int i = 1; i <= K; ++i)
            if (!pivots_taken[i]) nonpivots.push_back(i);
        const int m = static_cast<int>(nonpivots.size());
        if (d > m) return;

        // Choose d new pivots among the nonpivots, then sweep the free
        // coordinates (nonpivot positions below each new pivot).
        std::vector<int> choice(d);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == d) {
                emit_candidates(flag, prev, nonpivots, choice, step);
                return;
            }
            for (int t = start; t < m; ++t) {
                choice[idx] = t;
                choose(idx + 1, t + 1);
            }
        };
        choose(0, 0);
    }

    void emit_candidates(Flag& flag, const Subspace& prev, const std::vector<int>& nonpivots,
                         const std::vector<int>& choice, int step) {
        const int p = N.p();
        const int d = static_cast<int>(choice.size());
        std::vector<char> is_new_pivot(K + 1, 0);
        for (int t : choice) is_new_pivot[nonpivots[t]] = 1;

        // Free slots: (generator index, 0-based coordinate position).
        std::vector<std::pair<int, int>> slots;
        for (int g = 0; g < d; ++g) {
            int pivot = nonpivots[choice[g]];
            for (int pos : nonpivots)
                if (pos < pivot && !is_new_pivot[pos]) slots.emplace_back(g, pos - 1);
        }

        std::vector<FpVec> new_gens(d, FpVec(K, 0));
        for (int g = 0; g < d; ++g) new_gens[g][nonpivots[choice[g]] - 1] = 1;

        std::vector<int> coords(slots.size(), 0);
        for (;;) {
            for (std::size_t t = 0; t < slots.size(); ++t)
                new_gens[slots[t].first][slots[t].second] = coords[t];

            std::vector<FpVec> all = prev.generators();
            all.insert(all.end(), new_gens.begin(), new_gens.end());
            Subspace W = Subspace::span(p, K, all);
            bool ok = mode_ok(W, prev, new_gens);
            if (ok && cons.contain && W.join(*cons.contain).dim() > total_dim) ok = false;
            if (ok && step + 1 == mu.length()) ok = final_ok(W);
            if (ok) {
                flag.parts.push_back(std::move(W));
                recurse(flag, step + 1);
                flag.parts.pop_back();
            }

            // Odometer over F_p^slots.
            std::size_t t = 0;
            while (t < coords.size() && ++coords[t] == p) coords[t++] = 0;
            if (t == coords.size() && !coords.empty()) break;
            if (coords.empty()) break;
        }
    }
};

} // namespace

void for_each_flag(const FpMatrix& N, const Composition& mu, FlagMode mode,
                   const FlagConstraints& constraints, long long budget,
                   const std::function<void(const Flag&)>& visit) {
    require_prime(N.p());
    if (mu.size() > N.dim())
        throw InvalidArguments("flag type exceeds ambient dimension");
    for (int part : mu.parts())
        if (part <= 0) throw InvalidArguments("flag type must be a strong composition");

    // Predicted work: product of Gaussian binomial counts per extension step.
    BigInt estimate = 1;
    int cum = 0;
    for (int part : mu.parts()) {
        estimate *= q_binom(N.dim() - cum, part).eval(N.p());
        cum += part;
    }
    if (estimate > budget)
        throw ResourceLimit("flag enumeration estimate " + estimate.str() +
                            " exceeds budget " + std::to_string(budget));

    FlagSearch search{N, mu, mode, constraints, visit, N.dim(), mu.size()};
    Flag flag;
    search.recurse(flag, 0);
}

long long count_flags(const FpMatrix& N, const Composition& mu, FlagMode mode,
                      const FlagConstraints& constraints, long long budget) {
    long long count = 0;
    for_each_flag(N, mu, mode, constraints, budget, [&](const Flag&) { ++count; });
    return count;
}

namespace {

Subspace label_span(const Filling& T, const CellSet& cells, int p) {
    std::vector<FpVec> vecs;
    for (Cell c : cells.cells()) {
        FpVec v(T.instance().K(), 0);
        v[T.label(c) - 1] = 1;
        vecs.push_back(std::move(v));
    }
    return Subspace::span(p, T.instance().K(), vecs);
}

Subspace column_space(const FpMatrix& M) {
    std::vector<FpVec> cols;
    for (int c = 0; c < M.dim(); ++c) {
        FpVec v(M.dim(), 0);
        for (int r = 0; r < M.dim(); ++r) v[r] = M.at(r, c);
        cols.push_back(std::move(v));
    }
    return Subspace::span(M.p(), M.dim(), cols);
}

} // namespace

long long count_Y_mu(const DeltaInstance& inst, const Composition& mu, int p, bool transpose,
                     long long budget) {
    if (!mu.strong() || mu.size() != inst.n())
        throw InvalidArguments("count_Y_mu: mu must be a strong composition of n");
    require_prime(p);
    Filling T = reading_filling(inst);
    FpMatrix N = nilpotent_from_filling(T, transpose, p);
    FlagConstraints cons;
    cons.contain = column_space(N.power(inst.n() - inst.k()));
    return count_flags(N, mu, FlagMode::stable, cons, budget);
}

long long count_steinberg(const Partition& lambda_type, const Composition& mu, int p,
                          long long budget) {
    if (mu.size() != lambda_type.size())
        throw SizeMismatch("count_steinberg: |mu| != |lambda|");
    if (!mu.strong()) throw InvalidArguments("count_steinberg: mu must be strong");
    require_prime(p);
    DeltaInstance inst =
        build_instance(lambda_type.size(), lambda_type, std::max(lambda_type.length(), 1));
    FpMatrix N = nilpotent_from_filling(reading_filling(inst), false, p);
    return count_flags(N, mu, FlagMode::stable, {}, budget);
}

namespace {

struct ZSetup {
    Filling T;
    FpMatrix Nt;
    FlagConstraints cons;
};

ZSetup z_setup(const DeltaInstance& inst, const Composition& alpha, const Composition& mu,
               int p, bool hat) {
    if (!mu.strong() || mu.size() != inst.n())
        throw InvalidArguments("count_z: mu must be a strong composition of n");
    if (alpha.length() != inst.s() || alpha.size() != inst.n() ||
        !contains(alpha, inst.lambda()))
        throw NotContaining("count_z: alpha must lie in Comp(n,s) and contain lambda");
    require_prime(p);

    Filling T = reverse_filling(inst);
    FpMatrix Nt = nilpotent_from_filling(T, true, p);

    std::vector<Cell> alpha_cells;
    for (int r = 1; r <= inst.rows(); ++r)
        for (int j = 1; j <= std::min(alpha.part(r), inst.row_length(r)); ++j)
            alpha_cells.push_back({r, j});

    FlagConstraints cons;
    cons.contain = label_span(T, inst.lambda_left(), p);
    Subspace f_alpha = label_span(T, CellSet(alpha_cells), p);
    if (hat) {
        std::vector<int> pivots = f_alpha.pivots();
        std::sort(pivots.begin(), pivots.end());
        cons.final_pivots = std::move(pivots);
    } else {
        cons.final_equals = std::move(f_alpha);
    }
    return {std::move(T), std::move(Nt), std::move(cons)};
}

} // namespace

long long count_z(const DeltaInstance& inst, const Composition& alpha, const Composition& mu,
                  int p, bool hat, long long budget) {
    ZSetup setup = z_setup(inst, alpha, mu, p, hat);
    return count_flags(setup.Nt, mu, FlagMode::stable, setup.cons, budget);
}

std::vector<Flag> z_flags(const DeltaInstance& inst, const Composition& alpha,
                          const Composition& mu, int p, bool hat, long long budget) {
    ZSetup setup = z_setup(inst, alpha, mu, p, hat);
    std::vector<Flag> out;
    for_each_flag(setup.Nt, mu, FlagMode::stable, setup.cons, budget,
                  [&](const Flag& f) { out.push_back(f); });
    return out;
}

Flag apply_U(const DeltaInstance& inst, const Composition& alpha, std::pair<int, int> pair,
             int t, const Flag& V, int p) {
    require_prime(p);
    auto pairs = free_pairs(alpha, inst);
    if (std::find(pairs.begin(), pairs.end(), pair) == pairs.end())
        throw NotFreePair("(" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                          ") is not a free pair of " + alpha.str());
    t = ((t % p) + p) % p;

    Filling T = reverse_filling(inst);
    Cell ci = T.cell(pair.first);
    Cell cj = T.cell(pair.second);
    FpMatrix U = FpMatrix::identity(p, inst.K());
    for (int c = 1; c <= inst.row_length(ci.row); ++c) {
        int target = cj.col + (c - ci.col);
        if (target >= 1 && target <= inst.row_length(cj.row))
            U.set(T.label({cj.row, target}) - 1, T.label({ci.row, c}) - 1, t);
    }

    Flag out;
    for (const auto& part : V.parts) out.parts.push_back(part.apply(U));
    return out;
}

long long count_projected_spaltenstein(const DeltaInstance& inst, int p, long long budget) {
    require_prime(p);
    std::vector<int> type(inst.n(), 1);
    for (int i = 0; i < inst.n() - inst.k(); ++i)
        if (inst.s() - 1 > 0) type.push_back(inst.s() - 1);
    Composition mu(type);

    FpMatrix N = nilpotent_from_filling(reading_filling(inst), false, p);
    std::set<std::vector<Subspace>> projections;
    for_each_flag(N, mu, FlagMode::strict, {}, budget, [&](const Flag& f) {
        projections.emplace(f.parts.begin(), f.parts.begin() + inst.n());
    });
    return static_cast<long long>(projections.size());
}

} // namespace dsv
