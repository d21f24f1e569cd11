#include "dsv/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace dsv {

const char* basis_tag(Basis b) {
    switch (b) {
        case Basis::monomial: return "m";
        case Basis::schur: return "s";
        case Basis::homogeneous: return "h";
    }
    return "?";
}

Basis basis_from_tag(const std::string& tag) {
    if (tag == "m") return Basis::monomial;
    if (tag == "s") return Basis::schur;
    if (tag == "h") return Basis::homogeneous;
    throw InvalidArguments("unknown basis tag: " + tag);
}

void SymFunc::add_term(const Partition& la, QPoly coeff) {
    if (la.size() != n_)
        throw SizeMismatch("term partition " + la.str() + " does not have degree " +
                           std::to_string(n_));
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(la, std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPoly SymFunc::coeff(const Partition& la) const {
    auto it = terms_.find(la);
    return it == terms_.end() ? QPoly() : it->second;
}

SymFunc& SymFunc::operator+=(const SymFunc& rhs) {
    if (rhs.n_ != n_ || rhs.basis_ != basis_)
        throw SizeMismatch("cannot add symmetric functions of different degree or basis");
    for (const auto& [la, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(la, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::scale(const QPoly& f) {
    if (f.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [la, c] : terms_) c *= f;
    return *this;
}

int SymFunc::q_degree() const {
    int d = -1;
    for (const auto& [la, c] : terms_) d = std::max(d, c.degree());
    return d;
}

SymFunc SymFunc::q_coefficient(int d) const {
    SymFunc out(n_, basis_);
    for (const auto& [la, c] : terms_) out.add_term(la, QPoly(c.coeff(d)));
    return out;
}

SymFunc SymFunc::q_reversed(int d) const {
    SymFunc out(n_, basis_);
    for (const auto& [la, c] : terms_) out.add_term(la, q_reverse(c, d));
    return out;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << basis_tag(basis_) << la.str();
        first = false;
    }
    return os.str();
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        word.insert(word.end(), it->begin(), it->end());
    return word;
}

void for_each_ssyt(const Partition& shape, const Partition& content,
                   const std::function<void(const Tableau&)>& visit) {
    if (shape.size() != content.size()) return;
    const int nrows = shape.length();
    const int m = content.length();
    Tableau t;
    t.shape = shape;
    t.rows.resize(nrows);
    for (int i = 0; i < nrows; ++i) t.rows[i].assign(shape.part(i + 1), 0);
    std::vector<int> remaining(m + 1, 0);
    for (int v = 1; v <= m; ++v) remaining[v] = content.part(v);

    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == nrows) {
            visit(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);                 // row weakly increases
        if (r > 0 && c < shape.part(r)) lo = std::max(lo, t.rows[r - 1][c] + 1); // column strict
        for (int v = lo; v <= m; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            t.rows[r][c] = v;
            rec(nr, nc);
            ++remaining[v];
        }
        t.rows[r][c] = 0;
    };
    if (nrows == 0) {
        visit(t);
        return;
    }
    rec(0, 0);
}

long long charge(const std::vector<int>& word) {
    if (word.empty()) return 0;
    int maxv = *std::max_element(word.begin(), word.end());
    if (*std::min_element(word.begin(), word.end()) < 1)
        throw NonPartitionContent("word letters must be positive");
    std::vector<int> content(maxv + 1, 0);
    for (int v : word) ++content[v];
    for (int v = 1; v < maxv; ++v)
        if (content[v] < content[v + 1])
            throw NonPartitionContent("word content is not a partition");
    if (content[maxv] == 0) throw NonPartitionContent("word content is not a partition");

    const int n = static_cast<int>(word.size());
    std::vector<bool> used(n, false);
    long long total = 0;
    int left = n;
    while (left > 0) {
        // Extract one standard subword: scan right to left for 1, then keep
        // scanning leftward (cyclically) for 2, 3, ... among unused positions.
        std::vector<int> positions;
        int pos = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (!used[i] && word[i] == 1) {
                pos = i;
                break;
            }
        }
        if (pos < 0) throw NonPartitionContent("word content is not a partition");
        used[pos] = true;
        positions.push_back(pos);
        for (int r = 2;; ++r) {
            bool exists = false;
            for (int i = 0; i < n; ++i)
                if (!used[i] && word[i] == r) exists = true;
            if (!exists) break;
            int found = -1;
            for (int step = 1; step <= n; ++step) {
                int i = (pos - step % n + n) % n;
                if (!used[i] && word[i] == r) {
                    found = i;
                    break;
                }
            }
            used[found] = true;
            positions.push_back(found);
            pos = found;
        }
        left -= static_cast<int>(positions.size());
        // Standard charge: index(1)=0, index(r+1) = index(r) + [r+1 right of r].
        std::vector<int> pos_of(positions.size() + 1);
        std::sort(positions.begin(), positions.end());
        for (int i : positions) pos_of[word[i]] = i;
        long long index = 0;
        for (std::size_t r = 1; r < positions.size(); ++r) {
            if (pos_of[r + 1] > pos_of[r]) ++index;
            total += index;
        }
    }
    return total;
}

namespace {

std::map<std::pair<Partition, Partition>, QPoly> g_kostka_cache;
std::mutex g_kostka_mutex;

} // namespace

QPoly kostka_foulkes(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size())
        throw SizeMismatch("kostka_foulkes: |" + la.str() + "| != |" + mu.str() + "|");
    {
        std::lock_guard<std::mutex> lock(g_kostka_mutex);
        auto it = g_kostka_cache.find({la, mu});
        if (it != g_kostka_cache.end()) return it->second;
    }
    QPoly result;
    if (dominates(la, mu)) {
        for_each_ssyt(la, mu, [&](const Tableau& t) {
            result += QPoly::monomial(1, static_cast<int>(charge(t.reading_word())));
        });
    }
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    g_kostka_cache.try_emplace({la, mu}, result);
    return result;
}

long long kostka_number(const Partition& la, const Partition& mu) {
    long long count = 0;
    if (la.size() == mu.size() && dominates(la, mu))
        for_each_ssyt(la, mu, [&](const Tableau&) { ++count; });
    return count;
}

SymFunc hl_H(const Partition& nu) {
    SymFunc out(nu.size(), Basis::schur);
    for (const auto& la : partitions_of(nu.size())) out.add_term(la, kostka_foulkes(la, nu));
    return out;
}

SymFunc hl_modified(const Partition& nu) {
    return hl_H(nu).q_reversed(static_cast<int>(n_stat(nu)));
}

namespace {

SymFunc schur_to_monomial(const SymFunc& f) {
    SymFunc out(f.n(), Basis::monomial);
    for (const auto& [la, c] : f.terms()) {
        for (const auto& mu : partitions_of(f.n())) {
            long long k = kostka_number(la, mu);
            if (k == 0) continue;
            QPoly term = c;
            term *= QPoly(k);
            out.add_term(mu, std::move(term));
        }
    }
    return out;
}

SymFunc monomial_to_schur(const SymFunc& f) {
    // The Kostka matrix is unitriangular in any linear extension of dominance;
    // descending lex is one, so back-substitute in term order.
    SymFunc out(f.n(), Basis::schur);
    SymFunc rest = f;
    while (!rest.is_zero()) {
        const auto& [la, c] = *rest.terms().begin();
        Partition shape = la;
        QPoly coeff = c;
        out.add_term(shape, coeff);
        SymFunc expansion(f.n(), Basis::schur);
        expansion.add_term(shape, coeff);
        SymFunc mono = schur_to_monomial(expansion);
        for (const auto& [mu, d] : mono.terms()) rest.add_term(mu, QPoly() - d);
    }
    return out;
}

} // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    if (f.basis() == Basis::schur && target == Basis::monomial) return schur_to_monomial(f);
    if (f.basis() == Basis::monomial && target == Basis::schur) return monomial_to_schur(f);
    if (f.basis() == Basis::homogeneous && target == Basis::monomial) {
        // Only the single-row case is needed: h_n = sum over mu of m_mu.
        SymFunc out(f.n(), Basis::monomial);
        for (const auto& [la, c] : f.terms()) {
            if (la.length() > 1)
                throw NotImplementedBasisPair("homogeneous expansion only supported for h_(n)");
            for (const auto& mu : partitions_of(f.n())) out.add_term(mu, c);
        }
        return out;
    }
    throw NotImplementedBasisPair(std::string("conversion ") + basis_tag(f.basis()) + " -> " +
                                  basis_tag(target) + " not supported");
}

bool equal_as_symfunc(const SymFunc& a, const SymFunc& b) {
    if (a.n() != b.n()) return false;
    return to_basis(a, Basis::monomial).terms() == to_basis(b, Basis::monomial).terms();
}

SymFunc pieri_h(const Partition& la, int r) {
    if (r < 0) throw InvalidArguments("pieri_h: r must be nonnegative");
    SymFunc out(la.size() + r, Basis::schur);
    // mu ranges over partitions with mu/la a horizontal strip of size r:
    // la_i <= mu_i <= la_{i-1}, one extra row allowed at the bottom.
    int rows = la.length() + 1;
    std::vector<int> mu(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == rows) {
            if (remaining == 0) {
                std::vector<int> parts(mu.begin(), mu.begin() + rows);
                out.add_term(Partition(parts), QPoly::one());
            }
            return;
        }
        int lo = la.part(i + 1);
        int hi = (i == 0) ? la.part(1) + remaining : std::min(la.part(i), lo + remaining);
        for (int v = hi; v >= lo; --v) {
            if (i > 0 && v > mu[i - 1]) continue;
            mu[i] = v;
            rec(i + 1, remaining - (v - lo));
        }
        mu[i] = 0;
    };
    rec(0, r);
    return out;
}

} // namespace dsv
