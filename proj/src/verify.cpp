#include "dsv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "dsv/fillings.hpp"
#include "dsv/fqgeom.hpp"
#include "dsv/hlexp.hpp"
#include "dsv/symfunc.hpp"

namespace dsv::verify {

void Report::merge(const Report& other) {
    cases += other.cases;
    if (!other.ok && ok) {
        ok = false;
        first_failure = other.first_failure;
    }
}

std::vector<DeltaInstance> instances_upto(int max_n, int max_s) {
    std::vector<DeltaInstance> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Partition> lambdas;
        for (int k = 0; k <= n; ++k)
            for (const auto& la : partitions_of(k)) lambdas.push_back(la);
        std::sort(lambdas.begin(), lambdas.end());
        for (const auto& la : lambdas)
            for (int s = std::max(la.length(), 1); s <= max_s; ++s)
                out.push_back(build_instance(n, la, s));
    }
    return out;
}

namespace {

// Runs check(i) over [0, count) on a few workers; failures are reported for
// the lexicographically first index.
Report sweep(std::size_t count, const std::function<Report(std::size_t)>& check) {
    std::vector<Report> results(count);
    if (count == 0) return {};
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || count < 4) {
        for (std::size_t i = 0; i < count; ++i) results[i] = check(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::mutex error_mutex;
        std::string error;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        results[i] = check(i);
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (error.empty()) error = e.what();
                        return;
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (!error.empty()) throw Error(error);
    }
    Report merged;
    for (const auto& r : results) merged.merge(r);
    return merged;
}

Report compare_symfuncs(const DeltaInstance& inst, const char* lhs_name, const SymFunc& lhs,
                        const char* rhs_name, const SymFunc& rhs) {
    Report r;
    r.cases = 1;
    if (!equal_as_symfunc(lhs, rhs)) {
        r.ok = false;
        r.first_failure = inst.str() + ": " + lhs_name + " = " + lhs.str() + " but " + rhs_name +
                          " = " + rhs.str();
    }
    return r;
}

} // namespace

Report hl_identity(int max_n, int max_s, long long budget) {
    auto instances = instances_upto(max_n, max_s);
    return sweep(instances.size(), [&](std::size_t i) {
        const auto& inst = instances[i];
        return compare_symfuncs(inst, "frob_delta", frob_delta(inst, budget), "hl_rhs",
                                hl_rhs(inst));
    });
}

Report rev_identity(int max_n, int max_s, long long) {
    auto instances = instances_upto(max_n, max_s);
    return sweep(instances.size(), [&](std::size_t i) {
        const auto& inst = instances[i];
        return compare_symfuncs(inst, "hl_rev_rhs", hl_rev_rhs(inst), "hl_rhs", hl_rhs(inst));
    });
}

Report coinv_identity(int max_size, int max_s) {
    Report report;
    for (int m = 0; m <= max_size; ++m) {
        for (const auto& nu : partitions_of(m)) {
            // Sub-partitions of nu.
            std::vector<Partition> inners;
            std::vector<int> cur(nu.length(), 0);
            std::function<void(int)> rec = [&](int i) {
                if (i == nu.length()) {
                    std::vector<int> parts = cur;
                    inners.emplace_back(std::move(parts));
                    return;
                }
                int hi = std::min(nu.part(i + 1), i == 0 ? nu.part(1) : cur[i - 1]);
                for (int v = 0; v <= hi; ++v) {
                    cur[i] = v;
                    rec(i + 1);
                }
                cur[i] = 0;
            };
            if (nu.length() == 0)
                inners.emplace_back();
            else
                rec(0);
            for (const auto& la : inners) {
                for (int s = std::max(nu.length(), 1); s <= max_s; ++s) {
                    auto [left, right] = coinv_identity_sides(nu, la, s);
                    ++report.cases;
                    if (left != right && report.ok) {
                        report.ok = false;
                        report.first_failure = "nu=" + nu.str() + ", lambda=" + la.str() +
                                               ", s=" + std::to_string(s) + ": left " +
                                               left.str() + " != right " + right.str();
                    }
                }
            }
        }
    }
    return report;
}

Report dinv_inv(int max_n, int max_s) {
    auto instances = instances_upto(max_n, max_s);
    return sweep(instances.size(), [&](std::size_t i) {
        const auto& inst = instances[i];
        Report r;
        Filling T = reading_filling(inst);
        Composition complete(std::vector<int>(inst.n(), 1));
        for (const auto& w : admissible_words(T, complete)) {
            ++r.cases;
            long long lhs = inv_stat(T, w);
            long long rhs = dinv(prd_of_word(T, w));
            if (lhs != rhs && r.ok) {
                r.ok = false;
                std::string word;
                for (int v : w) word += std::to_string(v) + " ";
                r.first_failure = inst.str() + ", w=(" + word + "): inv=" +
                                  std::to_string(lhs) + " dinv=" + std::to_string(rhs);
            }
        }
        return r;
    });
}

Report flatten_recursion(int max_n, int max_s) {
    auto instances = instances_upto(max_n, max_s);
    return sweep(instances.size(), [&](std::size_t i) {
        const auto& inst = instances[i];
        Report r;
        if (inst.n() == 0) return r;
        Filling T = reading_filling(inst);
        Composition complete(std::vector<int>(inst.n(), 1));
        for (const auto& w : admissible_words(T, complete)) {
            Cell start = T.cell(w.front());
            if (start.col != inst.row_length(start.row))
                throw Error("admissible word does not start at the end of a row");
            int row = start.row;
            auto flattened = flatten_step(T, row);
            Word rest;
            for (std::size_t t = 1; t < w.size(); ++t) {
                int mapped = flattened.label_map[w[t]];
                if (mapped == 0) throw Error("flatten deleted a label used by the word");
                rest.push_back(mapped);
            }
            ++r.cases;
            long long lhs = inv_stat(T, w);
            long long rhs = inv_stat(flattened.next, rest);
            if (lhs - rhs != row - 1 && r.ok) {
                r.ok = false;
                r.first_failure = inst.str() + ": inv drop " + std::to_string(lhs - rhs) +
                                  " != " + std::to_string(row - 1);
            }
        }
        return r;
    });
}

Report fq_counts(const std::vector<DeltaInstance>& instances, const std::vector<int>& primes,
                 long long budget) {
    return sweep(instances.size(), [&](std::size_t idx) {
        const auto& inst = instances[idx];
        Report r;
        SymFunc frob = frob_delta(inst, budget);
        for (const auto& mu : strong_compositions(inst.n())) {
            QPoly coeff = frob.coeff(sort_desc(mu));
            for (int p : primes) {
                ++r.cases;
                long long counted = count_Y_mu(inst, mu, p, false, budget);
                BigInt expected = coeff.eval(p);
                if (BigInt(counted) != expected && r.ok) {
                    r.ok = false;
                    r.first_failure = inst.str() + ", mu=" + mu.str() + ", p=" +
                                      std::to_string(p) + ": count " + std::to_string(counted) +
                                      " != coefficient value " + expected.str();
                }
            }
        }
        return r;
    });
}

Report steinberg_counts(int max_n, const std::vector<int>& primes, long long budget) {
    Report report;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& la : partitions_of(n)) {
            SymFunc expected = to_basis(hl_modified(la), Basis::monomial);
            for (int p : primes) {
                SymFunc counted(n, Basis::monomial);
                for (const auto& mu : partitions_of(n)) {
                    long long c = count_steinberg(la, Composition(mu.parts()), p, budget);
                    counted.add_term(mu, QPoly(c));
                }
                for (const auto& mu : partitions_of(n)) {
                    ++report.cases;
                    BigInt want = expected.coeff(mu).eval(p);
                    BigInt got = counted.coeff(mu).coeff(0);
                    if (want != got && report.ok) {
                        report.ok = false;
                        report.first_failure = "lambda=" + la.str() + ", mu=" + mu.str() +
                                               ", p=" + std::to_string(p) + ": count " +
                                               got.str() + " != H~ value " + want.str();
                    }
                }
            }
        }
    }
    return report;
}

Report free_pair_counts(int max_n, int max_s) {
    auto instances = instances_upto(max_n, max_s);
    return sweep(instances.size(), [&](std::size_t i) {
        const auto& inst = instances[i];
        Report r;
        for (const auto& alpha : compositions_containing(inst.n(), inst.s(), inst.lambda())) {
            ++r.cases;
            long long listed = static_cast<long long>(free_pairs(alpha, inst).size());
            long long formula = free_pair_count_formula(alpha, inst);
            if (listed != formula && r.ok) {
                r.ok = false;
                r.first_failure = inst.str() + ", alpha=" + alpha.str() + ": " +
                                  std::to_string(listed) + " pairs vs formula " +
                                  std::to_string(formula);
            }
        }
        return r;
    });
}

Report z_decomposition(int max_n, int max_s, int max_K, int p, long long budget) {
    Report report;
    for (const auto& inst : instances_upto(max_n, max_s)) {
        if (inst.K() > max_K) continue;
        for (const auto& mu : strong_compositions(inst.n())) {
            long long total_hat = 0;
            for (const auto& alpha :
                 compositions_containing(inst.n(), inst.s(), inst.lambda())) {
                long long plain = count_z(inst, alpha, mu, p, false, budget);
                long long hat = count_z(inst, alpha, mu, p, true, budget);
                total_hat += hat;
                long long ell = static_cast<long long>(free_pairs(alpha, inst).size());
                BigInt predicted = BigInt(plain);
                for (long long e = 0; e < ell; ++e) predicted *= p;
                ++report.cases;
                if (BigInt(hat) != predicted && report.ok) {
                    report.ok = false;
                    report.first_failure = inst.str() + ", alpha=" + alpha.str() + ", mu=" +
                                           mu.str() + ": hat " + std::to_string(hat) +
                                           " != p^l * plain = " + predicted.str();
                }
            }
            long long whole = count_Y_mu(inst, mu, p, true, budget);
            ++report.cases;
            if (total_hat != whole && report.ok) {
                report.ok = false;
                report.first_failure = inst.str() + ", mu=" + mu.str() + ": sum of hat counts " +
                                       std::to_string(total_hat) + " != |Y^mu| = " +
                                       std::to_string(whole);
            }
        }
    }
    return report;
}

Report pieri_top(int max_n, int max_s, long long budget) {
    Report report;
    for (int n = 0; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& la : partitions_of(k)) {
                int s_hi = std::max(max_s, la.length() + 1);
                for (int s = la.length() + 1; s <= s_hi; ++s) {
                    DeltaInstance inst = build_instance(n, la, s);
                    SymFunc frob = to_basis(frob_delta(inst, budget), Basis::schur);
                    int top = static_cast<int>(n_stat(la) +
                                               static_cast<long long>(s - 1) * (n - k));
                    SymFunc top_part = frob.q_coefficient(top);
                    SymFunc expected = pieri_h(la, n - k);
                    ++report.cases;
                    if (!equal_as_symfunc(top_part, expected) && report.ok) {
                        report.ok = false;
                        report.first_failure = inst.str() + ": top coefficients " +
                                               top_part.str() + " != " + expected.str();
                    }
                }
            }
        }
    }
    return report;
}

Report schubert_compat(int max_n, int max_s) {
    Report report;
    for (const auto& inst : instances_upto(max_n, max_s)) {
        ++report.cases;
        auto check = check_schubert_compatible(reading_filling(inst));
        if (!check && report.ok) {
            report.ok = false;
            report.first_failure = inst.str() + ": clause " + std::to_string(check.clause) +
                                   " (" + check.witness + ")";
        }
    }
    return report;
}

} // namespace dsv::verify
