#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsv/fillings.hpp"
#include "dsv/fqgeom.hpp"
#include "dsv/hlexp.hpp"
#include "dsv/json_io.hpp"
#include "dsv/verify.hpp"

namespace {

using dsv::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceLimit = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

dsv::Partition parse_partition(const std::string& text) {
    return dsv::Partition(parse_int_list(text));
}

long long default_budget() {
    if (const char* env = std::getenv("HLSPRINGER_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw dsv::InvalidArguments("HLSPRINGER_BUDGET is not an integer");
        }
    }
    return dsv::kDefaultBudget;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream file(out_path);
        if (!file) throw dsv::InvalidArguments("cannot open output file " + out_path);
        file << text << "\n";
    }
}

std::string symfunc_csv(const dsv::SymFunc& f) {
    std::ostringstream os;
    os << "partition,coeffs";
    for (const auto& [la, c] : f.terms()) {
        os << "\n";
        for (std::size_t i = 0; i < la.parts().size(); ++i)
            os << (i ? " " : "") << la.parts()[i];
        os << ",";
        for (std::size_t i = 0; i < c.coeffs().size(); ++i)
            os << (i ? " " : "") << c.coeffs()[i];
    }
    return os.str();
}

struct VerifyJob {
    std::string name;
    std::function<dsv::verify::Report()> run;
};

std::vector<VerifyJob> verify_jobs(const std::string& which, int max_n, int max_s,
                                   std::vector<int> primes, long long budget) {
    using namespace dsv;
    if (primes.empty()) primes = {2, 3};
    auto fq_instances = [=]() {
        std::vector<DeltaInstance> list = {
            build_instance(2, Partition({}), 2),     build_instance(2, Partition({1}), 2),
            build_instance(3, Partition({2}), 2),    build_instance(3, Partition({1, 1}), 2),
            build_instance(3, Partition({1}), 2),
        };
        return list;
    };
    std::vector<VerifyJob> all = {
        {"hl", [=] { return verify::hl_identity(max_n > 0 ? max_n : 6, max_s > 0 ? max_s : 4, budget); }},
        {"rev", [=] { return verify::rev_identity(max_n > 0 ? max_n : 6, max_s > 0 ? max_s : 4, budget); }},
        {"coinv", [=] { return verify::coinv_identity(max_n > 0 ? max_n : 8, max_s > 0 ? max_s : 5); }},
        {"dinv-inv", [=] { return verify::dinv_inv(max_n > 0 ? max_n : 4, max_s > 0 ? max_s : 3); }},
        {"recursion", [=] { return verify::flatten_recursion(max_n > 0 ? max_n : 4, max_s > 0 ? max_s : 3); }},
        {"fq", [=] { return verify::fq_counts(fq_instances(), primes, budget); }},
        {"steinberg", [=] { return verify::steinberg_counts(max_n > 0 ? max_n : 4, primes, budget); }},
        {"freepairs", [=] { return verify::free_pair_counts(max_n > 0 ? max_n : 6, max_s > 0 ? max_s : 4); }},
        {"zdecomp", [=] { return verify::z_decomposition(max_n > 0 ? max_n : 4, max_s > 0 ? max_s : 4, 4, 2, budget); }},
        {"pieri-top", [=] { return verify::pieri_top(max_n > 0 ? max_n : 5, max_s > 0 ? max_s : 4, budget); }},
        {"schubert-compat", [=] { return verify::schubert_compat(max_n > 0 ? max_n : 6, max_s > 0 ? max_s : 4); }},
    };
    if (which == "all") return all;
    for (auto& job : all)
        if (job.name == which) return {job};
    throw dsv::InvalidArguments("unknown verify target: " + which);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delta-Springer variety calculator"};
    app.require_subcommand(1);

    std::string lambda_text, mu_text, alpha_text, basis_text = "m";
    std::string format = "json", out_path, variety = "ymu", verify_which;
    int n = 0, s = 1, p = 2;
    int max_n = 0, max_s = 0;
    long long budget = 0;
    bool transpose = false;
    std::vector<int> primes;

    auto add_instance_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "size of the symmetric group")->required();
        cmd->add_option("--lambda", lambda_text, "comma-separated partition, empty for ()");
        cmd->add_option("--s", s, "number of rows")->required();
        cmd->add_option("--budget", budget, "enumeration budget");
        cmd->add_option("--out", out_path, "write output to a file");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* frob = app.add_subcommand("frob", "graded Frobenius characteristic");
    add_instance_flags(frob);
    frob->add_option("--basis", basis_text, "m or s")->check(CLI::IsMember({"m", "s"}));

    CLI::App* hilb = app.add_subcommand("hilb", "Hilbert series");
    add_instance_flags(hilb);

    CLI::App* expand = app.add_subcommand("hl-expand", "Hall-Littlewood expansion terms");
    add_instance_flags(expand);

    CLI::App* count = app.add_subcommand("count", "point counts over F_p");
    add_instance_flags(count);
    count->add_option("--variety", variety, "ymu, steinberg, z, zhat, or spalt-proj")
        ->check(CLI::IsMember({"ymu", "steinberg", "z", "zhat", "spalt-proj"}));
    count->add_option("--mu", mu_text, "comma-separated flag type");
    count->add_option("--alpha", alpha_text, "comma-separated composition (z/zhat)");
    count->add_option("--p", p, "prime field size");
    count->add_flag("--transpose", transpose, "use the transposed nilpotent");

    CLI::App* verify = app.add_subcommand("verify", "check the library identities");
    verify->add_option("which", verify_which, "identity to check or 'all'")->required();
    verify->add_option("--max-n", max_n, "largest n to sweep");
    verify->add_option("--max-s", max_s, "largest s to sweep");
    verify->add_option("--p", primes, "primes to use (repeatable)");
    verify->add_option("--budget", budget, "enumeration budget");
    verify->add_option("--out", out_path, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (budget == 0) budget = default_budget();

        if (frob->parsed() || hilb->parsed() || expand->parsed() || count->parsed()) {
            dsv::Partition lambda = parse_partition(lambda_text);

            if (count->parsed() && variety == "steinberg") {
                long long value = dsv::count_steinberg(
                    lambda, dsv::Composition(parse_int_list(mu_text)), p, budget);
                json out = {{"variety", variety},
                            {"lambda", dsv::to_json(lambda)},
                            {"mu", parse_int_list(mu_text)},
                            {"p", p},
                            {"count", value}};
                emit(format == "json" ? out.dump() : "count\n" + std::to_string(value), out_path);
                return kExitOk;
            }

            dsv::DeltaInstance inst = dsv::build_instance(n, lambda, s);
            json instance_json = {{"n", inst.n()},
                                  {"lambda", dsv::to_json(inst.lambda())},
                                  {"s", inst.s()}};

            if (frob->parsed()) {
                dsv::SymFunc f = dsv::frob_delta(inst, budget);
                if (basis_text == "s") f = dsv::to_basis(f, dsv::Basis::schur);
                emit(format == "json" ? dsv::to_json(f).dump() : symfunc_csv(f), out_path);
                return kExitOk;
            }
            if (hilb->parsed()) {
                dsv::SymFunc f = dsv::frob_delta(inst, budget);
                dsv::QPoly h = f.coeff(dsv::Partition(std::vector<int>(inst.n(), 1)));
                if (format == "csv") {
                    std::ostringstream os;
                    os << "hilb";
                    for (const auto& c : h.coeffs()) os << "," << c;
                    emit(os.str(), out_path);
                } else {
                    json out = instance_json;
                    out["hilb"] = dsv::to_json(h);
                    emit(out.dump(), out_path);
                }
                return kExitOk;
            }
            if (expand->parsed()) {
                json terms = json::array();
                for (const auto& term : dsv::hl_terms(inst)) {
                    terms.push_back({{"nu", dsv::to_json(term.nu)},
                                     {"exponent", term.exponent},
                                     {"qbinom_product", dsv::to_json(term.qbinom_product)},
                                     {"hl_modified_schur", dsv::to_json(dsv::hl_modified(term.nu))}});
                }
                json out = instance_json;
                out["terms"] = terms;
                out["sum"] = dsv::to_json(dsv::hl_rhs(inst));
                emit(out.dump(), out_path);
                return kExitOk;
            }

            // count on a Delta instance
            long long value = 0;
            json out = {{"instance", instance_json}, {"p", p}, {"variety", variety}};
            if (variety == "ymu") {
                dsv::Composition mu(parse_int_list(mu_text));
                value = dsv::count_Y_mu(inst, mu, p, transpose, budget);
                out["mu"] = dsv::to_json(mu);
            } else if (variety == "z" || variety == "zhat") {
                dsv::Composition mu(parse_int_list(mu_text));
                dsv::Composition alpha(parse_int_list(alpha_text));
                value = dsv::count_z(inst, alpha, mu, p, variety == "zhat", budget);
                out["mu"] = dsv::to_json(mu);
                out["alpha"] = dsv::to_json(alpha);
            } else if (variety == "spalt-proj") {
                value = dsv::count_projected_spaltenstein(inst, p, budget);
            }
            out["count"] = value;
            if (format == "csv") {
                std::ostringstream os;
                os << "variety,n,lambda,s,mu,p,count\n"
                   << variety << "," << inst.n() << "," << inst.lambda().str() << "," << inst.s()
                   << "," << mu_text << "," << p << "," << value;
                emit(os.str(), out_path);
            } else {
                emit(out.dump(), out_path);
            }
            return kExitOk;
        }

        // verify
        auto jobs = verify_jobs(verify_which, max_n, max_s, primes, budget);
        bool all_ok = true;
        json report = json::array();
        std::ostringstream lines;
        for (auto& job : jobs) {
            dsv::verify::Report r = job.run();
            all_ok = all_ok && r.ok;
            json entry = {{"check", job.name}, {"cases", r.cases}, {"ok", r.ok}};
            if (!r.ok) entry["counterexample"] = r.first_failure;
            report.push_back(entry);
            lines << entry.dump() << "\n";
        }
        std::string text = lines.str();
        if (!text.empty()) text.pop_back();
        emit(text, out_path);
        return all_ok ? kExitOk : kExitViolation;
    } catch (const dsv::ResourceLimit& e) {
        std::cerr << json({{"error", e.what()}, {"type", "resource-limit"}}).dump() << "\n";
        return kExitResourceLimit;
    } catch (const dsv::Error& e) {
        std::cerr << json({{"error", e.what()}, {"type", "invalid-input"}}).dump() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << json({{"error", e.what()}, {"type", "invalid-input"}}).dump() << "\n";
        return kExitInvalidInput;
    }
}
