#include "dsv/json_io.hpp"

#include <functional>
#include <limits>

namespace dsv {

namespace {

long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ResourceLimit("coefficient does not fit in a 64-bit JSON integer");
    return static_cast<long long>(v);
}

} // namespace

json to_json(const QPoly& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(to_int64(c));
    return out;
}

json to_json(const Partition& la) {
    json out = json::array();
    for (int p : la.parts()) out.push_back(p);
    return out;
}

json to_json(const Composition& alpha) {
    json out = json::array();
    for (int p : alpha.parts()) out.push_back(p);
    return out;
}

json to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [la, c] : f.terms())
        terms.push_back({{"partition", to_json(la)}, {"coeffs", to_json(c)}});
    return {{"n", f.n()}, {"basis", basis_tag(f.basis())}, {"terms", terms}};
}

namespace {

json padded_rows(const DeltaInstance& inst, const std::function<int(Cell)>& value) {
    json out = json::array();
    int width = inst.rows() ? inst.row_length(1) : 0;
    for (int i = 1; i <= inst.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= width; ++j)
            row.push_back(inst.in_diagram({i, j}) ? value({i, j}) : 0);
        out.push_back(row);
    }
    return out;
}

} // namespace

json to_json(const Filling& T) {
    return padded_rows(T.instance(), [&](Cell c) { return T.label(c); });
}

json to_json(const PRDFilling& phi) {
    return padded_rows(phi.instance(), [&](Cell c) { return phi.label(c); });
}

QPoly qpoly_from_json(const json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j) coeffs.emplace_back(c.get<long long>());
    return QPoly(std::move(coeffs));
}

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& p : j) parts.push_back(p.get<int>());
    return Partition(std::move(parts));
}

SymFunc symfunc_from_json(const json& j) {
    SymFunc f(j.at("n").get<int>(), basis_from_tag(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        f.add_term(partition_from_json(term.at("partition")), qpoly_from_json(term.at("coeffs")));
    return f;
}

} // namespace dsv
