#include "fiberres/io.hpp"

#include <charconv>

namespace fiberres {

namespace {

int parse_int_key(const std::string& s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError("expected an integer key, got '" + s + "'");
    return v;
}

std::pair<int, int> parse_pair_key(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected a key of the form 'l,k', got '" + s + "'");
    return {parse_int_key(s.substr(0, comma)), parse_int_key(s.substr(comma + 1))};
}

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

json ring_to_json(const RingSpec& ring)
{
    json j;
    j["variables"] = ring.variables();
    j["field"] = ring.field().name();
    if (ring.partition())
        j["blocks"] = {{"a", ring.partition()->block_a}, {"b", ring.partition()->block_b}};
    return j;
}

RingSpec ring_from_json(const json& j)
{
    try {
        auto vars = require(j, "variables").get<std::vector<std::string>>();
        Field k = j.contains("field") ? Field::parse(j.at("field").get<std::string>()) : Field{};
        std::optional<VariablePartition> part;
        if (j.contains("blocks")) {
            const json& b = j.at("blocks");
            part = VariablePartition{require(b, "a").get<std::vector<std::string>>(),
                                     require(b, "b").get<std::vector<std::string>>()};
        }
        return RingSpec(std::move(vars), k, std::move(part));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ring description: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad ring description: ") + e.what());
    }
}

json complex_to_json(const ChainComplex& C)
{
    json j;
    j["ring"] = ring_to_json(C.ring());
    json mods = json::object();
    json diffs = json::object();
    for (int n : C.degrees())
        mods[std::to_string(n)] = C.module(n).twists();
    for (int n : C.degrees()) {
        const PolyMatrix& d = C.differential(n);
        if (d.rows() == 0 || d.cols() == 0)
            continue;
        json m = json::array();
        for (std::size_t r = 0; r < d.rows(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < d.cols(); ++c)
                row.push_back(d(r, c).to_string(C.ring()));
            m.push_back(std::move(row));
        }
        diffs[std::to_string(n)] = std::move(m);
    }
    j["modules"] = std::move(mods);
    j["differentials"] = std::move(diffs);
    return j;
}

ChainComplex complex_from_json(const json& j)
{
    RingSpec ring = ring_from_json(require(j, "ring"));
    std::map<int, GradedFreeModule> mods;
    std::map<int, PolyMatrix> diffs;
    try {
        for (const auto& [k, v] : require(j, "modules").items())
            mods.emplace(parse_int_key(k), GradedFreeModule(v.get<std::vector<int>>()));
        if (j.contains("differentials"))
            for (const auto& [k, v] : j.at("differentials").items()) {
                int n = parse_int_key(k);
                std::size_t rows = v.size();
                std::size_t cols = rows ? v.at(0).size() : 0;
                PolyMatrix m(rows, cols);
                for (std::size_t r = 0; r < rows; ++r) {
                    if (v.at(r).size() != cols)
                        throw ParseError("ragged matrix for differential " + k);
                    for (std::size_t c = 0; c < cols; ++c)
                        m(r, c) = parse_polynomial(v.at(r).at(c).get<std::string>(), ring);
                }
                auto rank_of = [&](int deg) {
                    auto it = mods.find(deg);
                    return it == mods.end() ? std::size_t{0} : it->second.rank();
                };
                if (rows == 0)
                    m = PolyMatrix(rank_of(n - 1), rank_of(n));
                diffs.emplace(n, std::move(m));
            }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad complex description: ") + e.what());
    }
    ChainComplex C(ring, std::move(mods), std::move(diffs));
    if (auto fine = infer_multidegrees(C))
        return *fine;
    return C;
}

json ideal_to_json(const MonomialIdeal& I)
{
    json a = json::array();
    for (const auto& g : I.generators())
        a.push_back(g.to_string(I.ring()));
    return a;
}

MonomialIdeal ideal_from_json(const RingSpec& ring, const json& j)
{
    try {
        if (j.is_string())
            return MonomialIdeal::parse(ring, j.get<std::string>());
        std::vector<Polynomial> gens;
        for (const auto& g : j)
            gens.push_back(parse_polynomial(g.get<std::string>(), ring));
        return MonomialIdeal::from_polynomials(ring, gens);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ideal description: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json betti_to_json(const BettiTable& t)
{
    json tot = json::object(), gr = json::object();
    for (const auto& [l, n] : t.totals())
        tot[std::to_string(l)] = n;
    for (const auto& [lk, n] : t.graded_entries())
        gr[std::to_string(lk.first) + "," + std::to_string(lk.second)] = n;
    return {{"totals", tot}, {"graded", gr}};
}

BettiTable betti_from_json(const json& j)
{
    BettiTable t;
    try {
        if (j.contains("graded") && !j.at("graded").empty()) {
            for (const auto& [k, v] : j.at("graded").items()) {
                auto [l, deg] = parse_pair_key(k);
                t.add(l, deg, v.get<std::int64_t>());
            }
            return t;
        }
        std::vector<std::int64_t> totals;
        for (const auto& [k, v] : require(j, "totals").items()) {
            int l = parse_int_key(k);
            if (l < 0)
                throw ParseError("negative homological degree in totals");
            if (totals.size() <= static_cast<std::size_t>(l))
                totals.resize(static_cast<std::size_t>(l) + 1, 0);
            totals[static_cast<std::size_t>(l)] = v.get<std::int64_t>();
        }
        return BettiTable::from_totals(totals);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad Betti table: ") + e.what());
    }
}

json series_to_json(const PowerSeries& s)
{
    return {{"coefficients", s.coeffs()}, {"truncation", s.truncation()}, {"text", s.to_string()}};
}

json report_to_json(const HomologyReport& r)
{
    json dims = json::object();
    for (const auto& [id, n] : r.dims)
        if (n != 0)
            dims[std::to_string(id.first) + "," + std::to_string(id.second)] = n;
    return {{"dims", dims},
            {"degree_bound", r.degree_bound},
            {"exact_in_positive", r.exact_in_positive},
            {"h0_hilbert", r.h0_hilbert},
            {"euler_ok", r.euler_ok},
            {"consistent", r.consistent},
            {"complete", r.complete},
            {"multigraded", r.multigraded}};
}

json instance_to_json(const FiberInstance& inst)
{
    return {{"ring", ring_to_json(inst.ring)},
            {"Ip", ideal_to_json(inst.Ip)},
            {"I", ideal_to_json(inst.I)},
            {"Jp", ideal_to_json(inst.Jp)},
            {"J", ideal_to_json(inst.J)},
            {"X", complex_to_json(inst.X)},
            {"Y", complex_to_json(inst.Y)},
            {"S", complex_to_json(inst.S)},
            {"T", complex_to_json(inst.T)}};
}

FiberInstance instance_from_json(const json& j)
{
    RingSpec ring = ring_from_json(require(j, "ring"));
    auto ideal = [&](const char* key) {
        return j.contains(key) ? ideal_from_json(ring, j.at(key)) : MonomialIdeal::zero(ring);
    };
    MonomialIdeal Ip = ideal("Ip"), Jp = ideal("Jp");
    FiberInstance inst = j.contains("I") || j.contains("J") || !ring.partition()
                             ? FiberInstance::from_ideals(Ip, ideal("I"), Jp, ideal("J"))
                             : FiberInstance::from_blocks(Ip, Jp);
    bool replaced = false;
    const std::pair<const char*, ChainComplex*> slots[] = {{"X", &inst.X}, {"Y", &inst.Y}, {"S", &inst.S}, {"T", &inst.T}};
    for (auto [key, slot] : slots)
        if (j.contains(key)) {
            *slot = complex_from_json(j.at(key));
            replaced = true;
        }
    if (replaced)
        inst.validate();
    return inst;
}

} // namespace fiberres
