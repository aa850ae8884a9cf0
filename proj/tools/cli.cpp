#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fiberres/fiber.hpp"
#include "fiberres/formulas.hpp"
#include "fiberres/homcheck.hpp"
#include "fiberres/io.hpp"
#include "fiberres/resolutions.hpp"
#include "fiberres/star.hpp"

namespace fiberres::cli {

namespace {

struct Job {
    std::vector<std::string> vars_a, vars_b;
    std::string iprime, jprime, ideal_i, ideal_j;
    std::string prime;
    std::optional<int> degree_bound;
    std::optional<int> truncate;
    bool json = false;
    bool verify = false;
    bool betti = false;
    bool constrained = true;
    std::string out;
    std::string complex_path;
    std::string instance_path;
    std::string which = "fiber";
};

struct Loaded {
    FiberInstance inst;
    /// I and J are the ideals of the two variable blocks.
    bool blocks_mode = false;
};

Field field_from(const std::string& s)
{
    if (s.empty())
        return Field{};
    if (s == "QQ" || s == "Q" || s == "0")
        return Field::rationals();
    if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) || s.size() > 10)
        return Field::parse(s);
    return Field::prime(static_cast<std::uint32_t>(std::stoull(s)));
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

MonomialIdeal block_ideal(const RingSpec& R, bool a)
{
    return MonomialIdeal::of_variables(R, a ? R.block_a_indices() : R.block_b_indices());
}

// Blocks mode needs I' inside the square of the block ideal and in the block's variables.
void gate_block(const MonomialIdeal& small, const MonomialIdeal& block, const std::vector<std::size_t>& vars,
                const char* name)
{
    for (auto v : small.support())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw HypothesisError(std::string("hypothesis violation (containment): ") + name + " = " +
                                  small.to_string() + " uses variables outside its block");
    if (!ideal_product(block, block).contains(small))
        throw HypothesisError(std::string("hypothesis violation (containment): ") + name + " = " +
                              small.to_string() + " is not inside " + block.to_string() + "^2");
}

void gate_blocks(const FiberInstance& inst)
{
    const RingSpec& R = inst.ring;
    gate_block(inst.Ip, block_ideal(R, true), R.block_a_indices(), "I'");
    gate_block(inst.Jp, block_ideal(R, false), R.block_b_indices(), "J'");
}

RingSpec ring_from_flags(const Job& job)
{
    if (job.vars_a.empty() || job.vars_b.empty())
        throw ParseError("--vars-a and --vars-b are required");
    return RingSpec::with_blocks(job.vars_a, job.vars_b, field_from(job.prime));
}

Loaded load_instance(const Job& job)
{
    Loaded L;
    if (!job.instance_path.empty()) {
        if (!job.prime.empty() || !job.vars_a.empty() || !job.vars_b.empty())
            throw ParseError("--instance carries its own ring; drop --prime/--vars-a/--vars-b");
        json j = read_json_file(job.instance_path);
        L.blocks_mode = !j.contains("I") && !j.contains("J");
        if (L.blocks_mode) {
            RingSpec R = ring_from_json(j.at("ring"));
            if (!R.partition())
                throw ParseError("instance without I, J needs a ring with blocks");
            gate_blocks(FiberInstance{R,
                                         j.contains("Ip") ? ideal_from_json(R, j.at("Ip")) : MonomialIdeal::zero(R),
                                         block_ideal(R, true),
                                         j.contains("Jp") ? ideal_from_json(R, j.at("Jp")) : MonomialIdeal::zero(R),
                                         block_ideal(R, false),
                                         {}, {}, {}, {}});
        }
        L.inst = instance_from_json(j);
        return L;
    }
    RingSpec R = ring_from_flags(job);
    MonomialIdeal Ip = MonomialIdeal::parse(R, job.iprime);
    MonomialIdeal Jp = MonomialIdeal::parse(R, job.jprime);
    L.blocks_mode = job.ideal_i.empty() && job.ideal_j.empty();
    if (L.blocks_mode) {
        gate_blocks(FiberInstance{R, Ip, block_ideal(R, true), Jp, block_ideal(R, false), {}, {}, {}, {}});
        L.inst = FiberInstance::from_blocks(Ip, Jp);
        return L;
    }
    MonomialIdeal I = job.ideal_i.empty() ? block_ideal(R, true) : MonomialIdeal::parse(R, job.ideal_i);
    MonomialIdeal J = job.ideal_j.empty() ? block_ideal(R, false) : MonomialIdeal::parse(R, job.ideal_j);
    if (!I.contains(Ip))
        throw HypothesisError("hypothesis violation (containment): I' = " + Ip.to_string() + " is not inside I = " +
                              I.to_string());
    if (!J.contains(Jp))
        throw HypothesisError("hypothesis violation (containment): J' = " + Jp.to_string() + " is not inside J = " +
                              J.to_string());
    L.inst = FiberInstance::from_ideals(Ip, I, Jp, J);
    L.inst.validate();
    return L;
}

int max_twist(const ChainComplex& C)
{
    int t = 0;
    for (int n : C.degrees())
        for (int w : C.module(n).twists())
            t = std::max(t, w);
    return t;
}

std::string ranks_text(const ChainComplex& C)
{
    std::string s;
    for (int n = 0; n <= C.max_degree(); ++n)
        s += (n ? " " : "") + std::to_string(C.rank(n));
    return s;
}

json ranks_json(const ChainComplex& C)
{
    json a = json::array();
    for (int n = 0; n <= C.max_degree(); ++n)
        a.push_back(C.rank(n));
    return a;
}

void print_differentials(std::ostream& os, const ChainComplex& C)
{
    for (int n = C.min_degree() + 1; n <= C.max_degree(); ++n) {
        const PolyMatrix& d = C.differential(n);
        os << "d_" << n << " (" << d.rows() << "x" << d.cols() << "):\n";
        for (std::size_t r = 0; r < d.rows(); ++r) {
            os << "  [";
            for (std::size_t c = 0; c < d.cols(); ++c)
                os << (c ? ", " : "") << d(r, c).to_string(C.ring());
            os << "]\n";
        }
    }
}

bool vectors_agree(const std::vector<std::int64_t>& a, const std::vector<std::size_t>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<std::int64_t>(b[i]))
            return false;
    return true;
}

struct Check {
    std::string name;
    bool ok;
};

// Exactness plus H_0 against the quotient by `ideal`.
Check resolves(const std::string& name, const ChainComplex& C, const MonomialIdeal& ideal, int bound)
{
    if (!is_complex(C))
        return {name, false};
    HomologyReport r = homology_dims(C, bound);
    bool ok = r.exact_in_positive && r.consistent && r.euler_ok && vectors_agree(r.h0_hilbert, hilbert_function(ideal, bound));
    return {name, ok};
}

std::string tor_mode_name(TorMode m) { return m == TorMode::Structural ? "structural" : "bounded"; }

struct FiberRun {
    Loaded loaded;
    FiberBuild build;
    int bound = 0;
    TorCertificate tor;
    MinimalityCertificate minimal;
};

FiberRun run_fiber_build(const Job& job)
{
    FiberRun f;
    f.loaded = load_instance(job);
    const FiberInstance& inst = f.loaded.inst;
    f.build = build_fiber(inst, job.constrained);
    f.bound = job.degree_bound ? *job.degree_bound : default_degree_bound(inst);
    f.tor = certify_tor_independence(inst, f.bound);
    if (!f.tor.independent)
        throw HypothesisError("hypothesis violation (Tor-independence): pair " + f.tor.failing_pair +
                              " has nonzero Tor up to degree " + std::to_string(f.bound));
    f.minimal = certify_minimal(inst, f.build);
    return f;
}

json certificate_json(const FiberRun& f)
{
    const auto& m = f.minimal;
    return {{"tor_independence", tor_mode_name(f.tor.mode)},
            {"degree_bound", f.bound},
            {"minimality_hypotheses", m.hypotheses},
            {"hypotheses",
             {{"regular_I", m.regular_I},
              {"regular_J", m.regular_J},
              {"Ip_in_I_squared", m.ip_in_i_squared},
              {"Jp_in_J_squared", m.jp_in_j_squared},
              {"inputs_minimal", m.inputs_minimal},
              {"constrained_lifts", m.constrained_lifts}}},
            {"minimal", m.is_minimal}};
}

void certificate_text(std::ostream& os, const FiberRun& f)
{
    const auto& m = f.minimal;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "certificate:\n"
       << "  tor-independence: " << tor_mode_name(f.tor.mode) << "\n"
       << "  degree bound: " << f.bound << "\n"
       << "  minimality hypotheses: " << yn(m.hypotheses) << " (regular I " << yn(m.regular_I) << ", regular J "
       << yn(m.regular_J) << ", I' in I^2 " << yn(m.ip_in_i_squared) << ", J' in J^2 " << yn(m.jp_in_j_squared)
       << ", minimal inputs " << yn(m.inputs_minimal) << ", constrained lifts " << yn(m.constrained_lifts) << ")\n"
       << "  minimal: " << yn(m.is_minimal) << "\n";
}

json ideals_json(const FiberInstance& inst)
{
    return {{"Ip", ideal_to_json(inst.Ip)},
            {"I", ideal_to_json(inst.I)},
            {"Jp", ideal_to_json(inst.Jp)},
            {"J", ideal_to_json(inst.J)},
            {"target", ideal_to_json(inst.target_ideal())}};
}

std::vector<Check> fiber_checks(const FiberRun& f)
{
    const FiberInstance& inst = f.loaded.inst;
    const FiberBuild& b = f.build;
    MonomialIdeal IJ = ideal_product(inst.I, inst.J);
    return {{"Phi is a chain map", is_chain_map(b.Phi)},
            {"Psi is a chain map", is_chain_map(b.Psi)},
            resolves("star product resolves R/IJ", b.star, IJ, f.bound),
            resolves("Cone(Phi) resolves R/<I', IJ>", b.cone_phi, ideal_sum(inst.Ip, IJ), f.bound),
            resolves("Cone(Psi) resolves R/<IJ, J'>", b.cone_psi, ideal_sum(IJ, inst.Jp), f.bound),
            resolves("Cone(Omega) resolves R/<I', IJ, J'>", b.resolution, inst.target_ideal(), f.bound)};
}

int emit_checks(std::ostream& os, json& doc, const std::vector<Check>& checks, bool as_json)
{
    bool all = true;
    json arr = json::array();
    for (const auto& c : checks) {
        all = all && c.ok;
        if (as_json)
            arr.push_back({{"check", c.name}, {"ok", c.ok}});
        else
            os << "  " << (c.ok ? "ok    " : "FAIL  ") << c.name << "\n";
    }
    if (as_json)
        doc["verification"] = {{"checks", arr}, {"passed", all}};
    return all ? kOk : kVerification;
}

int cmd_fiber(const Job& job, std::ostream& os)
{
    FiberRun f = run_fiber_build(job);
    const FiberInstance& inst = f.loaded.inst;
    const ChainComplex& res = f.build.resolution;
    int code = kOk;
    // Under the sufficient hypotheses a non-minimal cone contradicts the construction.
    if (f.minimal.hypotheses && !f.minimal.is_minimal)
        code = kVerification;
    if (job.json) {
        json doc = {{"command", "fiber"},
                    {"mode", f.loaded.blocks_mode ? "blocks" : "explicit"},
                    {"ring", ring_to_json(inst.ring)},
                    {"ideals", ideals_json(inst)},
                    {"ranks", ranks_json(res)},
                    {"betti", betti_to_json(generator_table(res))},
                    {"certificate", certificate_json(f)}};
        if (job.verify) {
            std::ostringstream sink;
            code = std::max(code, emit_checks(sink, doc["certificate"], fiber_checks(f), true));
        }
        os << doc.dump(2) << "\n";
        return code;
    }
    os << "mode: " << (f.loaded.blocks_mode ? "blocks" : "explicit") << "\n"
       << "ring: " << inst.ring.field().name() << "\n"
       << "I' = " << inst.Ip.to_string() << ", I = " << inst.I.to_string() << ", J' = " << inst.Jp.to_string()
       << ", J = " << inst.J.to_string() << "\n"
       << "resolves R/" << inst.target_ideal().to_string() << "\n"
       << "ranks: " << ranks_text(res) << "\n";
    if (job.betti)
        os << "betti:\n" << generator_table(res).render();
    certificate_text(os, f);
    if (job.verify) {
        json unused;
        os << "verification:\n";
        code = std::max(code, emit_checks(os, unused, fiber_checks(f), false));
    }
    return code;
}

std::pair<MonomialIdeal, MonomialIdeal> star_ideals(const Job& job)
{
    RingSpec R = ring_from_flags(job);
    MonomialIdeal I = job.ideal_i.empty() ? block_ideal(R, true) : MonomialIdeal::parse(R, job.ideal_i);
    MonomialIdeal J = job.ideal_j.empty() ? block_ideal(R, false) : MonomialIdeal::parse(R, job.ideal_j);
    if (I.is_zero() || J.is_zero())
        throw ParseError("star needs nonzero ideals");
    return {I, J};
}

int cmd_star(const Job& job, std::ostream& os)
{
    auto [I, J] = star_ideals(job);
    ChainComplex X = resolution_of(I), Y = resolution_of(J);
    ChainComplex P = star_product(X, Y);
    const int trunc = job.truncate ? *job.truncate : P.max_degree() + 1;
    const int bound = job.degree_bound ? *job.degree_bound : max_twist(P) + 2;
    PowerSeries gf = generating_function(P, trunc);
    int code = kOk;
    if (job.json) {
        json doc = {{"command", "star"},
                    {"I", ideal_to_json(I)},
                    {"J", ideal_to_json(J)},
                    {"ranks", ranks_json(P)},
                    {"generating_function", series_to_json(gf)},
                    {"complex", complex_to_json(P)},
                    {"betti", betti_to_json(generator_table(P))}};
        if (job.verify) {
            HomologyReport r = homology_dims(P, bound);
            doc["report"] = report_to_json(r);
            std::ostringstream sink;
            code = emit_checks(sink, doc, {resolves("resolves R/IJ", P, ideal_product(I, J), bound)}, true);
        }
        os << doc.dump(2) << "\n";
        return code;
    }
    os << "X resolves R/" << I.to_string() << ", Y resolves R/" << J.to_string() << "\n"
       << "ranks: " << ranks_text(P) << "\n"
       << "generating function: " << gf.to_string() << "\n";
    print_differentials(os, P);
    if (job.betti)
        os << "betti:\n" << generator_table(P).render();
    if (job.verify) {
        HomologyReport r = homology_dims(P, bound);
        os << "homology up to degree " << bound << ": " << (r.exact_in_positive ? "exact" : "NOT exact")
           << (r.complete ? " (complete)" : "") << "\n";
        json unused;
        code = emit_checks(os, unused, {resolves("resolves R/IJ", P, ideal_product(I, J), bound)}, false);
    }
    return code;
}

BettiTable minimal_table(const ChainComplex& C) { return graded_betti(is_minimal(C) ? C : minimize(C)); }

int cmd_betti(const Job& job, std::ostream& os)
{
    FiberRun f = run_fiber_build(job);
    const FiberInstance& inst = f.loaded.inst;
    BettiTable built = generator_table(f.build.resolution);
    BettiTable gI = minimal_table(inst.X), gJ = minimal_table(inst.Y);
    BettiTable formula =
        fiber_betti_formula(star_betti_formula(gI, gJ), gI, minimal_table(inst.S), gJ, minimal_table(inst.T));
    bool match = built == formula;
    std::optional<bool> totals_match;
    if (f.loaded.blocks_mode) {
        const int m = static_cast<int>(inst.ring.block_a_indices().size());
        const int n = static_cast<int>(inst.ring.block_b_indices().size());
        BettiTable bIp = minimal_table(inst.S), bJp = minimal_table(inst.T);
        bool ok = built.total(0) == 1;
        for (int l = 1; l <= std::max(built.max_degree(), m + n) + 1; ++l)
            ok = ok && built.total(l) == betti_fiber(l, m, n, bIp, bJp);
        totals_match = ok;
        match = match && ok;
    }
    if (job.json) {
        json doc = {{"command", "betti"},
                    {"constructed", betti_to_json(built)},
                    {"formula", betti_to_json(formula)},
                    {"match", match},
                    {"certificate", certificate_json(f)}};
        if (totals_match)
            doc["totals_formula_match"] = *totals_match;
        os << doc.dump(2) << "\n";
    } else {
        os << "constructed:\n" << built.render() << "formula:\n" << formula.render();
        if (totals_match)
            os << "total Betti numbers by block sizes: " << (*totals_match ? "match" : "MISMATCH") << "\n";
        os << "match: " << (match ? "yes" : "NO") << "\n";
        certificate_text(os, f);
    }
    return match ? kOk : kVerification;
}

PowerSeries poincare_of(const ChainComplex& C, int trunc)
{
    return generating_function(is_minimal(C) ? C : minimize(C), trunc);
}

int cmd_poincare(const Job& job, std::ostream& os)
{
    FiberRun f = run_fiber_build(job);
    const FiberInstance& inst = f.loaded.inst;
    ChainComplex rIpJ = resolution_of(ideal_sum(inst.Ip, inst.J));
    ChainComplex rIJp = resolution_of(ideal_sum(inst.I, inst.Jp));
    ChainComplex rIJsum = resolution_of(ideal_sum(inst.I, inst.J));
    int len = f.build.resolution.max_degree();
    for (const ChainComplex* C : {&rIpJ, &rIJp, &rIJsum, &f.build.star})
        len = std::max(len, C->max_degree());
    const int trunc = job.truncate ? *job.truncate : len + 2;
    PowerSeries PF = poincare_of(f.build.resolution, trunc);
    PowerSeries r1 = poincare_identity_1(PF, poincare_of(rIpJ, trunc), poincare_of(rIJp, trunc),
                                         poincare_of(rIJsum, trunc),
                                         ideal_series_from_quotient(poincare_of(f.build.star, trunc + 1)));
    std::optional<PowerSeries> r2;
    if (f.loaded.blocks_mode) {
        const int m = static_cast<int>(inst.ring.block_a_indices().size());
        const int n = static_cast<int>(inst.ring.block_b_indices().size());
        r2 = poincare_identity_2(PF, poincare_of(inst.S, trunc), poincare_of(inst.T, trunc), m, n);
    }
    const bool ok = r1.is_zero() && (!r2 || r2->is_zero());
    if (job.json) {
        json doc = {{"command", "poincare"},
                    {"P_F", series_to_json(PF)},
                    {"residual_1", series_to_json(r1)},
                    {"residual_2", r2 ? series_to_json(*r2) : json(nullptr)},
                    {"zero", ok},
                    {"certificate", certificate_json(f)}};
        os << doc.dump(2) << "\n";
    } else {
        os << "P_F = " << PF.to_string() << "\n"
           << "residual 1: " << r1.to_string() << "\n"
           << "residual 2: " << (r2 ? r2->to_string() : std::string("n/a (explicit I, J)")) << "\n"
           << "identities: " << (ok ? "hold" : "FAIL") << "\n";
        certificate_text(os, f);
    }
    return ok ? kOk : kVerification;
}

int cmd_verify(const Job& job, std::ostream& os)
{
    if (!job.complex_path.empty()) {
        ChainComplex C = complex_from_json(read_json_file(job.complex_path));
        const int bound = job.degree_bound ? *job.degree_bound : max_twist(C) + 2;
        bool d2 = is_complex(C);
        HomologyReport r = homology_dims(C, bound);
        std::vector<Check> checks = {{"d^2 = 0", d2},
                                     {"exact in positive degrees", r.exact_in_positive},
                                     {"rank bookkeeping consistent", r.consistent && r.euler_ok}};
        if (!job.ideal_i.empty()) {
            MonomialIdeal I = MonomialIdeal::parse(C.ring(), job.ideal_i);
            checks.push_back({"H_0 matches R/" + I.to_string(), vectors_agree(r.h0_hilbert, hilbert_function(I, bound))});
        }
        json doc = {{"command", "verify"}, {"report", report_to_json(r)}};
        if (!job.json)
            os << "homology up to degree " << bound << (r.complete ? " (complete)" : "") << ":\n";
        int code = emit_checks(os, doc, checks, job.json);
        if (job.json)
            os << doc.dump(2) << "\n";
        return code;
    }
    FiberRun f = run_fiber_build(job);
    json doc = {{"command", "verify"}, {"certificate", certificate_json(f)}};
    if (!job.json) {
        certificate_text(os, f);
        os << "checks:\n";
    }
    int code = emit_checks(os, doc, fiber_checks(f), job.json);
    if (f.minimal.hypotheses && !f.minimal.is_minimal)
        code = kVerification;
    if (job.json)
        os << doc.dump(2) << "\n";
    return code;
}

int cmd_export(const Job& job, std::ostream& os)
{
    Loaded L = load_instance(job);
    const FiberInstance& inst = L.inst;
    json doc;
    if (job.which == "instance") {
        doc = instance_to_json(inst);
    } else if (job.which == "X" || job.which == "Y" || job.which == "S" || job.which == "T") {
        const ChainComplex& C =
            job.which == "X" ? inst.X : job.which == "Y" ? inst.Y : job.which == "S" ? inst.S : inst.T;
        doc = complex_to_json(C);
    } else {
        FiberBuild b = build_fiber(inst, job.constrained);
        if (job.which == "star")
            doc = complex_to_json(b.star);
        else if (job.which == "cone-phi")
            doc = complex_to_json(b.cone_phi);
        else if (job.which == "cone-psi")
            doc = complex_to_json(b.cone_psi);
        else
            doc = complex_to_json(b.resolution);
    }
    os << doc.dump(2) << "\n";
    return kOk;
}

void add_ring_options(CLI::App* sub, Job& job)
{
    sub->add_option("--vars-a", job.vars_a, "variables of the first block")->delimiter(',');
    sub->add_option("--vars-b", job.vars_b, "variables of the second block")->delimiter(',');
    sub->add_option("--prime", job.prime, "coefficient field: a prime p, or QQ");
    sub->add_option("--ideal-i", job.ideal_i, "explicit I (comma-separated monomials)");
    sub->add_option("--ideal-j", job.ideal_j, "explicit J");
    sub->add_option("--degree-bound", job.degree_bound, "internal degree bound for homology")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", job.json, "emit JSON");
    sub->add_option("--out", job.out, "write output to a file");
}

void add_instance_options(CLI::App* sub, Job& job)
{
    add_ring_options(sub, job);
    sub->add_option("--iprime", job.iprime, "I' (comma-separated monomials)");
    sub->add_option("--jprime", job.jprime, "J'");
    sub->add_option("--instance", job.instance_path, "instance JSON file")->check(CLI::ExistingFile);
    sub->add_flag("--constrained-lift,!--no-constrained-lift", job.constrained,
                  "restrict lifts to the ideal when possible (default on)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Job job;
    CLI::App app{"Free resolutions of fiber products of monomial quotients", "fiberres"};
    app.require_subcommand(1);

    auto* star = app.add_subcommand("star", "build the star product of two resolutions");
    add_ring_options(star, job);
    star->add_option("--truncate", job.truncate, "series truncation degree")->check(CLI::NonNegativeNumber);
    star->add_flag("--verify", job.verify, "check exactness and H_0");
    star->add_flag("--betti", job.betti, "print the Betti table");

    auto* fiber = app.add_subcommand("fiber", "resolve R/<I', IJ, J'>");
    add_instance_options(fiber, job);
    fiber->add_flag("--verify", job.verify, "run the homology checks");
    fiber->add_flag("--betti", job.betti, "print the Betti table");

    auto* betti = app.add_subcommand("betti", "constructed and formula Betti tables");
    add_instance_options(betti, job);

    auto* poincare = app.add_subcommand("poincare", "Poincare series identity residuals");
    add_instance_options(poincare, job);
    poincare->add_option("--truncate", job.truncate, "series truncation degree")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "homology certificate for an instance or a complex");
    add_instance_options(verify, job);
    verify->add_option("--complex", job.complex_path, "complex JSON file")->check(CLI::ExistingFile);

    auto* exp = app.add_subcommand("export", "emit JSON complexes");
    add_instance_options(exp, job);
    exp->add_option("--which", job.which, "instance, X, Y, S, T, star, cone-phi, cone-psi or fiber")
        ->check(CLI::IsMember({"instance", "X", "Y", "S", "T", "star", "cone-phi", "cone-psi", "fiber"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ostringstream doc;
    int code = kOk;
    try {
        if (star->parsed())
            code = cmd_star(job, doc);
        else if (fiber->parsed())
            code = cmd_fiber(job, doc);
        else if (betti->parsed())
            code = cmd_betti(job, doc);
        else if (poincare->parsed())
            code = cmd_poincare(job, doc);
        else if (verify->parsed())
            code = cmd_verify(job, doc);
        else
            code = cmd_export(job, doc);
    } catch (const HypothesisError& e) {
        err << e.what() << "\n";
        return kHypothesis;
    } catch (const LiftError& e) {
        err << "hypothesis violation (lift): " << e.what() << "\n";
        return kHypothesis;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    if (job.out.empty()) {
        out << doc.str();
    } else {
        std::ofstream f(job.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << job.out << "'\n";
            return kUsage;
        }
        f << doc.str();
    }
    if (code == kVerification)
        err << "verification failed\n";
    return code;
}

} // namespace fiberres::cli
