#include <chrono>
#include <iostream>

#include "CLI11.hpp"

#include "bhk/io/report.hpp"
#include "bhk/verify/tables.hpp"

using namespace bhk;
using io::json;

namespace {

struct Common {
    unsigned jobs = 0;
    double tolerance = 1e-6;
    std::string format = "text";
    std::uint64_t cap = 0;

    count::CountConfig count() const {
        count::CountConfig c;
        c.jobs = jobs;
        if (cap) c.work_cap = cap;
        return c;
    }
    hyper::SumOptions sums() const { return {tolerance, jobs}; }
    zeta::AssemblyOptions assembly() const {
        zeta::AssemblyOptions o;
        o.l.sums = sums();
        o.count = count();
        return o;
    }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--jobs", c.jobs, "worker threads (0: all cores)");
    sub->add_option("--tolerance", c.tolerance, "hypergeometric residual tolerance, scaled by q^{d/2}");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap", c.cap, "work cap on evaluated points (0: default)");
}

json rational_list(const std::vector<Rational>& v) { return io::rationals_json(v); }

ff::PrimePower parse_q(const std::string& text) { return ff::PrimePower::parse(text); }

std::uint64_t require_prime(const std::string& text) {
    auto pp = parse_q(text);
    if (pp.r != 1) throw PreconditionError("this command needs a prime q, got " + pp.str());
    return pp.p;
}

zeta::Family family_of(const inv::ExponentMatrix& a) {
    if (a == fixtures::kF4) return zeta::Family::F4;
    if (a == fixtures::kL2L2) return zeta::Family::L2L2;
    throw PreconditionError("zeta assembly is implemented for the F4 and L2L2 pencils only");
}

std::string printed_display(const fixtures::ZetaRow& row, std::uint64_t q) {
    if (!row.smooth) return "not smooth";
    return zeta::display(zeta::factor_weil(zeta::row_polynomial(row, q), q), q);
}

// ---------------------------------------------------------------- commands

io::Report cmd_validate(const std::string& file) {
    io::Report r;
    r.command = "validate";
    auto p = io::load_pencil(file);
    r.inputs = {{"file", file}, {"pencil", io::pencil_to_json(p)}};
    inv::validate_invertible(p.matrix);
    auto ws = inv::weights(p.matrix);
    auto [at, dual] = inv::transpose_mirror(p.matrix);
    auto q = inv::sl_j_quotient(p.matrix);
    r.results = {{"determinant", inv::determinant(p.matrix).str()},
                 {"weights", ws.weights},
                 {"degree", ws.degree},
                 {"calabi_yau", inv::is_calabi_yau(p.matrix)},
                 {"atomic", inv::atomic_decomposition(p.matrix).str()},
                 {"transpose", at.a},
                 {"dual_weights", dual.weights},
                 {"dual_degree", dual.degree},
                 {"sl_order", q.sl.order()},
                 {"j_order", q.j.order()},
                 {"quotient", verify::group_str(q.quotient_invariants)},
                 {"quotient_invariants", io::bigints_json(q.quotient_invariants)}};
    return r;
}

io::Report cmd_count(const std::string& file, const std::string& qtext, std::optional<std::int64_t> psi, const std::string& mode,
                     const std::string& method, bool lenient, const Common& c) {
    io::Report r;
    r.command = "count";
    auto p = io::load_pencil(file);
    inv::validate_invertible(p.matrix);
    auto pp = parse_q(qtext);
    r.inputs = {{"file", file}, {"pencil", io::pencil_to_json(p)}, {"q", pp.str()}, {"mode", mode}};
    if (psi) r.inputs["psi"] = *psi;
    if (mode == "modp") {
        if (pp.r != 1) throw PreconditionError("--mode modp needs a prime q");
        if (psi && *psi != 0) throw PreconditionError("--mode modp counts the undeformed polynomial; drop --psi");
        r.inputs["det_divides_required"] = !lenient;
        r.results = {{"count_mod_p", count::affine_count_mod_p(p.matrix, pp.p, !lenient)}, {"method", "formula"}};
        return r;
    }
    if (psi && !p.deformed) throw PreconditionError("--psi given for an undeformed pencil file");
    auto spec = p.deformed ? count::PencilSpec::pencil(p.matrix, psi.value_or(0)) : count::PencilSpec::undeformed(p.matrix);
    auto f = ff::FieldCache::global().field(pp.p, pp.r);
    r.add_fingerprint(f->fingerprint());
    const auto m = method == "brute" ? count::Method::Brute : count::Method::Lastvar;
    count::CountResult res;
    if (mode == "affine")
        res = m == count::Method::Brute ? count::count_affine_bruteforce(spec, *f, c.count()) : count::count_affine_lastvar(spec, *f, c.count());
    else
        res = count::count_projective(spec, *f, c.count(), m);
    r.results = {{"count", res.count}, {"variety", count::to_string(res.variety)}, {"method", count::to_string(res.method)}};
    return r;
}

io::Report cmd_hyper(const std::string& alpha, const std::string& beta, const std::string& qtext, std::optional<std::int64_t> t,
                     const std::string& def, bool splittable, const Common& c) {
    io::Report r;
    r.command = "hyper";
    auto h = hyper::HypergeometricParameters::make(hyper::HypergeometricParameters::parse_list(alpha),
                                                   hyper::HypergeometricParameters::parse_list(beta));
    auto pp = parse_q(qtext);
    r.inputs = {{"alpha", rational_list(h.alpha)}, {"beta", rational_list(h.beta)}, {"q", pp.str()}, {"def", def}};
    if (t) r.inputs["t"] = *t;
    r.results["field_of_definition"] = hyper::field_of_definition(h).description;
    if (splittable) {
        auto s = hyper::is_splittable(pp.q, h);
        r.inputs["splittable"] = true;
        r.results["splitting"] = s ? json{{"alpha0", rational_list(s->alpha0)},
                                          {"alpha_prime", rational_list(s->alpha1)},
                                          {"beta0", rational_list(s->beta0)},
                                          {"beta_prime", rational_list(s->beta1)}}
                                   : json(nullptr);
    }
    if (!t) {
        if (!splittable) throw PreconditionError("--t is required unless --splittable is given");
        return r;
    }
    if (auto bad = hyper::offending_denominator(pp.q, h))
        throw PreconditionError("q = " + pp.str() + " is not good: denominator " + std::to_string(*bad));
    auto g = ff::FieldCache::global().gauss(pp.p, pp.r);
    r.add_fingerprint(g->field->fingerprint());
    const auto te = g->field->from_int(*t);
    std::vector<std::pair<hyper::Definition, hyper::HyperSumValue>> vals;
    for (auto d : {hyper::Definition::Classic, hyper::Definition::Bcm}) {
        if (def != "both" && def != hyper::to_string(d)) continue;
        auto v = hyper::hyper_sum(d, *g, h, te, c.sums());
        r.results[hyper::to_string(d)] = {{"value", v.str()},
                                         {"exact", v.exact},
                                         {"q_power", v.q_power},
                                         {"residual", v.residual},
                                         {"bound", v.bound},
                                         {"field", v.field}};
        vals.emplace_back(d, v);
    }
    if (vals.size() == 2) {
        const bool agree = vals[0].second.same_value(vals[1].second);
        r.results["agree"] = agree;
        r.verified = agree;
    }
    return r;
}

io::Report cmd_zeta(const std::string& file, const std::string& qtext, std::int64_t psi, bool skip_count, const Common& c) {
    io::Report r;
    r.command = "zeta";
    auto p = io::load_pencil(file);
    const auto fam = family_of(p.matrix);
    const std::uint64_t q = require_prime(qtext);
    r.inputs = {{"file", file}, {"family", zeta::to_string(fam)}, {"q", q}, {"psi", psi}};
    auto rep = zeta::assemble(fam, q, psi, c.assembly());
    auto& cache = ff::FieldCache::global();
    r.add_fingerprint(cache.field(q, 1)->fingerprint());
    if (rep.smooth) {
        std::size_t maxr = 1;
        for (const auto& b : rep.blocks) maxr = std::max(maxr, b.l.power_sums.size());
        for (unsigned k = 2; k <= maxr; ++k) r.add_fingerprint(cache.field(q, k)->fingerprint());
        if (!skip_count) zeta::trace_check(rep, *cache.field(q, 1), c.count());
        r.verified = rep.product_ok && rep.weil_ok && rep.trace_ok.value_or(true);
    }
    r.results = io::zeta_json(rep);
    if (!rep.smooth) r.results["display"] = "not smooth";
    if (q == static_cast<std::uint64_t>(fixtures::kTableQ)) {
        for (const auto& row : fam == zeta::Family::F4 ? fixtures::table_f4() : fixtures::table_l2l2()) {
            if (std::find(row.psis.begin(), row.psis.end(), arith::mod(psi, static_cast<std::int64_t>(q))) == row.psis.end()) continue;
            const bool match = rep.smooth == row.smooth && (!rep.smooth || rep.px == zeta::row_polynomial(row, q));
            r.results["printed"] = {{"display", printed_display(row, q)}, {"match", match}};
            r.verified = r.verified && match;
        }
    }
    return r;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, std::uint64_t q) {
    if (text.empty()) return {0, static_cast<std::int64_t>(q) - 1};
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            auto v = std::stoll(text);
            return {v, v};
        }
        return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw PreconditionError("cannot parse --psi-range '" + text + "' (expected a:b)");
    }
}

io::Report cmd_congruence(const std::string& fa, const std::string& fb, const std::string& qtext, const std::string& range,
                          const Common& c) {
    io::Report r;
    r.command = "congruence";
    auto a = io::load_pencil(fa), b = io::load_pencil(fb);
    auto pp = parse_q(qtext);
    auto [lo, hi] = parse_range(range, pp.q);
    r.inputs = {{"files", {fa, fb}}, {"q", pp.str()}, {"psi_range", {lo, hi}}};
    auto f = ff::FieldCache::global().field(pp.p, pp.r);
    r.add_fingerprint(f->fingerprint());
    json rows = json::array();
    bool all = true;
    for (std::int64_t psi = lo; psi <= hi; ++psi) {
        auto cc = count::congruence_counts(a.matrix, b.matrix, psi, *f, c.count());
        const bool sa = count::is_smooth_fiber(count::PencilSpec::pencil(a.matrix, psi), *f, c.count());
        const bool sb = count::is_smooth_fiber(count::PencilSpec::pencil(b.matrix, psi), *f, c.count());
        rows.push_back({{"psi", psi}, {"count_a", cc.a}, {"count_b", cc.b}, {"congruent", cc.congruent}, {"smooth_a", sa}, {"smooth_b", sb}});
        if (sa && sb) all = all && cc.congruent;
    }
    r.results = {{"rows", rows}, {"all_smooth_congruent", all}};
    r.verified = all;
    return r;
}

json row_json(const verify::RowCheck& c, std::uint64_t q) {
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    json j = {{"psi", c.psi},
              {"printed", printed_display(c.row, q)},
              {"printed_smooth", c.row.smooth},
              {"smooth", c.smooth},
              {"count", c.count ? json(*c.count) : json(nullptr)},
              {"printed_count", c.row.smooth ? json(c.printed_count.str()) : json(nullptr)},
              {"count_ok", opt(c.count_ok())},
              {"polynomial_ok", opt(c.polynomial_ok(q))},
              {"ok", c.ok(q)},
              {"notes", c.notes}};
    if (c.report) {
        j["assembled"] = c.report->display;
        j["weil_ok"] = c.report->weil_ok;
        j["trace_ok"] = opt(c.report->trace_ok);
        for (const auto& n : c.report->notes) j["notes"].push_back(n);
    }
    return j;
}

io::Report cmd_table_verify(const std::string& table, std::optional<std::string> qtext, const std::vector<std::int64_t>& psis,
                            bool first_only, const Common& c) {
    io::Report r;
    r.command = "table-verify";
    r.inputs = {{"table", table}};
    verify::TableOptions o;
    o.assembly = c.assembly();
    o.count = c.count();
    o.all_psis = !first_only;
    json rows = json::array();
    bool all = true;
    if (table == "1") {
        for (const auto& qc : verify::verify_quotients()) {
            std::vector<BigInt> printed(qc.printed.begin(), qc.printed.end());
            rows.push_back({{"pencil", qc.name},
                            {"computed", verify::group_str(qc.computed)},
                            {"printed", verify::group_str(printed)},
                            {"match", qc.match}});
            all = all && qc.match;
        }
    } else if (table == "2" || table == "3") {
        const std::uint64_t q = require_prime(qtext.value_or(std::to_string(fixtures::kTableQ)));
        r.inputs["q"] = q;
        r.inputs["all_psis"] = o.all_psis;
        for (const auto& rc : verify::verify_zeta_table(table == "2" ? zeta::Family::F4 : zeta::Family::L2L2, q, o)) {
            rows.push_back(row_json(rc, q));
            all = all && rc.ok(q);
        }
    } else {
        const std::uint64_t q = require_prime(qtext.value_or("41"));
        r.inputs["q"] = q;
        if (!psis.empty()) r.inputs["psi"] = psis;
        auto& cache = ff::FieldCache::global();
        for (const auto& pc : verify::verify_patterns(q, psis, o)) {
            rows.push_back({{"family", zeta::to_string(pc.family)},
                            {"psi", pc.psi},
                            {"pattern", pc.pattern},
                            {"expected", pc.expected},
                            {"quotient_ok", pc.quotient_ok},
                            {"display", pc.report.display},
                            {"weil_ok", pc.report.weil_ok},
                            {"direct_count", pc.report.direct_count ? json(*pc.report.direct_count) : json(nullptr)},
                            {"trace_ok", pc.report.trace_ok ? json(*pc.report.trace_ok) : json(nullptr)},
                            {"ok", pc.ok()}});
            all = all && pc.ok();
        }
        for (unsigned k = 1; k <= 4 && zeta::within_cap(q, k); ++k) r.add_fingerprint(cache.field(q, k)->fingerprint());
    }
    if (table == "2" || table == "3") {
        auto& cache = ff::FieldCache::global();
        for (unsigned k = 1; k <= 3; ++k) r.add_fingerprint(cache.field(fixtures::kTableQ, k)->fingerprint());
    }
    r.results = {{"rows", rows}, {"all_ok", all}};
    r.verified = all;
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invertible pencils, point counts, finite-field hypergeometric sums and zeta numerators"};
    app.require_subcommand(1);
    Common common;

    std::string file, file_b, qtext, mode = "projective", method = "lastvar", alpha, beta, def = "both", table, range;
    std::optional<std::int64_t> psi, t;
    std::optional<std::string> qopt;
    std::int64_t psi_zeta = 0;
    std::vector<std::int64_t> psis;
    bool lenient = false, splittable = false, skip_count = false, first_only = false;

    auto* v = app.add_subcommand("validate", "weights, Calabi-Yau flag, atomic blocks, dual weights and SL/J");
    v->add_option("file", file, "pencil JSON file")->required();
    add_common(v, common);

    auto* cnt = app.add_subcommand("count", "point counts over F_q");
    cnt->add_option("file", file, "pencil JSON file")->required();
    cnt->add_option("--q", qtext, "field order q or p^r")->required();
    cnt->add_option("--psi", psi, "deformation parameter");
    cnt->add_option("--mode", mode, "affine, projective or modp (closed formula mod p)")->check(CLI::IsMember({"affine", "projective", "modp"}));
    cnt->add_option("--method", method, "enumeration method")->check(CLI::IsMember({"brute", "lastvar"}));
    cnt->add_flag("--lenient", lenient, "modp: allow det A not dividing p - 1");
    add_common(cnt, common);

    auto* hy = app.add_subcommand("hyper", "finite-field hypergeometric sums");
    hy->add_option("--alpha", alpha, "comma separated rationals")->required();
    hy->add_option("--beta", beta, "comma separated rationals")->required();
    hy->add_option("--q", qtext, "field order q or p^r")->required();
    hy->add_option("--t", t, "argument, an integer reduced into F_p");
    hy->add_option("--def", def, "classic, bcm or both")->check(CLI::IsMember({"classic", "bcm", "both"}));
    hy->add_flag("--splittable", splittable, "report a splitting of the parameters at q");
    add_common(hy, common);

    auto* ze = app.add_subcommand("zeta", "assemble and factor P_X for F4 or L2L2");
    ze->add_option("file", file, "pencil JSON file")->required();
    ze->add_option("--q", qtext, "prime q = 1 mod 4")->required();
    ze->add_option("--psi", psi_zeta, "deformation parameter")->required();
    ze->add_flag("--skip-count", skip_count, "skip the direct count behind the trace check");
    add_common(ze, common);

    auto* co = app.add_subcommand("congruence", "point counts of two pencils compared mod q");
    co->add_option("file_a", file, "pencil JSON file")->required();
    co->add_option("file_b", file_b, "pencil JSON file")->required();
    co->add_option("--q", qtext, "field order q or p^r")->required();
    co->add_option("--psi-range", range, "a:b (default 0:q-1)");
    add_common(co, common);

    auto* tv = app.add_subcommand("table-verify", "reproduce the bundled tables");
    tv->add_option("--table", table, "1, 2, 3 or eq21")->required()->check(CLI::IsMember({"1", "2", "3", "eq21"}));
    tv->add_option("--q", qopt, "field order (281 for tables 2 and 3, default 41 for eq21)");
    tv->add_option("--psi", psis, "eq21: restrict to these psi");
    tv->add_flag("--first-psi-only", first_only, "tables 2 and 3: one psi per row");
    add_common(tv, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        io::Report rep;
        if (*v) rep = cmd_validate(file);
        else if (*cnt) rep = cmd_count(file, qtext, psi, mode, method, lenient, common);
        else if (*hy) rep = cmd_hyper(alpha, beta, qtext, t, def, splittable, common);
        else if (*ze) rep = cmd_zeta(file, qtext, psi_zeta, skip_count, common);
        else if (*co) rep = cmd_congruence(file, file_b, qtext, range, common);
        else rep = cmd_table_verify(table, qopt, psis, first_only, common);
        rep.timings["total_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << (common.format == "json" ? rep.dump() : rep.text());
        return rep.verified ? 0 : 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
