// Command line front end: verify stored structures, convert between
// equivalent presentations, construct derived brackets, and re-emit reports.
//
// Exit codes: 0 = verified / success, 1 = a check failed, 2 = usage or
// input error (unreadable file, malformed data, wrong kind, precondition).

#include <chrono>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "l2v/builtin.hpp"
#include "l2v/cohomology.hpp"
#include "l2v/courant.hpp"
#include "l2v/crossed_module.hpp"
#include "l2v/dirac.hpp"
#include "l2v/errors.hpp"
#include "l2v/io.hpp"
#include "l2v/omni.hpp"
#include "l2v/sh_leibniz.hpp"

namespace {

using namespace l2v;

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0;
        return std::chrono::duration<double, std::milli>(dt).count();
    }
};

// Print the report (text or canonical JSON) and optionally save it; the exit
// code mirrors the verdict.
int emit(VerifyReport r, const std::string& out, const std::string& format) {
    int rc = r.ok() ? 0 : 1;
    Structure s{std::move(r)};
    if (format == "structured") std::cout << serialize(s);
    else std::cout << std::get<VerifyReport>(s).text();
    if (!out.empty()) {
        save_structure(s, out);
        std::cerr << "wrote " << out << "\n";
    }
    return rc;
}

// Random-input confirmations: every verified identity is multilinear, so
// holding on all basis tuples implies holding everywhere; these re-evaluate a
// sample of the identities on seeded random vectors as an independent check.
void spot_check_sh(VerifyReport& r, const ShLeibniz2& a, unsigned long seed) {
    builtin::Rng rng(seed);
    CheckResult& c = r.add("identities re-evaluated on random inputs", "spot-check");
    auto l2 = [&](const Vec& x, const Vec& y) { return a.l2_00.apply({x, y}); };
    for (int k = 1; k <= 4; ++k) {
        Vec x = builtin::random_vec(rng, a.c.v0.dim);
        Vec y = builtin::random_vec(rng, a.c.v0.dim);
        Vec z = builtin::random_vec(rng, a.c.v0.dim);
        Vec m = builtin::random_vec(rng, a.c.v1.dim);
        Vec jac = vec_sub(l2(x, l2(y, z)), vec_add(l2(l2(x, y), z), l2(y, l2(x, z))));
        Vec res = vec_sub(jac, a.c.d.apply(a.l3.apply({x, y, z})));
        c.count(vec_is_zero(res), "(d) random #" + std::to_string(k), render_vec(res, a.c.v0));
        Vec res2 = vec_sub(a.l2_00.apply({x, a.c.d.apply(m)}),
                           a.c.d.apply(a.l2_01.apply({x, m})));
        c.count(vec_is_zero(res2), "(a) random #" + std::to_string(k), render_vec(res2, a.c.v0));
    }
}

void spot_check_crossed(VerifyReport& r, const CrossedModule& cm, unsigned long seed) {
    builtin::Rng rng(seed);
    CheckResult& c = r.add("identities re-evaluated on random inputs", "spot-check");
    for (int k = 1; k <= 4; ++k) {
        Vec u = builtin::random_vec(rng, cm.g.space.dim);
        Vec v = builtin::random_vec(rng, cm.g.space.dim);
        Vec x = builtin::random_vec(rng, cm.h.space.dim);
        Vec res = vec_sub(cm.g.br(u, v), cm.lact(cm.mu.apply(u), v));
        c.count(vec_is_zero(res), "peiffer random #" + std::to_string(k),
                render_vec(res, cm.g.space));
        Vec res2 = vec_sub(cm.h.br(x, cm.mu.apply(u)), cm.mu.apply(cm.lact(x, u)));
        c.count(vec_is_zero(res2), "equivariance random #" + std::to_string(k),
                render_vec(res2, cm.h.space));
    }
}

VerifyReport verify_structure(const Structure& s, const std::string& family,
                              unsigned long seed) {
    if (const auto* a = std::get_if<ShLeibniz2>(&s)) {
        VerifyReport r = check_sh_leibniz(*a);
        r.note("class", classify(*a).str());
        spot_check_sh(r, *a, seed);
        r.seed = seed;
        return r;
    }
    if (const auto* cm = std::get_if<CrossedModule>(&s)) {
        VerifyReport r = check_crossed_module(*cm);
        spot_check_crossed(r, *cm, seed);
        r.seed = seed;
        return r;
    }
    if (const auto* q = std::get_if<SkeletalQuadruple>(&s)) {
        VerifyReport r = check_representation(q->rep());
        r.append(check_sh_leibniz(quadruple_to_skeletal(*q)));
        r.subject = "skeletal quadruple data";
        Cochain phi = Cochain::from_tensor(q->rep(), q->phi);
        r.note("phi is a degree-3 cocycle", is_cocycle(phi) ? "yes" : "no");
        return r;
    }
    if (const auto* ea = std::get_if<EndAutoFile>(&s)) {
        EndDgla e = build_end(ea->complex);
        VerifyReport r = check_dgla_automorphism(ea->f, e);
        r.note("degree-0 dimension", std::to_string(e.deg0.dim));
        r.note("degree-1 dimension", std::to_string(e.deg1.dim));
        return r;
    }
    if (const auto* t = std::get_if<ExactTca>(&s)) {
        bool mono = family == "monomial";
        SectionFamily fam = mono ? monomial_sections(t->n) : coordinate_sections(t->n);
        SectionFamily fam4 = coordinate_sections(t->n);
        FormFamily forms = mono ? monomial_forms(t->n) : coordinate_forms(t->n);
        VerifyReport r = check_tca_axioms(*t, fam);
        r.append(check_section_leibniz2(*t, fam, forms, fam4));
        r.append(check_scaling_anomalies(*t, coordinate_sections(t->n), quadratic_scalars(t->n)));
        r.subject = "exact twisted Courant structure";
        r.note("family", family);
        return r;
    }
    if (const auto* tp = std::get_if<TwistedPoisson>(&s)) {
        bool mono = family == "monomial";
        FormFamily fam = mono ? monomial_forms(tp->n) : coordinate_forms(tp->n);
        FormFamily fam4 = coordinate_forms(tp->n);
        VerifyReport r = check_twisted_poisson(*tp);
        r.append(check_anchor_morphism(*tp, fam));
        r.append(check_lie2(*tp, fam, quadratic_scalars(tp->n), fam4));
        r.append(check_graph_dirac(*tp, fam));
        r.subject = "twisted Poisson structure";
        r.note("family", family);
        return r;
    }
    throw PreconditionError("stored reports cannot be verified; use the report subcommand");
}

int run_verify(const std::string& in, const std::string& out, const std::string& format,
               const std::string& family, unsigned long seed) {
    Structure s = load_structure(in);
    Clock clock;
    VerifyReport r = verify_structure(s, family, seed);
    r.elapsed_ms = clock.ms();
    return emit(std::move(r), out, format);
}

int run_convert(const std::string& in, const std::string& out, const std::string& direction) {
    Structure s = load_structure(in);
    Structure result;
    if (direction == "dg-to-crossed") {
        const auto* a = std::get_if<ShLeibniz2>(&s);
        if (!a) throw PreconditionError("dg-to-crossed expects a sh-leibniz file");
        result = dg_to_crossed(*a);
    } else if (direction == "crossed-to-dg") {
        const auto* cm = std::get_if<CrossedModule>(&s);
        if (!cm) throw PreconditionError("crossed-to-dg expects a crossed-module file");
        result = crossed_to_dg(*cm);
    } else if (direction == "skeletal-to-quadruple") {
        const auto* a = std::get_if<ShLeibniz2>(&s);
        if (!a) throw PreconditionError("skeletal-to-quadruple expects a sh-leibniz file");
        result = skeletal_to_quadruple(*a);
    } else {
        const auto* q = std::get_if<SkeletalQuadruple>(&s);
        if (!q) throw PreconditionError("quadruple-to-skeletal expects a skeletal-quadruple file");
        result = quadruple_to_skeletal(*q);
    }
    save_structure(result, out);
    std::cerr << "wrote " << out << " (" << structure_kind(result) << ")\n";
    return 0;
}

int run_construct_omni(const std::string& in, const std::string& out,
                       const std::string& report_out, const std::string& format) {
    Structure s = load_structure(in);
    const auto* ea = std::get_if<EndAutoFile>(&s);
    if (!ea) throw PreconditionError("construct omni expects an end-automorphism file");
    EndDgla e = build_end(ea->complex);
    Clock clock;
    VerifyReport r = check_dgla_automorphism(ea->f, e);
    ShLeibniz2 omni = build_omni(ea->f, e);
    r.append(check_sh_leibniz(omni));
    r.subject = "bracket structure induced by a strict automorphism";
    r.note("degree-0 dimension", std::to_string(e.deg0.dim));
    r.note("degree-1 dimension", std::to_string(e.deg1.dim));
    r.note("class", classify(omni).str());
    r.elapsed_ms = clock.ms();
    if (!out.empty()) {
        save_structure(Structure{omni}, out);
        std::cerr << "wrote " << out << " (sh-leibniz)\n";
    }
    return emit(std::move(r), report_out, format);
}

int run_construct_leibniz2(const std::string& in, const std::string& out,
                           const std::string& format, const std::string& family) {
    Structure s = load_structure(in);
    const auto* t = std::get_if<ExactTca>(&s);
    if (!t) throw PreconditionError("construct leibniz2 expects an exact-tca file");
    bool mono = family == "monomial";
    SectionFamily fam = mono ? monomial_sections(t->n) : coordinate_sections(t->n);
    FormFamily forms = mono ? monomial_forms(t->n) : coordinate_forms(t->n);
    Clock clock;
    VerifyReport r = check_section_leibniz2(*t, fam, forms, coordinate_sections(t->n));
    SectionFamily cs = coordinate_sections(t->n);
    if (t->n >= 2)
        r.note("l2(" + cs.names[0] + ", " + cs.names[1] + ")",
               derived_l2(*t, cs.elems[0], cs.elems[1]).str());
    size_t noted = 0;
    for (size_t i = 0; i < t->n; ++i)
        for (size_t j = i + 1; j < t->n; ++j)
            for (size_t k = j + 1; k < t->n && noted < 6; ++k) {
                PolyForm v = derived_l3(*t, cs.elems[i], cs.elems[j], cs.elems[k]);
                if (!v.is_zero()) {
                    r.note("l3(" + cs.names[i] + ", " + cs.names[j] + ", " + cs.names[k] + ")",
                           v.str());
                    ++noted;
                }
            }
    if (noted == 0) r.note("l3 on coordinate fields", "0");
    r.elapsed_ms = clock.ms();
    return emit(std::move(r), out, format);
}

int run_construct_lie2(const std::string& in, const std::string& out,
                       const std::string& format, const std::string& family) {
    Structure s = load_structure(in);
    const auto* tp = std::get_if<TwistedPoisson>(&s);
    if (!tp) throw PreconditionError("construct lie2 expects a twisted-poisson file");
    bool mono = family == "monomial";
    FormFamily fam = mono ? monomial_forms(tp->n) : coordinate_forms(tp->n);
    Clock clock;
    VerifyReport r = check_lie2(*tp, fam, quadratic_scalars(tp->n), coordinate_forms(tp->n));
    FormFamily cf = coordinate_forms(tp->n);
    if (tp->n >= 2)
        r.note("bracket(" + cf.names[0] + ", " + cf.names[1] + ")",
               pi_bracket(*tp, cf.elems[0], cf.elems[1]).str());
    size_t noted = 0;
    for (size_t i = 0; i < tp->n; ++i)
        for (size_t j = i + 1; j < tp->n; ++j)
            for (size_t k = j + 1; k < tp->n && noted < 6; ++k) {
                PolyForm v = l3_twisted(*tp, cf.elems[i], cf.elems[j], cf.elems[k]);
                if (!v.is_zero()) {
                    r.note("l3(" + cf.names[i] + ", " + cf.names[j] + ", " + cf.names[k] + ")",
                           v.str());
                    ++noted;
                }
            }
    if (noted == 0) r.note("l3 on coordinate forms", "0");
    r.elapsed_ms = clock.ms();
    return emit(std::move(r), out, format);
}

int run_report(const std::string& in, const std::string& out, const std::string& format) {
    Structure s = load_structure(in);
    const auto* r = std::get_if<VerifyReport>(&s);
    if (!r) throw PreconditionError("not a stored report: kind is " + structure_kind(s));
    return emit(*r, out, format);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic checker for two-term bracket structures, crossed modules, "
                 "and twisted geometry on polynomial coefficients"};
    app.require_subcommand(1);

    std::string in, out, report_out, format = "text", family = "coordinate", direction;
    unsigned long seed = 12345;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "stdout format (default text)")
            ->check(CLI::IsMember({"text", "structured"}));
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "evaluation family for section/form sweeps (default coordinate)")
            ->check(CLI::IsMember({"coordinate", "monomial"}));
    };

    CLI::App* verify = app.add_subcommand("verify", "check every axiom of a stored structure");
    verify->add_option("file", in, "input file")->required();
    verify->add_option("--out", out, "also save the report to this path");
    add_format(verify);
    add_family(verify);
    verify->add_option("--seed", seed, "seed for the randomized spot-checks");

    CLI::App* convert =
        app.add_subcommand("convert", "rewrite a structure in an equivalent presentation");
    convert->add_option("file", in, "input file")->required();
    convert
        ->add_option("--direction", direction, "conversion to apply")
        ->required()
        ->check(CLI::IsMember({"dg-to-crossed", "crossed-to-dg", "skeletal-to-quadruple",
                               "quadruple-to-skeletal"}));
    convert->add_option("--out", out, "output file")->required();

    CLI::App* construct =
        app.add_subcommand("construct", "build a derived structure and check it");
    construct->require_subcommand(1);
    CLI::App* omni = construct->add_subcommand(
        "omni", "bracket structure induced by a strict automorphism of the endomorphism algebra");
    omni->add_option("file", in, "end-automorphism input file")->required();
    omni->add_option("--out", out, "save the constructed structure (sh-leibniz) here");
    omni->add_option("--report-out", report_out, "also save the report to this path");
    add_format(omni);
    CLI::App* leib2 = construct->add_subcommand(
        "leibniz2", "two-term bracket structure on sections of a twisted Courant datum");
    leib2->add_option("file", in, "exact-tca input file")->required();
    leib2->add_option("--out", out, "also save the report to this path");
    add_format(leib2);
    add_family(leib2);
    CLI::App* lie2 = construct->add_subcommand(
        "lie2", "two-term bracket structure on 1-forms of a twisted Poisson datum");
    lie2->add_option("file", in, "twisted-poisson input file")->required();
    lie2->add_option("--out", out, "also save the report to this path");
    add_format(lie2);
    add_family(lie2);

    CLI::App* report = app.add_subcommand("report", "re-emit a stored report");
    report->add_option("file", in, "report file")->required();
    report->add_option("--out", out, "re-save the report canonically to this path");
    add_format(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(in, out, format, family, seed);
        if (convert->parsed()) return run_convert(in, out, direction);
        if (construct->parsed()) {
            if (omni->parsed()) return run_construct_omni(in, out, report_out, format);
            if (leib2->parsed()) return run_construct_leibniz2(in, out, format, family);
            return run_construct_lie2(in, out, format, family);
        }
        return run_report(in, out, format);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
