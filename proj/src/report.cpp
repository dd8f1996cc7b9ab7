#include "itdim/report.hpp"

#include <json.hpp>

#include "itdim/errors.hpp"
#include "itdim/lit.hpp"
#include "itdim/text_format.hpp"

namespace itdim {

namespace {

using J = nlohmann::ordered_json;

constexpr const char* kExact = "exact";
constexpr const char* kLower = "corpus-lower-bound";
constexpr const char* kCutoff = "cutoff-inconclusive";
constexpr const char* kConfig = "config";

J num(long long v, const char* prov = kExact) { return J{{"value", v}, {"provenance", prov}}; }

J nums(const std::vector<int>& v, const char* prov = kExact) {
    J arr = J::array();
    for (int x : v) arr.push_back(x);
    return J{{"value", arr}, {"provenance", prov}};
}

std::string ms_label(Session& s, const Multiset& ms) {
    if (ms.empty()) return "0";
    std::string out;
    for (const auto& [id, k] : ms) {
        if (!out.empty()) out += " + ";
        if (k > 1) out += std::to_string(k) + "*";
        out += s.registry().label(id);
    }
    return out;
}

std::string kvec_label(Session& s, const KVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [id, c] : v) {
        std::string coeff = c.str();
        if (!out.empty()) {
            if (coeff[0] == '-') {
                out += " - ";
                coeff.erase(0, 1);
            } else {
                out += " + ";
            }
        }
        if (coeff != "1") out += coeff + "*";
        out += s.registry().label(id);
    }
    return out;
}

J labels(Session& s, const std::vector<IsoClassId>& ids) {
    J arr = J::array();
    for (IsoClassId id : ids) arr.push_back(s.registry().label(id));
    return arr;
}

J pd_json(Session& s, const PdResult& r) {
    J j;
    switch (r.kind) {
        case PdResult::Kind::Finite:
            j["kind"] = "finite";
            j["value"] = num(r.value);
            break;
        case PdResult::Kind::Infinite:
            j["kind"] = "infinite";
            j["cycle"] = labels(s, r.cycle);
            break;
        case PdResult::Kind::AtLeast:
            j["kind"] = "at-least";
            j["value"] = num(r.value, kCutoff);
            break;
    }
    return j;
}

J fitting_json(Session& s, const FittingReport& r) {
    J steps = J::array();
    for (const auto& step : r.steps) {
        J row = J::array();
        for (const auto& v : step) row.push_back(kvec_label(s, v));
        steps.push_back(row);
    }
    bool nonincreasing = true;
    for (std::size_t i = 1; i < r.ranks.size(); ++i) nonincreasing = nonincreasing && r.ranks[i] <= r.ranks[i - 1];
    return J{{"ranks", nums(r.ranks)},
             {"eta", num(r.eta)},
             {"confirmation_rank", num(r.confirmation_rank)},
             {"ranks_nonincreasing", nonincreasing},
             {"confirmation_unchanged", r.ranks.empty() || r.confirmation_rank == r.ranks.back()},
             {"steps", steps}};
}

J config_json(const SessionConfig& c) {
    return J{{"prime", num(static_cast<long long>(c.prime), kConfig)},
             {"cutoff", num(c.cutoff, kConfig)},
             {"ext_window", num(c.ext_window, kConfig)},
             {"trials", num(c.iso_trials, kConfig)},
             {"seed", num(static_cast<long long>(c.seed), kConfig)},
             {"d_cap", num(c.d_cap, kConfig)}};
}

J registry_json(Session& s) {
    J arr = J::array();
    for (const auto& c : s.registry().classes()) {
        J e{{"id", num(c.id)},
            {"label", s.registry().label(c.id)},
            {"dims", nums(c.representative.dims())},
            {"projective", c.is_projective()}};
        if (c.syzygy) e["syzygy"] = ms_label(s, *c.syzygy);
        arr.push_back(e);
    }
    return arr;
}

J algebra_json(const Algebra& a) {
    J arrows = J::array();
    for (const auto& ar : a.quiver().arrows) arrows.push_back(ar.name);
    return J{{"vertices", num(a.vertices())},
             {"arrows", arrows},
             {"dimension", num(a.dimension())},
             {"radical_square_zero", a.radical_square_zero()},
             {"nakayama", a.is_nakayama()}};
}

struct Context {
    Session& s;
    const AlgebraFile& file;
    const CommandRequest& req;
    Corpus corpus;
    bool inconclusive = false;
    bool failed = false;

    Rep module() const {
        if (req.module_expr.empty()) throw Error(ErrorCode::InvalidArgument, "--module is required for " + req.command);
        return parse_module_expr(req.module_expr, file.algebra, s.prime(), file.modules);
    }

    DClass d_class() {
        if (req.d_gens.empty()) return projectives_only(s);
        if (req.d_gens == "all") return all_modules(s, corpus.class_set());
        const Rep g = parse_module_expr(req.d_gens, file.algebra, s.prime(), file.modules);
        DClass d = d_closure(s, {g}, 16 * s.config().d_cap);
        d.description = "closure(" + req.d_gens + ")";
        return d;
    }

    // Φ and Ψ over the closure; only a corpus bound when D is all of mod Λ
    // and the corpus is not known to be complete.
    J d_json(const DClass& d) {
        const char* prov = (d.everything && !corpus.complete) ? kLower : kExact;
        std::vector<IsoClassId> closure(d.closure.begin(), d.closure.end());
        return J{{"description", d.description},
                 {"everything", d.everything},
                 {"closure", labels(s, closure)},
                 {"phi_dim", num(phi_dim_of(s, d), prov)},
                 {"psi_dim", num(psi_dim_of(s, d), prov)}};
    }

    J corpus_findim_json() {
        try {
            return num(corpus_findim(s, corpus), corpus.complete ? kExact : kLower);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PdUndetermined) throw;
            inconclusive = true;
            return J{{"provenance", kCutoff}, {"note", e.what()}};
        }
    }
};

J function_value(Context& c, bool psi_form, bool relative) {
    Session& s = c.s;
    const Rep m = c.module();
    const DClass d = relative ? c.d_class() : projectives_only(s);
    const Multiset ms = s.intern(m);
    FittingReport fr;
    const int phi_v = phi_D(s, ms, d, &fr);
    J out{{"module", c.req.module_expr}, {"summands", ms_label(s, ms)}};
    if (relative) out["d"] = c.d_json(d);
    out["fitting_report"] = fitting_json(s, fr);
    if (psi_form) {
        std::set<IsoClassId> ids = syzygy_classes(s, ms, phi_v);
        const int fd = findim_classes(s, ids, s.config().cutoff);
        out["syzygy_summands"] = labels(s, std::vector<IsoClassId>(ids.begin(), ids.end()));
        out["findim_of_syzygy"] = num(fd);
        out["value"] = num(phi_v + fd);
    } else {
        out["value"] = num(phi_v);
    }
    return out;
}

J certificate_json(Context& c, const LitCertificate& cert, bool brief) {
    Session& s = c.s;
    J out{{"n", num(cert.setup.n)},
          {"v", ms_label(s, cert.setup.v)},
          {"d", c.d_json(cert.setup.d)},
          {"condition_a_phi", num(cert.condition_a_phi, cert.condition_a_exact ? kExact : kLower)},
          {"verdict", cert.global == Verdict::Pass ? "certified" : "inconclusive"},
          {"exhaustive", cert.exhaustive},
          {"label", cert.global != Verdict::Pass ? "Inconclusive"
                    : cert.exhaustive             ? "Certified-exhaustive"
                                                  : "Certified"},
          {"scope", cert.scope},
          {"w_cap_breached", cert.setup.cap_breached}};
    if (!brief) {
        J recs = J::array();
        for (const auto& r : cert.records) {
            J seqs = J::array();
            for (const auto& q : r.result.sequences)
                seqs.push_back(J{{"target", s.registry().label(q.target)},
                                 {"kind", sequence_kind_name(q.kind)},
                                 {"x0", ms_label(s, q.x0)},
                                 {"x1", ms_label(s, q.x1)},
                                 {"verified", q.verified}});
            recs.push_back(J{{"module", r.name},
                             {"syzygy", ms_label(s, r.result.target)},
                             {"verdict", r.result.verdict == Verdict::Pass ? "certified" : "inconclusive"},
                             {"sequences", seqs}});
        }
        out["records"] = recs;
    }
    J lower = c.corpus_findim_json();
    out["corpus_findim"] = lower;
    if (cert.global == Verdict::Pass) {
        const int bound = findim_bound(cert);
        out["psi_d_of_v"] = num(cert.psi_d_v);
        out["bound"] = num(bound);
        if (lower.contains("value")) out["lower_bound_within_bound"] = lower["value"].get<int>() <= bound;
        if (lower.contains("value") && lower["value"].get<int>() > bound) c.failed = true;
    } else {
        c.inconclusive = true;
    }
    return out;
}

J verify_json(Context& c) {
    Session& s = c.s;
    std::vector<DClass> ds = default_d_list(s, c.corpus);
    if (!c.req.d_gens.empty() && c.req.d_gens != "all") ds.push_back(c.d_class());
    const VerifyReport rep = verify_paper(s, c.corpus, ds);
    const char* prov = c.corpus.complete ? kExact : kLower;
    J dj = J::array();
    for (std::size_t i = 0; i < rep.d_descriptions.size(); ++i) {
        const char* dprov = (ds[i].everything && !c.corpus.complete) ? kLower : kExact;
        dj.push_back(J{{"description", rep.d_descriptions[i]},
                       {"phi_dim", num(rep.d_phi_dims[i], dprov)},
                       {"psi_dim", num(rep.d_psi_dims[i], dprov)}});
    }
    J checks = J::array();
    for (const auto& k : rep.checks) {
        const char* outcome = k.inconclusive         ? "inconclusive"
                              : k.expected_violation ? "expected-violation"
                              : k.holds              ? "pass"
                              : k.informational      ? "informational-fail"
                                                     : "fail";
        J e{{"statement", k.statement}, {"instance", k.instance}, {"relation", k.relation}, {"outcome", outcome}};
        if (!k.inconclusive) {
            e["lhs"] = num(k.lhs);
            e["rhs"] = num(k.rhs);
        }
        checks.push_back(e);
    }
    J entries = J::array();
    for (const auto& e : c.corpus.entries) entries.push_back(J{{"name", e.name}, {"summands", ms_label(s, e.classes)}});
    const int fails = rep.failures();
    if (fails > 0) c.failed = true;
    if (rep.inconclusive() > 0) c.inconclusive = true;
    return J{{"corpus",
              J{{"entries", entries},
                {"complete", c.corpus.complete},
                {"scope", c.corpus.complete ? c.corpus.completeness_reason : "corpus lower bound"},
                {"findim", num(rep.corpus_findim, prov)},
                {"phi_dim", num(rep.corpus_phi_dim, prov)},
                {"psi_dim", num(rep.corpus_psi_dim, prov)}}},
             {"d_classes", dj},
             {"summary",
              J{{"checks", num(static_cast<long long>(rep.checks.size()))},
                {"failures", num(fails)},
                {"expected_violations", num(rep.expected_violations())},
                {"inconclusive", num(rep.inconclusive())}}},
             {"checks", checks}};
}

J cotilting_json(Context& c) {
    Session& s = c.s;
    const CotiltingReport r = check_cotilting(s, c.module(), s.config().cutoff);
    const Verdict overall = r.overall();
    if (overall == Verdict::Inconclusive) c.inconclusive = true;
    J lengths = J::array();
    for (int l : r.resolution_lengths) lengths.push_back(l < 0 ? J("none") : num(l));
    return J{{"module", c.req.module_expr},
             {"injdim", pd_json(s, r.injdim)},
             {"finite_injdim", verdict_name(r.finite_injdim)},
             {"self_orthogonal", verdict_name(r.self_orthogonal)},
             {"ext_checked_up_to", num(r.ext_checked_up_to, kConfig)},
             {"injectives_resolved", verdict_name(r.injectives_resolved)},
             {"resolution_lengths", lengths},
             {"verdict", verdict_name(overall)}};
}

J dispatch(Context& c) {
    Session& s = c.s;
    const std::string& cmd = c.req.command;
    if (cmd == "phi") return function_value(c, false, false);
    if (cmd == "psi") return function_value(c, true, false);
    if (cmd == "phid") return function_value(c, false, true);
    if (cmd == "psid") return function_value(c, true, true);
    if (cmd == "pd" || cmd == "injdim") {
        const Rep m = c.module();
        const PdResult r = cmd == "pd" ? pd(s, m, s.config().cutoff) : injdim(s, m, s.config().cutoff);
        if (r.kind == PdResult::Kind::AtLeast) c.inconclusive = true;
        return J{{"module", c.req.module_expr}, {"summands", ms_label(s, s.intern(m))}, {cmd, pd_json(s, r)}};
    }
    if (cmd == "resdim") {
        const Rep m = c.module();
        const DClass d = c.d_class();
        const PdResult r = resdim_in_D(s, m, d, s.config().cutoff);
        if (r.kind == PdResult::Kind::AtLeast) c.inconclusive = true;
        return J{{"module", c.req.module_expr}, {"d", c.d_json(d)}, {"resdim", pd_json(s, r)}};
    }
    if (cmd == "lit-certify" || cmd == "bound") {
        const Rep v = c.req.v_expr.empty() ? s.zero()
                                           : parse_module_expr(c.req.v_expr, c.file.algebra, s.prime(), c.file.modules);
        const LitCertificate cert = certify_lit(s, v, c.d_class(), c.req.n, c.corpus);
        return certificate_json(c, cert, cmd == "bound");
    }
    if (cmd == "verify-paper") return verify_json(c);
    if (cmd == "cotilting-check") return cotilting_json(c);
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"phi",    "psi",         "phid",  "psid",         "pd",
                                                "injdim", "resdim",      "lit-certify", "bound", "verify-paper",
                                                "cotilting-check"};
    return names;
}

CommandResult run_command(const CommandRequest& req) {
    J report;
    report["command"] = req.command;
    report["config"] = config_json(req.config);
    CommandResult out;
    try {
        req.config.validate();
        const AlgebraFile file = parse_algebra_file(req.algebra_text, req.config.prime);
        Session s(file.algebra, req.config);
        report["algebra"] = algebra_json(*file.algebra);
        Context c{s, file, req, {}, false, false};
        c.corpus = standard_corpus(s, file.modules);
        report["result"] = dispatch(c);
        report["registry"] = registry_json(s);
        report["status"] = c.failed ? "failed" : c.inconclusive ? "inconclusive" : "exact";
        out.exit_code = c.failed ? 1 : c.inconclusive ? 2 : 0;
    } catch (const ParseError& e) {
        report["status"] = "error";
        report["error"] = J{{"code", error_code_name(e.code())},
                            {"message", e.what()},
                            {"line", num(e.line())},
                            {"column", num(e.column())}};
        out.exit_code = 1;
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = J{{"code", error_code_name(e.code())}, {"message", e.what()}};
        out.exit_code = 1;
    }
    out.json = report.dump(2);
    return out;
}

}  // namespace itdim
