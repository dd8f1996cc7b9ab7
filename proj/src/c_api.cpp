#include "itdim/itdim.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "itdim/errors.hpp"
#include "itdim/homdim.hpp"
#include "itdim/lit.hpp"
#include "itdim/report.hpp"
#include "itdim/text_format.hpp"

struct itdim_algebra {
    itdim::AlgebraFile file;
    std::unique_ptr<itdim::Session> session;
    std::unique_ptr<itdim::Corpus> corpus;
};

namespace {

thread_local std::string g_last_error;

itdim::SessionConfig to_config(const itdim_config& c) {
    itdim::SessionConfig out;
    out.prime = static_cast<itdim::Residue>(c.prime);
    out.cutoff = c.cutoff;
    out.ext_window = c.ext_window;
    out.iso_trials = c.trials;
    out.seed = c.seed;
    out.d_cap = c.d_cap;
    return out;
}

template <class F>
itdim_status guard(F&& f) {
    try {
        f();
        g_last_error.clear();
        return ITDIM_OK;
    } catch (const itdim::Error& e) {
        g_last_error = e.what();
        return static_cast<itdim_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ITDIM_E_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw itdim::Error(itdim::ErrorCode::InvalidArgument, what);
}

itdim::Rep module_of(itdim_algebra* a, const char* expr) {
    require(expr != nullptr, "module expression is NULL");
    return itdim::parse_module_expr(expr, a->file.algebra, a->session->prime(), a->file.modules);
}

itdim::DClass d_of(itdim_algebra* a, const char* d_gens) {
    itdim::Session& s = *a->session;
    if (d_gens == nullptr || *d_gens == '\0') return itdim::projectives_only(s);
    if (std::strcmp(d_gens, "all") == 0) {
        if (!a->corpus) a->corpus = std::make_unique<itdim::Corpus>(itdim::standard_corpus(s, a->file.modules));
        return itdim::all_modules(s, a->corpus->class_set());
    }
    return itdim::d_closure(s, {module_of(a, d_gens)}, 16 * s.config().d_cap);
}

void write_pd(const itdim::PdResult& r, itdim_dim_result* out) {
    switch (r.kind) {
        case itdim::PdResult::Kind::Finite: out->kind = ITDIM_PD_FINITE; break;
        case itdim::PdResult::Kind::Infinite: out->kind = ITDIM_PD_INFINITE; break;
        case itdim::PdResult::Kind::AtLeast: out->kind = ITDIM_PD_AT_LEAST; break;
    }
    out->value = r.value;
}

}  // namespace

extern "C" {

void itdim_config_default(itdim_config* cfg) {
    if (!cfg) return;
    const itdim::SessionConfig d;
    cfg->prime = d.prime;
    cfg->cutoff = d.cutoff;
    cfg->ext_window = d.ext_window;
    cfg->trials = d.iso_trials;
    cfg->seed = d.seed;
    cfg->d_cap = d.d_cap;
}

const char* itdim_status_name(itdim_status s) {
    if (s == ITDIM_OK) return "Ok";
    if (s == ITDIM_E_INTERNAL) return "Internal";
    return itdim::error_code_name(static_cast<itdim::ErrorCode>(static_cast<int>(s)));
}

const char* itdim_last_error(void) { return g_last_error.c_str(); }

itdim_status itdim_algebra_parse(const char* text, const itdim_config* cfg, itdim_algebra** out) {
    return guard([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        itdim_config c;
        itdim_config_default(&c);
        if (cfg) c = *cfg;
        const itdim::SessionConfig sc = to_config(c);
        sc.validate();
        auto a = std::make_unique<itdim_algebra>();
        a->file = itdim::parse_algebra_file(text, sc.prime);
        a->session = std::make_unique<itdim::Session>(a->file.algebra, sc);
        *out = a.release();
    });
}

void itdim_algebra_free(itdim_algebra* a) { delete a; }

itdim_status itdim_algebra_dimension(const itdim_algebra* a, int32_t* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        *out = a->file.algebra->dimension();
    });
}

itdim_status itdim_algebra_vertices(const itdim_algebra* a, int32_t* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        *out = a->file.algebra->vertices();
    });
}

itdim_status itdim_phi_d(itdim_algebra* a, const char* module, const char* d_gens, int32_t* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        const itdim::Rep m = module_of(a, module);
        *out = itdim::phi_D(*a->session, m, d_of(a, d_gens));
    });
}

itdim_status itdim_psi_d(itdim_algebra* a, const char* module, const char* d_gens, int32_t* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        const itdim::Rep m = module_of(a, module);
        *out = itdim::psi_D(*a->session, m, d_of(a, d_gens));
    });
}

itdim_status itdim_pd(itdim_algebra* a, const char* module, itdim_dim_result* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        write_pd(itdim::pd(*a->session, module_of(a, module), a->session->config().cutoff), out);
    });
}

itdim_status itdim_injdim(itdim_algebra* a, const char* module, itdim_dim_result* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        write_pd(itdim::injdim(*a->session, module_of(a, module), a->session->config().cutoff), out);
    });
}

itdim_status itdim_resdim(itdim_algebra* a, const char* module, const char* d_gens, itdim_dim_result* out) {
    return guard([&] {
        require(a && out, "NULL argument");
        const itdim::Rep m = module_of(a, module);
        write_pd(itdim::resdim_in_D(*a->session, m, d_of(a, d_gens), a->session->config().cutoff), out);
    });
}

itdim_status itdim_run(const char* command, const char* algebra_text, const itdim_request* req, char** json_out,
                       int32_t* exit_code) {
    return guard([&] {
        require(command && algebra_text && json_out && exit_code, "NULL argument");
        itdim::CommandRequest r;
        r.command = command;
        r.algebra_text = algebra_text;
        itdim_config c;
        itdim_config_default(&c);
        if (req) {
            if (req->module) r.module_expr = req->module;
            if (req->d_gens) r.d_gens = req->d_gens;
            if (req->v) r.v_expr = req->v;
            r.n = req->n;
            c = req->config;
        }
        r.config = to_config(c);
        const itdim::CommandResult res = itdim::run_command(r);
        char* buf = static_cast<char*>(std::malloc(res.json.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, res.json.c_str(), res.json.size() + 1);
        *json_out = buf;
        *exit_code = res.exit_code;
    });
}

void itdim_string_free(char* s) { std::free(s); }

}  // extern "C"
