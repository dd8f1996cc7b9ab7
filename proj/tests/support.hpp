#pragma once

#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "itdim/errors.hpp"
#include "itdim/igusa_todorov.hpp"
#include "itdim/text_format.hpp"

#ifndef ITDIM_TEST_DATA
#error "ITDIM_TEST_DATA must point at tests/data"
#endif

namespace testing_support {

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(ITDIM_TEST_DATA) + "/" + name);
    if (!in) throw std::runtime_error("missing test data " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Fixture {
    itdim::AlgebraFile file;
    std::unique_ptr<itdim::Session> session;

    itdim::Session& s() { return *session; }
    const itdim::AlgebraPtr& alg() const { return file.algebra; }
    itdim::Rep module(const std::string& expr) {
        return itdim::parse_module_expr(expr, file.algebra, session->prime(), file.modules);
    }
};

inline Fixture from_text(const std::string& text, itdim::SessionConfig cfg = {}) {
    Fixture f;
    f.file = itdim::parse_algebra_file(text, cfg.prime);
    f.session = std::make_unique<itdim::Session>(f.file.algebra, cfg);
    return f;
}

inline Fixture load(const std::string& name, itdim::SessionConfig cfg = {}) { return from_text(read_data(name), cfg); }

inline Fixture from_presentation(itdim::MonomialPresentation pres, itdim::SessionConfig cfg = {}) {
    Fixture f;
    f.file.presentation = pres;
    f.file.algebra = itdim::Algebra::create(std::move(pres));
    f.session = std::make_unique<itdim::Session>(f.file.algebra, cfg);
    return f;
}

// Random monomial algebra: up to max_v vertices and max_a arrows, relations of
// length 2 or 3. If the first draw is infinite-dimensional, every length-3
// path avoiding the length-2 relations is added as a relation.
inline itdim::MonomialPresentation random_monomial(std::mt19937_64& rng, int max_v = 6, int max_a = 8) {
    using namespace itdim;
    std::uniform_int_distribution<int> nv(1, max_v);
    MonomialPresentation pres;
    const int v = nv(rng);
    pres.quiver.vertices = v;
    std::uniform_int_distribution<int> na(1, max_a);
    std::uniform_int_distribution<int> pick(0, v - 1);
    const int arrows = na(rng);
    for (int i = 0; i < arrows; ++i)
        pres.quiver.arrows.push_back({"x" + std::to_string(i), pick(rng), pick(rng)});
    const auto& ar = pres.quiver.arrows;
    std::vector<std::vector<int>> len2, len3;
    for (int a = 0; a < arrows; ++a)
        for (int b = 0; b < arrows; ++b) {
            if (ar[a].target != ar[b].source) continue;
            len2.push_back({a, b});
            for (int c = 0; c < arrows; ++c)
                if (ar[b].target == ar[c].source) len3.push_back({a, b, c});
        }
    std::bernoulli_distribution keep2(0.5), keep3(0.3);
    std::set<std::vector<int>> rel2;
    for (const auto& w : len2)
        if (keep2(rng)) {
            pres.relations.push_back(w);
            rel2.insert(w);
        }
    auto has_rel2 = [&](const std::vector<int>& w) {
        return rel2.count({w[0], w[1]}) || rel2.count({w[1], w[2]});
    };
    for (const auto& w : len3)
        if (!has_rel2(w) && keep3(rng)) pres.relations.push_back(w);
    try {
        validate(pres);
        return pres;
    } catch (const Error&) {
    }
    std::set<std::vector<int>> present(pres.relations.begin(), pres.relations.end());
    for (const auto& w : len3)
        if (!has_rel2(w) && !present.count(w)) pres.relations.push_back(w);
    validate(pres);
    return pres;
}

inline std::string multiset_labels(itdim::Session& s, const itdim::Multiset& ms) {
    std::string out;
    for (const auto& [id, k] : ms) {
        if (!out.empty()) out += " + ";
        if (k > 1) out += std::to_string(k) + "*";
        out += s.registry().label(id);
    }
    return out.empty() ? "0" : out;
}

}  // namespace testing_support
