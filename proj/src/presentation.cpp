#include "itdim/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "itdim/errors.hpp"

namespace itdim {

namespace {

constexpr std::size_t kMaxBasisPaths = 200000;

void check_structure(const MonomialPresentation& pres) {
    const Quiver& q = pres.quiver;
    if (q.vertices <= 0) throw Error(ErrorCode::InvalidArgument, "quiver needs at least one vertex");
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        if (a.source < 0 || a.source >= q.vertices || a.target < 0 || a.target >= q.vertices)
            throw Error(ErrorCode::InvalidArgument, "arrow '" + a.name + "' has an endpoint outside the vertex range");
        for (std::size_t j = 0; j < i; ++j)
            if (q.arrows[j].name == a.name)
                throw Error(ErrorCode::InvalidArgument, "duplicate arrow name '" + a.name + "'");
    }
    const int m = static_cast<int>(q.arrows.size());
    for (const auto& word : pres.relations) {
        if (word.size() < 2) throw Error(ErrorCode::InvalidArgument, "relation words must have length >= 2");
        for (int a : word)
            if (a < 0 || a >= m) throw Error(ErrorCode::InvalidArgument, "relation references an unknown arrow");
        for (std::size_t k = 0; k + 1 < word.size(); ++k)
            if (q.arrows[word[k]].target != q.arrows[word[k + 1]].source)
                throw Error(ErrorCode::InvalidArgument, "relation word is not composable");
    }
    if (pres.truncation && *pres.truncation < 2)
        throw Error(ErrorCode::InvalidArgument, "truncation power must be >= 2");
}

bool has_relation_suffix(const std::vector<int>& word, const MonomialPresentation& pres) {
    if (pres.truncation && static_cast<int>(word.size()) >= *pres.truncation) return true;
    for (const auto& rel : pres.relations) {
        if (rel.size() > word.size()) continue;
        if (std::equal(rel.rbegin(), rel.rend(), word.rbegin())) return true;
    }
    return false;
}

struct Enumeration {
    std::vector<Path> paths;
    int longest = 0;
};

Enumeration enumerate_paths(const MonomialPresentation& pres, int length_bound) {
    const Quiver& q = pres.quiver;
    Enumeration e;
    std::vector<int> frontier;
    for (int v = 0; v < q.vertices; ++v) {
        e.paths.push_back(Path{v, v, {}});
        frontier.push_back(v);
    }
    int length = 0;
    while (!frontier.empty()) {
        if (length >= length_bound)
            throw Error(ErrorCode::NonAdmissible,
                        "nonzero paths of length " + std::to_string(length) +
                            " remain; the algebra is not finite-dimensional");
        std::vector<int> next;
        for (int pi : frontier) {
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                const Path& p = e.paths[pi];
                if (q.arrows[a].source != p.target) continue;
                std::vector<int> word = p.arrows;
                word.push_back(a);
                if (has_relation_suffix(word, pres)) continue;
                Path np{p.source, q.arrows[a].target, std::move(word)};
                e.paths.push_back(std::move(np));
                next.push_back(static_cast<int>(e.paths.size()) - 1);
                if (e.paths.size() > kMaxBasisPaths)
                    throw Error(ErrorCode::NonAdmissible, "path basis exceeds the enumeration limit");
            }
        }
        if (!next.empty()) e.longest = length + 1;
        frontier = std::move(next);
        ++length;
    }
    return e;
}

}  // namespace

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

int default_path_length_bound(const Quiver& q) {
    return 10 * q.vertices * static_cast<int>(q.arrows.size()) + 64;
}

ValidationReport validate(const MonomialPresentation& pres, std::optional<int> length_bound) {
    check_structure(pres);
    const Enumeration e = enumerate_paths(pres, length_bound.value_or(default_path_length_bound(pres.quiver)));
    ValidationReport r;
    r.dimension = static_cast<int>(e.paths.size());
    r.longest_path = e.longest;
    r.nilpotency = e.longest + 1;
    return r;
}

PathBasis path_basis(const MonomialPresentation& pres) {
    check_structure(pres);
    Enumeration e = enumerate_paths(pres, default_path_length_bound(pres.quiver));
    PathBasis b;
    b.paths = std::move(e.paths);
    const int n = pres.quiver.vertices;
    b.between.assign(n, std::vector<std::vector<int>>(n));
    for (int i = 0; i < b.size(); ++i) b.between[b.paths[i].source][b.paths[i].target].push_back(i);
    return b;
}

MonomialPresentation opposite(const MonomialPresentation& pres) {
    MonomialPresentation op = pres;
    for (auto& a : op.quiver.arrows) std::swap(a.source, a.target);
    for (auto& w : op.relations) std::reverse(w.begin(), w.end());
    return op;
}

// ----------------------------------------------------------------- Algebra

Algebra::Algebra(MonomialPresentation pres) : pres_(std::move(pres)) {
    report_ = validate(pres_);
    basis_ = path_basis(pres_);
    const int n = vertices();
    const int m = arrow_count();
    vertex_paths_.assign(n, -1);
    for (int i = 0; i < basis_.size(); ++i) {
        const Path& p = basis_.paths[i];
        index_.emplace(std::make_pair(p.source, p.arrows), i);
        if (p.arrows.empty()) vertex_paths_[p.source] = i;
    }
    extend_.assign(static_cast<std::size_t>(basis_.size()) * m, -1);
    for (int i = 0; i < basis_.size(); ++i) {
        const Path& p = basis_.paths[i];
        for (int a = 0; a < m; ++a) {
            if (pres_.quiver.arrows[a].source != p.target) continue;
            std::vector<int> w = p.arrows;
            w.push_back(a);
            auto it = index_.find({p.source, w});
            if (it != index_.end()) extend_[static_cast<std::size_t>(i) * m + a] = it->second;
        }
    }
    from_.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < n; ++t)
            for (int idx : basis_.between[v][t]) from_[v].push_back(idx);
}

std::shared_ptr<const Algebra> Algebra::create(MonomialPresentation pres) {
    return std::shared_ptr<const Algebra>(new Algebra(std::move(pres)));
}

int Algebra::find(int source, const std::vector<int>& arrows) const {
    auto it = index_.find({source, arrows});
    return it == index_.end() ? -1 : it->second;
}

bool Algebra::radical_square_zero() const {
    return std::none_of(basis_.paths.begin(), basis_.paths.end(), [](const Path& p) { return p.length() >= 2; });
}

bool Algebra::is_nakayama() const {
    std::vector<int> in(vertices(), 0), out(vertices(), 0);
    for (const auto& a : pres_.quiver.arrows) {
        ++out[a.source];
        ++in[a.target];
    }
    for (int v = 0; v < vertices(); ++v)
        if (in[v] > 1 || out[v] > 1) return false;
    return true;
}

std::string Algebra::describe_path(int path) const {
    const Path& p = basis_.paths[path];
    if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
    std::ostringstream os;
    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) os << '.';
        os << pres_.quiver.arrows[p.arrows[k]].name;
    }
    return os.str();
}

}  // namespace itdim
