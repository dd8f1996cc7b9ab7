#pragma once

// Quivers and monomial presentations Λ = kQ/I with their path bases.
//
// Convention: a path word (a1, ..., ak) applies a1 first and runs from
// source(a1) to target(ak). Vertices are 0-based internally; the text format
// uses 1-based vertex numbers.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace itdim {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
    int vertices = 0;
    std::vector<Arrow> arrows;

    int arrow_index(const std::string& name) const;  ///< -1 when absent

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

struct MonomialPresentation {
    Quiver quiver;
    /// Relation words as arrow-index sequences, each of length >= 2.
    std::vector<std::vector<int>> relations;
    /// When set, every path of this length is a relation (J^N = 0).
    std::optional<int> truncation;

    friend bool operator==(const MonomialPresentation&, const MonomialPresentation&) = default;
};

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  ///< empty for the trivial path e_source

    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const Path&, const Path&) = default;
};

struct PathBasis {
    std::vector<Path> paths;
    /// paths between[i][j] holds indices into `paths` of nonzero paths i -> j.
    std::vector<std::vector<std::vector<int>>> between;

    int size() const { return static_cast<int>(paths.size()); }
};

struct ValidationReport {
    int dimension = 0;        ///< dim Λ = number of nonzero paths
    int nilpotency = 0;       ///< least N with every length-N path zero
    int longest_path = 0;
};

/// Default bound on path lengths explored before declaring non-admissibility.
int default_path_length_bound(const Quiver& q);

/// Checks composability, relation lengths, and finite dimensionality.
/// Throws Error(NonAdmissible) or Error(InvalidArgument).
ValidationReport validate(const MonomialPresentation& pres, std::optional<int> length_bound = std::nullopt);

PathBasis path_basis(const MonomialPresentation& pres);

MonomialPresentation opposite(const MonomialPresentation& pres);

/// A validated presentation together with its path basis and the right
/// multiplication table used by the representation code.
class Algebra {
public:
    static std::shared_ptr<const Algebra> create(MonomialPresentation pres);

    const MonomialPresentation& presentation() const noexcept { return pres_; }
    const Quiver& quiver() const noexcept { return pres_.quiver; }
    const PathBasis& basis() const noexcept { return basis_; }
    const ValidationReport& report() const noexcept { return report_; }

    int vertices() const noexcept { return pres_.quiver.vertices; }
    int arrow_count() const noexcept { return static_cast<int>(pres_.quiver.arrows.size()); }
    int dimension() const noexcept { return basis_.size(); }

    /// Index of the trivial path at v.
    int vertex_path(int v) const { return vertex_paths_[v]; }
    /// Index of path·arrow, or -1 when it is zero or not composable.
    int extend(int path, int arrow) const { return extend_[static_cast<std::size_t>(path) * arrow_count() + arrow]; }
    /// Index of the path with this source and arrow word, or -1.
    int find(int source, const std::vector<int>& arrows) const;

    /// Nonzero paths starting at v, grouped by target (ascending), each group
    /// in path-index order.
    const std::vector<int>& paths_from(int v) const { return from_[v]; }

    bool radical_square_zero() const;
    /// Every vertex has at most one incoming and at most one outgoing arrow.
    bool is_nakayama() const;

    std::string describe_path(int path) const;

    bool same_as(const Algebra& other) const { return this == &other || pres_ == other.pres_; }

private:
    explicit Algebra(MonomialPresentation pres);

    MonomialPresentation pres_;
    ValidationReport report_;
    PathBasis basis_;
    std::vector<int> vertex_paths_;
    std::vector<int> extend_;
    std::vector<std::vector<int>> from_;
    std::map<std::pair<int, std::vector<int>>, int> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace itdim
