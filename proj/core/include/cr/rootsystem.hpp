#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cr {

struct RootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DiagramType { A, D, E6, E7, E8 };

/// Which published labeling to attach (the rank-8 system has one per case).
enum class LabelTable { None, E6, E7Case2, E8Case1, E8Case2 };

/// Coefficient vector over the simple roots, diagram order (chain letters
/// alpha, beta, ... first; sigma last for the E types).
using Root = std::vector<int>;

/// Coefficient vector over the simple coroots, same index order.
struct Cocharacter {
    std::vector<int> coeffs;
};

/// A simply-laced root system with the diagram-letter node convention and an
/// optional integer labeling of (some of) its positive roots. Immutable after
/// construction; freely shareable across threads.
class LabeledRootSystem {
public:
    /// rank is required for types A and D, ignored for E6/E7/E8.
    static LabeledRootSystem build(DiagramType type, int rank = 0,
                                   LabelTable table = LabelTable::None);

    DiagramType type() const { return type_; }
    int rank() const { return rank_; }
    /// Index of the branch node sigma; -1 for types A and D.
    int sigma_node() const { return sigma_node_; }
    const std::vector<std::string>& node_names() const { return node_names_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t root_count() const { return 2 * positive_.size(); }

    Root simple(int i) const;
    Root highest_root() const;
    bool is_root(const Root& r) const { return index_.count(r) != 0; }
    bool is_positive(const Root& r) const;

    /// <zeta, xi-coroot>; for simply-laced systems this is zeta^T * Cartan * xi.
    int pairing(const Root& zeta, const Root& xi) const;
    /// s_xi(zeta) = zeta - <zeta, xi-coroot> * xi.
    Root reflect(const Root& zeta, const Root& xi) const;

    /// Coefficient of the sigma node (0 for types A and D).
    int sigma_weight(const Root& r) const;
    /// Sum_i lambda_i * <zeta, alpha_i-coroot>.
    int cochar_weight(const Root& zeta, const Cocharacter& lambda) const;
    /// Minimal positive integral cocharacter with weight 0 on every chain
    /// simple root and weight > 0 on sigma. Multiplier searched up to 4.
    Cocharacter levi_cocharacter() const;

    /// Paper labels only (injective label -> positive root).
    const std::map<int, Root>& paper_labels() const { return paper_labels_; }
    int max_paper_label() const { return max_paper_label_; }
    /// Every positive root carries a label: the published ones where a table
    /// entry exists, stable synthetic ones (height-then-lex order) otherwise.
    /// A negative root carries minus the label of its negative.
    Root root_of_label(int label) const;
    int label_of_root(const Root& r) const;
    bool has_label(int label) const;
    bool is_synthetic_label(int label) const;

    /// Labels of the positive roots with sigma-weight >= 1 (the unipotent
    /// radical of the parabolic whose Levi is the chain), ascending.
    const std::vector<int>& radical_labels() const { return radical_labels_; }
    /// Radical labels of sigma-weight exactly w.
    std::vector<int> radical_labels_of_weight(int w) const;
    /// Labels of radical roots zeta with zeta + xi never a root for radical
    /// xi: the root set of the center of the unipotent radical.
    const std::vector<int>& center_radical_labels() const { return center_labels_; }

    /// Label of root_of_label(i) + root_of_label(j) if that sum is a root.
    std::optional<int> sum_label(int i, int j) const;

    /// Chain simple roots alpha, beta, ... (the Levi simples), diagram order.
    std::vector<Root> levi_simples() const;

private:
    LabeledRootSystem() = default;
    void enumerate_roots();
    void attach_labels(LabelTable table);
    void validate_tables(LabelTable table) const;

    DiagramType type_ = DiagramType::A;
    int rank_ = 0;
    int sigma_node_ = -1;
    std::vector<std::string> node_names_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    std::map<Root, int> index_;  // every root (both signs) -> label
    std::map<int, Root> label_to_root_;
    std::map<int, Root> paper_labels_;
    int max_paper_label_ = 0;
    std::vector<int> radical_labels_;
    std::vector<int> center_labels_;
};

/// Embedded copies of the published label tables (also shipped as text files
/// under core/data/). Returns the raw file content.
const std::string& embedded_table_text(LabelTable table);
/// FNV-1a hash of the embedded text, for integrity checks against the files.
std::uint64_t embedded_table_checksum(LabelTable table);
std::uint64_t fnv1a(const std::string& text);

}  // namespace cr
