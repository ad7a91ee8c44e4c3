#include "cr/rootsystem.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace cr {

namespace {

// Node names for the E-type diagrams: a chain of rank-1 letters with the
// branch node sigma attached to the third node from the long end.
std::vector<std::string> e_node_names(int rank) {
    static const char* letters[] = {"alpha", "beta", "gamma", "delta",
                                    "epsilon", "eta", "xi"};
    std::vector<std::string> names(letters, letters + (rank - 1));
    names.push_back("sigma");
    return names;
}

// Index of the chain node sigma attaches to: gamma for E6, delta for E7,
// epsilon for E8 (uniquely consistent with the published highest roots).
int e_branch_node(int rank) { return rank - 4; }

std::vector<std::vector<int>> cartan_from_edges(
    int rank, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    return a;
}

int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

// Exact rational solve of A x = rhs for small symmetric integer A.
// Returns false if A is singular.
bool solve_rational(std::vector<std::vector<long long>> a,
                    std::vector<long long> rhs,
                    std::vector<std::pair<long long, long long>>& out) {
    const int n = int(a.size());
    std::vector<std::vector<std::pair<long long, long long>>> m(
        n, std::vector<std::pair<long long, long long>>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = {a[i][j], 1};
        m[i][n] = {rhs[i], 1};
    }
    auto reduce = [](std::pair<long long, long long>& f) {
        if (f.second < 0) { f.first = -f.first; f.second = -f.second; }
        long long g = std::gcd(std::abs(f.first), f.second);
        if (g > 1) { f.first /= g; f.second /= g; }
        if (f.first == 0) f.second = 1;
    };
    auto sub_mul = [&](std::pair<long long, long long>& x,
                       std::pair<long long, long long> c,
                       std::pair<long long, long long> y) {
        // x -= c * y
        std::pair<long long, long long> p{c.first * y.first, c.second * y.second};
        x = {x.first * p.second - p.first * x.second, x.second * p.second};
        reduce(x);
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (m[i][col].first != 0) { piv = i; break; }
        if (piv < 0) return false;
        std::swap(m[col], m[piv]);
        std::pair<long long, long long> p = m[col][col];
        for (int j = col; j <= n; ++j) {
            m[col][j] = {m[col][j].first * p.second, m[col][j].second * p.first};
            reduce(m[col][j]);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m[i][col].first == 0) continue;
            std::pair<long long, long long> f = m[i][col];
            for (int j = col; j <= n; ++j) sub_mul(m[i][j], f, m[col][j]);
        }
    }
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = m[i][n];
    return true;
}

}  // namespace

LabeledRootSystem LabeledRootSystem::build(DiagramType type, int rank,
                                           LabelTable table) {
    LabeledRootSystem s;
    s.type_ = type;
    std::vector<std::pair<int, int>> edges;
    switch (type) {
        case DiagramType::A:
            if (rank < 1) throw RootError("type A needs rank >= 1");
            s.rank_ = rank;
            for (int i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
            for (int i = 0; i < rank; ++i)
                s.node_names_.push_back("a" + std::to_string(i + 1));
            break;
        case DiagramType::D:
            if (rank < 3) throw RootError("type D needs rank >= 3");
            s.rank_ = rank;
            for (int i = 0; i + 2 < rank; ++i) edges.push_back({i, i + 1});
            edges.push_back({rank - 3, rank - 1});
            for (int i = 0; i < rank; ++i)
                s.node_names_.push_back("d" + std::to_string(i + 1));
            break;
        case DiagramType::E6:
        case DiagramType::E7:
        case DiagramType::E8: {
            s.rank_ = type == DiagramType::E6 ? 6 : type == DiagramType::E7 ? 7 : 8;
            for (int i = 0; i + 2 < s.rank_; ++i) edges.push_back({i, i + 1});
            s.sigma_node_ = s.rank_ - 1;
            edges.push_back({e_branch_node(s.rank_), s.sigma_node_});
            s.node_names_ = e_node_names(s.rank_);
            break;
        }
    }
    s.cartan_ = cartan_from_edges(s.rank_, edges);
    s.enumerate_roots();
    s.attach_labels(table);
    s.validate_tables(table);
    return s;
}

void LabeledRootSystem::enumerate_roots() {
    std::set<Root> all;
    std::vector<Root> frontier;
    for (int i = 0; i < rank_; ++i) {
        Root r(rank_, 0);
        r[i] = 1;
        all.insert(r);
        frontier.push_back(r);
    }
    while (!frontier.empty()) {
        std::vector<Root> next;
        for (const Root& r : frontier) {
            for (int i = 0; i < rank_; ++i) {
                int n = 0;
                for (int j = 0; j < rank_; ++j) n += r[j] * cartan_[j][i];
                if (n == 0) continue;
                Root img = r;
                img[i] -= n;
                if (all.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    for (const Root& r : all) {
        bool pos = true;
        for (int c : r) pos = pos && c >= 0;
        if (pos) positive_.push_back(r);
    }
}

void LabeledRootSystem::attach_labels(LabelTable table) {
    if (table != LabelTable::None) {
        std::istringstream in(embedded_table_text(table));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            int label, sigma;
            row >> label >> sigma;
            Root r;
            int c;
            while (row >> c) r.push_back(c);
            if (int(r.size()) + 1 != rank_)
                throw RootError("label table row has wrong arity");
            r.push_back(sigma);  // file columns put sigma first; internally last
            if (!std::binary_search(positive_.begin(), positive_.end(), r))
                throw RootError("label table row is not a positive root");
            if (!paper_labels_.emplace(label, r).second)
                throw RootError("duplicate label in table");
            max_paper_label_ = std::max(max_paper_label_, label);
        }
    }
    // Synthetic labels for the remaining positive roots: height, then lex.
    std::map<Root, int> labeled;
    for (const auto& [label, r] : paper_labels_) {
        if (labeled.count(r)) throw RootError("two labels on one root");
        labeled[r] = label;
    }
    std::vector<Root> rest;
    for (const Root& r : positive_)
        if (!labeled.count(r)) rest.push_back(r);
    std::sort(rest.begin(), rest.end(), [](const Root& a, const Root& b) {
        int ha = root_height(a), hb = root_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    int next = max_paper_label_;
    for (const Root& r : rest) labeled[r] = ++next;
    for (const auto& [r, label] : labeled) {
        label_to_root_[label] = r;
        index_[r] = label;
        Root neg(rank_);
        for (int i = 0; i < rank_; ++i) neg[i] = -r[i];
        index_[neg] = -label;
    }
    for (const auto& [label, r] : label_to_root_)
        if (sigma_weight(r) >= 1) radical_labels_.push_back(label);
    // Center of the unipotent radical: radical roots whose sum with every
    // radical root leaves the root system.
    for (int i : radical_labels_) {
        bool central = true;
        for (int j : radical_labels_) {
            Root sum = label_to_root_[i];
            const Root& rj = label_to_root_[j];
            for (int c = 0; c < rank_; ++c) sum[c] += rj[c];
            if (is_root(sum)) { central = false; break; }
        }
        if (central) center_labels_.push_back(i);
    }
}

void LabeledRootSystem::validate_tables(LabelTable table) const {
    switch (type_) {
        case DiagramType::E6:
            if (positive_.size() != 36) throw RootError("E6 root count");
            break;
        case DiagramType::E7:
            if (positive_.size() != 63) throw RootError("E7 root count");
            break;
        case DiagramType::E8:
            if (positive_.size() != 120) throw RootError("E8 root count");
            break;
        default:
            return;
    }
    if (table == LabelTable::E6) {
        // Startup guards for the column convention: label 21 must be the
        // highest root and labels 22..26 the chain simples in diagram order.
        if (paper_labels_.at(21) != highest_root())
            throw RootError("E6 label 21 is not the highest root");
        for (int i = 0; i < 5; ++i)
            if (paper_labels_.at(22 + i) != simple(i))
                throw RootError("E6 labels 22-26 are not the chain simples");
    }
    if (table == LabelTable::E7Case2 && paper_labels_.at(15) != highest_root())
        throw RootError("E7 label 15 is not the highest root");
}

Root LabeledRootSystem::simple(int i) const {
    if (i < 0 || i >= rank_) throw RootError("simple root index out of range");
    Root r(rank_, 0);
    r[i] = 1;
    return r;
}

Root LabeledRootSystem::highest_root() const {
    const Root* best = nullptr;
    int h = -1;
    for (const Root& r : positive_) {
        int hr = root_height(r);
        if (hr > h) { h = hr; best = &r; }
    }
    return *best;
}

bool LabeledRootSystem::is_positive(const Root& r) const {
    if (!is_root(r)) return false;
    for (int c : r)
        if (c != 0) return c > 0;
    return false;
}

int LabeledRootSystem::pairing(const Root& zeta, const Root& xi) const {
    long long n = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) n += (long long)zeta[i] * cartan_[i][j] * xi[j];
    return int(n);
}

Root LabeledRootSystem::reflect(const Root& zeta, const Root& xi) const {
    int n = pairing(zeta, xi);
    Root r = zeta;
    for (int i = 0; i < rank_; ++i) r[i] -= n * xi[i];
    return r;
}

int LabeledRootSystem::sigma_weight(const Root& r) const {
    return sigma_node_ < 0 ? 0 : r[sigma_node_];
}

int LabeledRootSystem::cochar_weight(const Root& zeta, const Cocharacter& lambda) const {
    long long n = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            n += (long long)zeta[i] * cartan_[i][j] * lambda.coeffs[j];
    return int(n);
}

Cocharacter LabeledRootSystem::levi_cocharacter() const {
    if (sigma_node_ < 0) throw RootError("no sigma node in this system");
    std::vector<std::vector<long long>> a(rank_, std::vector<long long>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) a[i][j] = cartan_[i][j];
    for (int mult = 1; mult <= 4; ++mult) {
        std::vector<long long> rhs(rank_, 0);
        rhs[sigma_node_] = mult;
        std::vector<std::pair<long long, long long>> x;
        if (!solve_rational(a, rhs, x)) throw RootError("singular Cartan matrix");
        bool integral = true;
        for (auto& [num, den] : x) integral = integral && den == 1;
        if (!integral) continue;
        Cocharacter lam;
        for (auto& [num, den] : x) lam.coeffs.push_back(int(num));
        return lam;
    }
    throw RootError("no integral Levi cocharacter with multiplier <= 4");
}

Root LabeledRootSystem::root_of_label(int label) const {
    auto it = label_to_root_.find(std::abs(label));
    if (it == label_to_root_.end()) throw RootError("unknown root label");
    if (label > 0) return it->second;
    Root neg(rank_);
    for (int i = 0; i < rank_; ++i) neg[i] = -it->second[i];
    return neg;
}

int LabeledRootSystem::label_of_root(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) throw RootError("not a root");
    return it->second;
}

bool LabeledRootSystem::has_label(int label) const {
    return label_to_root_.count(std::abs(label)) != 0;
}

bool LabeledRootSystem::is_synthetic_label(int label) const {
    return std::abs(label) > max_paper_label_ || paper_labels_.empty();
}

std::vector<int> LabeledRootSystem::radical_labels_of_weight(int w) const {
    std::vector<int> out;
    for (int label : radical_labels_)
        if (sigma_weight(label_to_root_.at(label)) == w) out.push_back(label);
    return out;
}

std::optional<int> LabeledRootSystem::sum_label(int i, int j) const {
    Root a = root_of_label(i);
    Root b = root_of_label(j);
    for (int c = 0; c < rank_; ++c) a[c] += b[c];
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Root> LabeledRootSystem::levi_simples() const {
    std::vector<Root> out;
    for (int i = 0; i < rank_; ++i)
        if (i != sigma_node_) out.push_back(simple(i));
    return out;
}

}  // namespace cr
