#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <stdexcept>

namespace qmod {

// Vertices are labeled 1..n. An arrow is a labeled edge between vertices.
struct Arrow {
    std::string label;
    int source;
    int target;
};

class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows)
        : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
        if (vertex_count_ <= 0) throw std::invalid_argument("Quiver: vertex count must be positive");
        std::set<std::string> labels;
        for (const Arrow& a : arrows_) {
            if (a.label.empty()) throw std::invalid_argument("Quiver: empty arrow label");
            if (!labels.insert(a.label).second)
                throw std::invalid_argument("Quiver: duplicate arrow label '" + a.label + "'");
            if (a.source < 1 || a.source > vertex_count_ || a.target < 1 || a.target > vertex_count_)
                throw std::invalid_argument("Quiver: arrow '" + a.label + "' has vertex out of range");
        }
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int k) const { return arrows_.at(static_cast<std::size_t>(k)); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    std::optional<int> arrow_index(std::string_view label) const {
        for (std::size_t k = 0; k < arrows_.size(); ++k)
            if (arrows_[k].label == label) return static_cast<int>(k);
        return std::nullopt;
    }

    // Same labels and indices, all arrows flipped.
    Quiver reversed() const {
        std::vector<Arrow> rev;
        rev.reserve(arrows_.size());
        for (const Arrow& a : arrows_) rev.push_back({a.label, a.target, a.source});
        return Quiver(vertex_count_, std::move(rev));
    }

private:
    int vertex_count_;
    std::vector<Arrow> arrows_;
};

// A path is a composable sequence of arrows, read left to right: the word "xy"
// means x followed by y. The empty sequence at a vertex is the trivial path e_i.
class Path {
public:
    static Path trivial(int vertex) { return Path(vertex, vertex, {}); }

    Path(const Quiver& q, std::vector<int> arrow_indices)
        : source_(0), target_(0), arrows_(std::move(arrow_indices)) {
        if (arrows_.empty()) throw std::invalid_argument("Path: use Path::trivial for empty paths");
        source_ = q.arrow(arrows_.front()).source;
        target_ = q.arrow(arrows_.back()).target;
        for (std::size_t k = 0; k + 1 < arrows_.size(); ++k)
            if (q.arrow(arrows_[k]).target != q.arrow(arrows_[k + 1]).source)
                throw std::invalid_argument("Path: arrows do not compose");
    }

    // For callers that already know the word is composable (e.g. reversal into
    // the reversed quiver).
    static Path unchecked(int source, int target, std::vector<int> arrows) {
        return Path(source, target, std::move(arrows));
    }

    int source() const { return source_; }
    int target() const { return target_; }
    int length() const { return static_cast<int>(arrows_.size()); }
    bool is_trivial() const { return arrows_.empty(); }
    const std::vector<int>& arrows() const { return arrows_; }

    // Concatenation p.concat(q) = "p then q"; requires target(p) == source(q).
    Path concat(const Path& then) const {
        if (target_ != then.source_) throw std::invalid_argument("Path::concat: not composable");
        std::vector<int> all = arrows_;
        all.insert(all.end(), then.arrows_.begin(), then.arrows_.end());
        return Path(source_, then.target_, std::move(all));
    }

    bool contains_subpath(const Path& word) const {
        if (word.length() == 0 || word.length() > length()) return false;
        for (std::size_t start = 0; start + word.arrows_.size() <= arrows_.size(); ++start) {
            bool match = true;
            for (std::size_t k = 0; k < word.arrows_.size(); ++k)
                if (arrows_[start + k] != word.arrows_[k]) {
                    match = false;
                    break;
                }
            if (match) return true;
        }
        return false;
    }

    bool ends_with(const Path& word) const {
        if (word.length() == 0 || word.length() > length()) return false;
        const std::size_t off = arrows_.size() - word.arrows_.size();
        for (std::size_t k = 0; k < word.arrows_.size(); ++k)
            if (arrows_[off + k] != word.arrows_[k]) return false;
        return true;
    }

    bool operator==(const Path& o) const { return source_ == o.source_ && arrows_ == o.arrows_; }
    bool operator<(const Path& o) const {
        if (source_ != o.source_) return source_ < o.source_;
        return arrows_ < o.arrows_;
    }

private:
    Path(int source, int target, std::vector<int> arrows)
        : source_(source), target_(target), arrows_(std::move(arrows)) {}

    int source_;
    int target_;
    std::vector<int> arrows_;
};

inline Path reversed_path(const Path& p) {
    std::vector<int> rev(p.arrows().rbegin(), p.arrows().rend());
    return Path::unchecked(p.target(), p.source(), std::move(rev));
}

inline Path path_from_labels(const Quiver& q, const std::vector<std::string>& labels) {
    std::vector<int> idx;
    idx.reserve(labels.size());
    for (const std::string& l : labels) {
        auto k = q.arrow_index(l);
        if (!k) throw std::invalid_argument("path_from_labels: unknown arrow '" + l + "'");
        idx.push_back(*k);
    }
    return Path(q, std::move(idx));
}

// Renders e.g. "e1", "x^2", "z*y". Runs of a repeated label compress to powers.
inline std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e" + std::to_string(p.source());
    std::string out;
    std::size_t k = 0;
    while (k < p.arrows().size()) {
        std::size_t run = 1;
        while (k + run < p.arrows().size() && p.arrows()[k + run] == p.arrows()[k]) ++run;
        if (!out.empty()) out += "*";
        out += q.arrow(p.arrows()[k]).label;
        if (run > 1) out += "^" + std::to_string(run);
        k += run;
    }
    return out;
}

}  // namespace qmod
