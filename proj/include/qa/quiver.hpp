#pragma once

#include <map>
#include <string>
#include <vector>

#include "qa/field.hpp"

namespace qa {

struct Arrow {
    std::string label;
    int src = 0;
    int dst = 0;
};

struct ArrowDecl {
    std::string label;
    std::string src;
    std::string dst;
};

/// Finite quiver. Vertex and arrow order is declaration order and is part of
/// the data: every path basis downstream is a function of it.
class Quiver {
  public:
    Quiver() = default;

    static Quiver build(const std::vector<std::string>& vertices,
                        const std::vector<ArrowDecl>& arrows) {
        Quiver q;
        for (const auto& v : vertices) {
            if (q.vindex_.count(v)) throw QaError("duplicate vertex label: " + v);
            q.vindex_[v] = static_cast<int>(q.vertices_.size());
            q.vertices_.push_back(v);
        }
        for (const auto& a : arrows) {
            if (q.aindex_.count(a.label)) throw QaError("duplicate arrow label: " + a.label);
            auto s = q.vindex_.find(a.src);
            auto t = q.vindex_.find(a.dst);
            if (s == q.vindex_.end())
                throw QaError("arrow " + a.label + ": unknown source vertex " + a.src);
            if (t == q.vindex_.end())
                throw QaError("arrow " + a.label + ": unknown target vertex " + a.dst);
            q.aindex_[a.label] = static_cast<int>(q.arrows_.size());
            q.arrows_.push_back({a.label, s->second, t->second});
        }
        return q;
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const { return arrows_[i]; }
    const std::string& vertex(int i) const { return vertices_[i]; }

    int vertex_index(const std::string& label) const {
        auto it = vindex_.find(label);
        if (it == vindex_.end()) throw QaError("unknown vertex: " + label);
        return it->second;
    }

    int arrow_index(const std::string& label) const {
        auto it = aindex_.find(label);
        if (it == aindex_.end()) throw QaError("unknown arrow: " + label);
        return it->second;
    }

    bool has_vertex(const std::string& label) const { return vindex_.count(label) != 0; }
    bool has_arrow(const std::string& label) const { return aindex_.count(label) != 0; }

    /// Same vertices, every arrow reversed, same labels.
    Quiver opposite() const {
        std::vector<ArrowDecl> rev;
        rev.reserve(arrows_.size());
        for (const auto& a : arrows_)
            rev.push_back({a.label, vertices_[a.dst], vertices_[a.src]});
        return build(vertices_, rev);
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vindex_;
    std::map<std::string, int> aindex_;
};

/// A path: composable arrows listed left-to-right, t(a_i) = s(a_{i+1}).
/// A trivial path carries only its vertex.
struct Path {
    int source = 0;                // vertex index
    std::vector<int> arrows;       // arrow indices, composition order

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }

    int target(const Quiver& q) const {
        return arrows.empty() ? source : q.arrow(arrows.back()).dst;
    }

    bool operator==(const Path& o) const { return source == o.source && arrows == o.arrows; }
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows.empty() && source != o.source) return source < o.source;
        return arrows < o.arrows;
    }

    std::string str(const Quiver& q) const {
        if (trivial()) return "e_" + q.vertex(source);
        std::string s;
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += "*";
            s += q.arrow(arrows[i]).label;
        }
        return s;
    }
};

inline void validate_path(const Quiver& q, const Path& p) {
    int at = p.source;
    for (int a : p.arrows) {
        if (a < 0 || a >= q.num_arrows()) throw QaError("path: bad arrow index");
        if (q.arrow(a).src != at)
            throw QaError("path: arrows do not compose at " + q.vertex(at));
        at = q.arrow(a).dst;
    }
}

/// Compose p then r (left-to-right); requires t(p) = s(r).
inline Path compose(const Quiver& q, const Path& p, const Path& r) {
    if (p.target(q) != r.source) throw QaError("compose: endpoint mismatch");
    Path out = p;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

/// All paths of length < L: trivial paths first (vertex order), then by
/// length, then lexicographically by arrow indices.
inline std::vector<Path> paths_up_to(const Quiver& q, int L) {
    if (L < 1) throw QaError("paths_up_to: L must be >= 1");
    std::vector<Path> all;
    std::vector<Path> current;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Path p;
        p.source = v;
        current.push_back(p);
        all.push_back(p);
    }
    for (int len = 1; len < L; ++len) {
        std::vector<Path> next;
        for (const auto& p : current) {
            int t = p.target(q);
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrow(a).src != t) continue;
                Path e = p;
                e.arrows.push_back(a);
                next.push_back(e);
            }
        }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        current = std::move(next);
        if (current.empty()) break;
    }
    return all;
}

}  // namespace qa
