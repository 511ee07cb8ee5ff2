#include "homcon/complex.hpp"

#include <algorithm>
#include <sstream>

#include "homcon/errors.hpp"

#include "json.hpp"

namespace homcon {

namespace {

// Lexicographic compare of two d-face tuples.
int cmp_face(const int* a, const int* b, int len) {
    for (int i = 0; i < len; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int SimplicialComplex::top_dim() const {
    for (int d = static_cast<int>(faces_.size()); d-- > 0;)
        if (!faces_[static_cast<size_t>(d)].empty()) return d;
    return -1;
}

long long SimplicialComplex::face_count(int d) const {
    if (d < 0 || d >= static_cast<int>(faces_.size())) return 0;
    return static_cast<long long>(faces_[static_cast<size_t>(d)].size()) / (d + 1);
}

long long SimplicialComplex::total_faces() const {
    long long t = 0;
    for (int d = 0; d < static_cast<int>(faces_.size()); ++d) t += face_count(d);
    return t;
}

std::optional<long long> SimplicialComplex::face_position(int d, const int* verts) const {
    if (d < 0 || d >= static_cast<int>(faces_.size())) return std::nullopt;
    const auto& list = faces_[static_cast<size_t>(d)];
    long long lo = 0, hi = static_cast<long long>(list.size()) / (d + 1);
    while (lo < hi) {
        long long mid = (lo + hi) / 2;
        int c = cmp_face(list.data() + mid * (d + 1), verts, d + 1);
        if (c == 0) return mid;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

bool SimplicialComplex::has_face(const Face& f) const {
    return face_position(static_cast<int>(f.size()) - 1, f.data()).has_value();
}

SimplicialComplex SimplicialComplex::from_faces(int n_vertices, std::vector<int> labels,
                                                std::vector<std::vector<int>> faces) {
    SimplicialComplex x;
    x.n_vertices_ = n_vertices;
    x.labels_ = std::move(labels);
    x.faces_ = std::move(faces);
    x.dim_limit_ = static_cast<int>(x.faces_.size()) - 1;
    x.complete_ = true;
    // Sortedness and duplicates.
    for (int d = 0; d < static_cast<int>(x.faces_.size()); ++d) {
        long long cnt = x.face_count(d);
        for (long long i = 0; i < cnt; ++i) {
            const int* f = x.face(d, i);
            for (int j = 0; j + 1 <= d; ++j)
                if (f[j] >= f[j + 1]) throw validation_error("complex: face tuple not increasing");
            if (i > 0 && cmp_face(x.face(d, i - 1), f, d + 1) >= 0)
                throw validation_error("complex: face list not strictly sorted");
            for (int j = 0; j <= d; ++j)
                if (f[j] < 0 || f[j] >= n_vertices)
                    throw validation_error("complex: vertex index out of range");
        }
    }
    // Downward closure.
    for (int d = 1; d < static_cast<int>(x.faces_.size()); ++d) {
        long long cnt = x.face_count(d);
        std::vector<int> sub(static_cast<size_t>(d));
        for (long long i = 0; i < cnt; ++i) {
            const int* f = x.face(d, i);
            for (int drop = 0; drop <= d; ++drop) {
                int k = 0;
                for (int j = 0; j <= d; ++j)
                    if (j != drop) sub[static_cast<size_t>(k++)] = f[j];
                if (!x.face_position(d - 1, sub.data()))
                    throw validation_error("complex: not downward closed");
            }
        }
    }
    return x;
}

SimplicialComplex build_clique_complex(const Graph& g, int max_dim, long long max_faces) {
    if (max_dim < 0) throw validation_error("build_clique_complex: max_dim < 0");
    SimplicialComplex x;
    x.n_vertices_ = g.n();
    x.labels_ = g.labels();
    x.faces_.assign(static_cast<size_t>(max_dim) + 1, {});
    long long total = 0;

    // Dimension 0: every vertex.
    for (int v = 0; v < g.n(); ++v) x.faces_[0].push_back(v);
    total += g.n();
    if (total > max_faces) throw resource_error("build_clique_complex: face cap exceeded");

    // Extend each (d-1)-face F by vertices above max(F) inside the common
    // neighborhood, carried along as a bit row.  Appending extensions in
    // order preserves lexicographic sorting.
    std::vector<BitVec> prev_nbrs;
    prev_nbrs.reserve(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) prev_nbrs.push_back(g.neighbors(v));

    for (int d = 1; d <= max_dim; ++d) {
        std::vector<BitVec> cur_nbrs;
        const auto& prev = x.faces_[static_cast<size_t>(d - 1)];
        long long prev_cnt = static_cast<long long>(prev.size()) / d;
        for (long long fi = 0; fi < prev_cnt; ++fi) {
            const int* f = prev.data() + fi * d;
            const BitVec& nb = prev_nbrs[static_cast<size_t>(fi)];
            int top = f[d - 1];
            for (int v : nb.to_indices()) {
                if (v <= top) continue;
                for (int j = 0; j < d; ++j) x.faces_[static_cast<size_t>(d)].push_back(f[j]);
                x.faces_[static_cast<size_t>(d)].push_back(v);
                cur_nbrs.push_back(nb & g.neighbors(v));
                if (++total > max_faces)
                    throw resource_error("build_clique_complex: face cap exceeded");
            }
        }
        if (x.faces_[static_cast<size_t>(d)].empty()) break;
        prev_nbrs = std::move(cur_nbrs);
    }

    x.dim_limit_ = max_dim;
    // Saturated below the cutoff (or nothing can extend further): the
    // complex knows all of its faces.
    int top = x.top_dim();
    x.complete_ = (top < max_dim) || (max_dim >= g.n() - 1);
    return x;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const VertexSet& w) {
    SimplicialComplex out;
    out.n_vertices_ = x.n_vertices_;
    out.labels_ = x.labels_;
    out.faces_.assign(x.faces_.size(), {});
    for (int d = 0; d < static_cast<int>(x.faces_.size()); ++d) {
        long long cnt = x.face_count(d);
        for (long long i = 0; i < cnt; ++i) {
            const int* f = x.face(d, i);
            bool inside = true;
            for (int j = 0; j <= d && inside; ++j) inside = w.get(f[j]);
            if (inside)
                out.faces_[static_cast<size_t>(d)].insert(out.faces_[static_cast<size_t>(d)].end(),
                                                          f, f + d + 1);
        }
    }
    out.dim_limit_ = x.dim_limit_;
    out.complete_ = x.complete_;
    return out;
}

SimplicialComplex delete_faces_complex(const SimplicialComplex& x, const std::vector<Face>& u) {
    for (const Face& f : u) {
        for (size_t j = 0; j + 1 < f.size(); ++j)
            if (f[j] >= f[j + 1]) throw validation_error("delete_faces: tuple not increasing");
        for (int v : f)
            if (v < 0 || v >= x.n_vertices())
                throw validation_error("delete_faces: vertex out of range");
    }
    SimplicialComplex out;
    out.n_vertices_ = x.n_vertices_;
    out.labels_ = x.labels_;
    out.faces_.assign(x.faces_.size(), {});
    for (int d = 0; d < static_cast<int>(x.faces_.size()); ++d) {
        long long cnt = x.face_count(d);
        for (long long i = 0; i < cnt; ++i) {
            const int* f = x.face(d, i);
            bool keep = true;
            for (const Face& forb : u) {
                if (static_cast<int>(forb.size()) > d + 1) continue;
                // forb subset of f?  Both sorted: merge scan.
                size_t a = 0;
                for (int j = 0; j <= d && a < forb.size(); ++j)
                    if (f[j] == forb[a]) ++a;
                if (a == forb.size()) {
                    keep = false;
                    break;
                }
            }
            if (keep)
                out.faces_[static_cast<size_t>(d)].insert(out.faces_[static_cast<size_t>(d)].end(),
                                                          f, f + d + 1);
        }
    }
    out.dim_limit_ = x.dim_limit_;
    out.complete_ = x.complete_;
    return out;
}

BitMatrix boundary_matrix(const SimplicialComplex& x, int i) {
    if (i < 0) throw validation_error("boundary_matrix: negative dimension");
    long long rows = x.face_count(i - 1);
    long long cols = x.face_count(i);
    BitMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    if (i == 0) return m;  // 0 x n_0
    std::vector<int> sub(static_cast<size_t>(i));
    for (long long c = 0; c < cols; ++c) {
        const int* f = x.face(i, c);
        for (int drop = 0; drop <= i; ++drop) {
            int k = 0;
            for (int j = 0; j <= i; ++j)
                if (j != drop) sub[static_cast<size_t>(k++)] = f[j];
            auto pos = x.face_position(i - 1, sub.data());
            if (!pos) throw validation_error("boundary_matrix: complex not downward closed");
            m.set(static_cast<int>(*pos), static_cast<int>(c));
        }
    }
    return m;
}

std::string SimplicialComplex::to_json() const {
    nlohmann::json j;
    j["vertices"] = labels_;
    nlohmann::json faces_obj = nlohmann::json::object();
    for (int d = 0; d < static_cast<int>(faces_.size()); ++d) {
        long long cnt = face_count(d);
        nlohmann::json list = nlohmann::json::array();
        for (long long i = 0; i < cnt; ++i) {
            const int* f = face(d, i);
            list.push_back(std::vector<int>(f, f + d + 1));
        }
        faces_obj[std::to_string(d)] = std::move(list);
    }
    j["faces"] = std::move(faces_obj);
    return j.dump();
}

}  // namespace homcon
