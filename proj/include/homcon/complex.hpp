#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcon/f2.hpp"
#include "homcon/graph.hpp"

namespace homcon {

// A face is a strictly increasing tuple of vertex indices.
using Face = std::vector<int>;

// Dimension-graded face lists, lexicographically sorted within each
// dimension.  Vertex indices refer to an ambient vertex set whose labels are
// carried along; induced and deleted-face subcomplexes keep the ambient
// indexing so faces stay comparable across derived complexes.
//
// A complex remembers how much of itself it knows: dim_limit is the build
// cutoff, and a complex that saturated below its cutoff (or was given every
// face explicitly) is complete.  Homology queries check this so a truncated
// complex can never silently produce a wrong Betti number.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Internal/test constructor from explicit face lists (faces[d] holds
    // concatenated (d+1)-tuples).  Verifies sortedness and downward closure.
    static SimplicialComplex from_faces(int n_vertices, std::vector<int> labels,
                                        std::vector<std::vector<int>> faces);

    int n_vertices() const { return n_vertices_; }
    const std::vector<int>& vertex_labels() const { return labels_; }

    // Largest dimension with at least one face; -1 if there are none.
    int top_dim() const;
    int dim_limit() const { return dim_limit_; }
    bool complete() const { return complete_; }
    bool knows_dim(int d) const { return complete_ || d <= dim_limit_; }

    long long face_count(int d) const;
    long long total_faces() const;

    // Pointer to the d-dimensional face at position idx (d+1 entries).
    const int* face(int d, long long idx) const {
        return faces_[static_cast<size_t>(d)].data() + idx * (d + 1);
    }

    // Position of a face tuple within its dimension's lex-sorted list.
    std::optional<long long> face_position(int d, const int* verts) const;
    bool has_face(const Face& f) const;

    std::string to_json() const;

private:
    friend SimplicialComplex build_clique_complex(const Graph&, int, long long);
    friend SimplicialComplex induced_subcomplex(const SimplicialComplex&, const VertexSet&);
    friend SimplicialComplex delete_faces_complex(const SimplicialComplex&,
                                                  const std::vector<Face>&);

    int n_vertices_ = 0;
    std::vector<int> labels_;
    std::vector<std::vector<int>> faces_;  // faces_[d]: flat, stride d+1, lex sorted
    int dim_limit_ = -1;
    bool complete_ = true;
};

// Faces in dimension d are exactly the (d+1)-cliques of g, for d <= max_dim.
// Throws resource_error if the face count exceeds max_faces.
SimplicialComplex build_clique_complex(const Graph& g, int max_dim,
                                       long long max_faces = 10'000'000);

// Faces of x contained in w.
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, const VertexSet& w);

// Faces of x containing no member of u as a subset.  Members of u need not
// be faces of x.
SimplicialComplex delete_faces_complex(const SimplicialComplex& x, const std::vector<Face>& u);

// Boundary operator: rows indexed by (i-1)-faces, columns by i-faces, entry
// 1 iff the row face is a facet of the column face.  i = 0 gives the 0 x n_0
// matrix (the augmentation lives in the homology layer).
BitMatrix boundary_matrix(const SimplicialComplex& x, int i);

}  // namespace homcon
