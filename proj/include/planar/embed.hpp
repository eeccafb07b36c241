#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "planar/graph.hpp"

namespace planar {

struct NotPlanarError : GraphError {
    using GraphError::GraphError;
};
struct DisconnectedError : GraphError {
    using GraphError::GraphError;
};
struct NonSeparatingError : GraphError {
    using GraphError::GraphError;
};
struct RotationError : GraphError {
    using GraphError::GraphError;
};

// rotation[v] = cyclic order of the neighbours of v
using Rotation = std::vector<std::vector<int>>;
// a face boundary as a closed walk; consecutive entries (with wraparound) are
// the darts of the face
using Face = std::vector<int>;

// Trace all faces of a rotation system: the dart following (u,v) is
// (v, successor of u in rotation[v]). Every dart lands in exactly one face.
// Throws RotationError if rotation[v] is not a permutation of N(v).
std::vector<Face> faces_of(const Graph& g, const Rotation& rot);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// A combinatorial (spherical) embedding: rotations plus derived faces
// satisfying Euler's relation F + isolated = E - V + 2*components.
struct Embedding {
    Graph g;
    Rotation rotation;
    std::vector<Face> faces;

    // validates and traces; throws NotPlanarError when Euler fails
    static Embedding from_rotation(const Graph& g, Rotation rot);
};

bool is_planar(const Graph& g);

// Planar embedding of a connected graph by incremental face-based insertion
// (quadratic; n stays small in every workload here). Any valid embedding may
// be returned -- callers needing pinned faces use constructor rotations.
Embedding embed(const Graph& g);

struct Region {
    std::vector<int> face_indices;
    Bits64 interior;  // vertices strictly inside, excluding the boundary cycle
};

// Split the sphere along a cycle of g: faces are partitioned by flood fill on
// the dual after removing the dual edges crossing the cycle. The first region
// is the side seen from the dart cycle[0] -> cycle[1].
std::pair<Region, Region> region_split(const Embedding& e, const std::vector<int>& cycle);

// An embedded K_{2,7} whose window b1..b7 is consecutive in the rotation at p
// restricted to the common neighbourhood of p and q, with exactly b2..b6
// inside the region bounded by p b1 q b7.
struct EmptyK27 {
    int p, q;
    std::array<int, 7> window;
};
std::optional<EmptyK27> find_empty_k27(const Embedding& e);

// text form "v: n1 n2 ...", one line per vertex
std::string rotation_to_text(const Rotation& rot);
Rotation rotation_from_text(const std::string& text);

}  // namespace planar
