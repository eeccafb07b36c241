#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar/embed.hpp"
#include "planar/graph.hpp"

namespace planar {

struct FamilyError : GraphError {
    using GraphError::GraphError;
};

// Constructor output: concrete edges, paper-style vertex names, and (when the
// family pins one) a rotation system.
struct BuiltGraph {
    int n = 0;
    EdgeList edges;
    std::vector<std::string> names;
    Rotation rotation;  // empty when the family does not pin an embedding

    Graph graph() const { return Graph::build(n, edges); }
    WideGraph wide() const { return WideGraph::build(n, edges); }
    int index_of(const std::string& name) const;
    bool has_rotation() const { return !rotation.empty(); }
};

// K_{2,n-2}, hubs labelled 0 and 1, natural fan rotation.
BuiltGraph make_k2m(std::int64_t n);

// ---- the extremal 5-cycle family ----

enum class SizeOption { first, second };

struct RequiredFormSpec {
    std::int64_t n = 19;
    std::optional<SizeOption> option;  // allowed only when n % 3 != 1
    std::vector<bool> optional_edges;  // mask over optional_edge_list order; empty = principal
};

// class sizes (|A|,|B|,|C|) per residue of n mod 3
std::array<std::int64_t, 3> required_form_sizes(std::int64_t n, std::optional<SizeOption> option);

struct RequiredFormGraph {
    BuiltGraph built;
    std::int64_t size_a = 0, size_b = 0, size_c = 0;
    EdgeList optional_edge_list;  // canonical order; the mask indexes this
    std::vector<bool> mask;
};

// Triangle u1u2u3, hub w, classes A/B/C joined to {u_i,w}, six fixed
// z-vertices, plus the masked optional edges, each drawn inside its unique
// quadrilateral face. The emitted rotation realizes the fixed face list of
// the principal graph.
RequiredFormGraph make_required_form(const RequiredFormSpec& spec);

// number of optional edges for the given class sizes: 6 + (|A|-1)+(|B|-1)+(|C|-1)
std::size_t required_form_optional_count(std::int64_t n, std::optional<SizeOption> option);

// ---- blow-ups ----

// Alternate vertices of a 2k-cycle blown into independent sets as equal as
// possible (larger classes first); n >= 2k, k >= 3.
BuiltGraph make_even_blowup(int k, std::int64_t n);

// k pairwise non-adjacent vertices of a (2k+1)-cycle blown up evenly;
// with_paths threads a path through each blown set. n >= 2k+1, k >= 1.
BuiltGraph make_odd_blowup(int k, std::int64_t n, bool with_paths);

// ---- section-5 gadgets ----

// Triangle u1u2u3 and the three complete bipartite graphs {u_i,w} x class;
// rotation realizes the three-pentagon skeleton drawing.
BuiltGraph make_h_minus_z(int size_a, int size_b, int size_c);

// One of the three face configurations drawn inside each skeleton face.
struct GadgetFace {
    int type = 1;                     // 1, 2, or 3
    int m = 0;                        // fan size, type 3 only, >= 3
    std::vector<bool> optional_mask;  // chain edges z_j z_{j+1}, j = 2..m-1
};

// The graph H[{u1,u2,u3,w} u Z] for a face-type assignment; w is joined only
// into the faces, never to u1,u2,u3.
BuiltGraph make_face_gadget(const std::array<GadgetFace, 3>& faces);

}  // namespace planar
