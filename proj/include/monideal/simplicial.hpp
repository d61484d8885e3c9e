#pragma once

#include <cstdint>
#include <vector>

#include "monideal/field.hpp"

namespace monideal {

/// A simplicial complex on vertices 0..n-1, stored as its maximal faces
/// (bitmasks). The face family is the downward closure of the facets; the
/// void complex (no faces at all) is represented by an empty facet list and
/// is distinct from the complex {∅}, whose facet list is {0}.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Keeps only the maximal faces of the given family. Vertex count <= 30.
  SimplicialComplex(int vertex_count, std::vector<uint32_t> faces);

  int vertex_count() const { return vertex_count_; }
  const std::vector<uint32_t>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }

  /// True when some vertex lies in every facet; cones have vanishing reduced
  /// homology in all degrees.
  bool is_cone() const;

  bool has_face(uint32_t mask) const;

  /// dim = |F| - 1. The void complex has dimension -2 by convention here.
  int dimension() const;

  /// Expansion: element [k+1] lists the k-faces as sorted masks, so [0] holds
  /// the empty face for any nonvoid complex.
  std::vector<std::vector<uint32_t>> faces_by_dimension() const;

private:
  int vertex_count_ = 0;
  std::vector<uint32_t> facets_;
};

/// Ranks of all reduced homology groups over the field: entry [i+1] is
/// rank H~_i, for i = -1 .. dimension. Exact in both field modes.
std::vector<long long> reduced_homology_all(const SimplicialComplex& complex,
                                            const Field& field);

/// rank H~_i over the field, i >= -1.
long long reduced_homology_rank(const SimplicialComplex& complex, int i,
                                const Field& field);

}  // namespace monideal
