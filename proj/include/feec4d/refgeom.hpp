#pragma once

#include <array>
#include <vector>

#include "feec4d/formcalc.hpp"
#include "feec4d/integrate.hpp"
#include "feec4d/linalg.hpp"
#include "feec4d/polynomial.hpp"

namespace feec4d {

enum class CellKind { pentatope, tet_prism };

enum class EntityType { vertex, edge, triangle, quad, tet, prism3d };

/// One entity of the reference-cell lattice, identified by its sorted
/// vertex-index list.  `index` is the position within its type's list.
struct Entity {
  EntityType type;
  int index;
  std::vector<int> verts;
};

int entity_dim(EntityType t);

/// Affine chart of an entity over a unit parameter domain.  The map is
/// u -> origin + sum_i u_i * tangents[i], built from the sorted vertex list:
/// simplex entities chart from the first vertex along edges to the later
/// vertices; quads chart (tet-edge direction, vertical direction); prism
/// facets chart (two triangle directions, then the vertical direction).
struct Chart {
  Domain domain;
  int dim = 0;
  std::array<Rational, 4> origin;
  std::vector<std::array<Rational, 4>> tangents;

  /// The four coordinate polynomials x_a(u) in `dim` variables.
  std::vector<Polynomial> coords() const;
};

/// A 3-dimensional boundary entity with chart and outward normal data.
/// `vector_area` is the outward-oriented generalized cross product
/// t1 x t2 x t3 of the chart tangents, so that n ds = vector_area du
/// exactly; `normal` is the primitive integer vector parallel to it.
struct Facet {
  Entity entity;
  Chart chart;
  std::array<Rational, 4> normal;
  std::array<Rational, 4> vector_area;
};

/// Reference cell: the pentatope with vertices
///   (1,-1,-1,-1), (-1,1,-1,-1), (-1,-1,1,-1), (-1,-1,-1,1), (-1,-1,-1,-1)
/// or the tetrahedral prism (reference tetrahedron in x1..x3 at x4 = -1,
/// copied to x4 = +1).  Entities of each type are listed in lexicographic
/// order of their sorted vertex tuples.
class RefCell {
public:
  static const RefCell& get(CellKind kind);

  CellKind kind() const { return kind_; }
  const std::vector<std::array<Rational, 4>>& vertices() const { return vertices_; }
  const std::vector<Entity>& entities(EntityType t) const;
  /// The 3D boundary entities (tets, plus prism facets for the tet prism).
  const std::vector<Facet>& facets() const { return facets_; }
  /// Multilinear vertex shape functions.
  const std::vector<Polynomial>& shape() const { return shape_; }
  Rational measure() const { return measure_; }
  Domain domain() const { return domain_; }
  std::array<Rational, 4> centroid() const;

private:
  explicit RefCell(CellKind kind);

  CellKind kind_;
  std::vector<std::array<Rational, 4>> vertices_;
  std::array<std::vector<Entity>, 6> entities_;
  std::vector<Facet> facets_;
  std::vector<Polynomial> shape_;
  Rational measure_;
  Domain domain_;
};

/// Chart of any entity, built by the sorted-vertex convention above.
Chart entity_chart(const RefCell& cell, const Entity& e);

/// Pentatope barycentric coordinates (equal to its shape functions).
std::vector<Polynomial> barycentrics_t4();
/// Barycentrics of the prism's tetrahedral factor (4-variable polynomials
/// in x1..x3) and the segment pair nu1 = (1-x4)/2, nu2 = (1+x4)/2.
std::vector<Polynomial> prism_tet_barycentrics();
std::array<Polynomial, 2> prism_seg_functions();

/// Affine physical-cell map x = A u + b.  Pentatope maps are general
/// affine; prism maps are prismatic (A block-diagonal: a 3x3 spatial block
/// and a scalar x4 block), so pullbacks stay polynomial.
struct CellMap {
  enum class Kind { affine, prismatic };
  Kind kind = Kind::affine;
  RatMat a;
  RatVec b;
  Rational det_a;

  std::vector<Polynomial> coords() const;
};

/// Builds the map sending reference vertex i to phys[i].  Throws on a
/// degenerate map, and for the prism on input whose bottom tet is not flat
/// in x4 or whose top tet is not a pure x4-translate of the bottom.
CellMap make_map(CellKind kind, const std::vector<std::array<Rational, 4>>& phys);
CellMap identity_map(CellKind kind);
/// Composition outer(inner(u)).
CellMap compose(const CellMap& outer, const CellMap& inner);

/// Pullback of a polynomial form through a cell map:
/// (phi* w)_I = sum_J (w_J o phi) det(A[J, I]).
FormPoly pullback(const FormPoly& w, const CellMap& phi);

/// Increasing s-tuples from {0..n-1} in lexicographic order.
const std::vector<std::vector<int>>& subset_tuples(int n, int s);

/// Pullback of a form through an entity chart; components indexed by
/// subset_tuples(chart.dim, w.s), each a polynomial in chart.dim variables.
std::vector<Polynomial> chart_pullback(const Chart& chart, const FormPoly& w);

}  // namespace feec4d
