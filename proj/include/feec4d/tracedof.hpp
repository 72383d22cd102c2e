#pragma once

#include <vector>

#include "feec4d/formcalc.hpp"
#include "feec4d/refgeom.hpp"

namespace feec4d {

/// Trace of a form on a facet, in two equivalent presentations.
///
/// `raw` holds the ambient proxy-valued trace composed with the facet chart
/// (all entries are polynomials in the chart parameters):
///   s=0: 1 entry, u o phi
///   s=1: 16 entries row-major, the bivector (E (x) n - n (x) E)/2 o phi
///   s=2: 4 entries, (n x F) o phi
///   s=3: 1 entry, (G . n) o phi
/// using the facet's primitive integer outward normal n.
///
/// `local` holds the entity-local identification: the chart-pullback
/// components of the form, indexed by subset_tuples(chart dim, s).
struct TraceResult {
  int s = 0;
  Entity entity;
  Chart chart;
  std::array<Rational, 4> normal;
  std::vector<Polynomial> raw;
  std::vector<Polynomial> local;
};

/// Facet trace; throws for 4-forms (their traces are not well-defined).
TraceResult trace(const FormPoly& w, const RefCell& cell, const Facet& f);

/// Entity-local trace components on any positive-dimensional entity.
std::vector<Polynomial> trace_local(const FormPoly& w, const RefCell& cell, const Entity& e);

/// One degree of freedom: a vertex point evaluation, an entity-supported
/// moment (test components paired with the entity-local trace and integrated
/// over the chart's unit domain), or a volume moment (test components paired
/// with the raw form components and integrated over the cell).
struct Dof {
  int s = 0;
  bool is_volume = false;
  EntityType etype = EntityType::vertex;
  int entity_index = -1;
  std::vector<Rational> point;      // vertex dofs only
  std::vector<Polynomial> test;     // moment dofs: one entry per component
};

Dof make_volume_dof(int s, std::vector<Polynomial> raw_tests);

/// The dof group of one entity, in the documented component/monomial order.
/// Empty when the test space has negative degree; throws when the form
/// degree exceeds the entity dimension.
std::vector<Dof> entity_dofs(const RefCell& cell, const Entity& e, int s, int k);

/// All trace dofs of the cell: entity types by increasing dimension, each
/// type's entities in index order.
std::vector<Dof> all_trace_dofs(const RefCell& cell, int s, int k);

Rational apply_dof(const RefCell& cell, const Dof& dof, const FormPoly& w);

/// Matrix D with D[i][j] = dof_i(basis_j); traces are computed once per
/// (entity, basis member) pair and shared across that entity's dofs.
RatMat dof_matrix(const RefCell& cell, const std::vector<Dof>& dofs,
                  const std::vector<FormPoly>& basis);

}  // namespace feec4d
