#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wonderful/closure_poset.hpp"
#include "wonderful/finite_field.hpp"
#include "wonderful/orbit_model.hpp"

namespace wonderful {

/// Which projective variety the F_q-points are taken from.
enum class MatrixSpace {
  /// Complete collineations: tuples ([A_1], ..., [A_{n-1}]) with [A_k] in P(End(Lambda^k F^n)),
  /// the G x G-saturation of the base points. This is the compactification of PGL_n.
  CompleteCollineations,
  /// All of P(M_n). Agrees with the compactification only for n = 2.
  ProjectiveMatrices,
};

/// Which diagonal block of the base point carries the ones.
enum class BasePointConvention {
  /// Exponents decrease along the diagonal; b_{empty} = diag(0, ..., 0, 1) in the first component.
  TrailingBlock,
  /// Exponents increase along the diagonal; b_{empty} = diag(1, 0, ..., 0).
  LeadingBlock,
};

/// A point: one projectively normalized matrix per component degree.
struct ProjPoint {
  std::vector<FqMatrix> components;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Brute-force model of the compactification of PGL_n over F_q.
class MatrixModel {
 public:
  MatrixModel(int n, int q, MatrixSpace space = MatrixSpace::CompleteCollineations,
              std::size_t point_cap = 4'000'000);

  int n() const { return n_; }
  int q() const { return field_.order(); }
  const PrimeField& field() const { return field_; }
  MatrixSpace space() const { return space_; }
  /// Exterior degrees k of the components.
  const std::vector<int>& degrees() const { return degrees_; }

  /// Sorted point codes.
  const std::vector<std::uint64_t>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Position of a point in points(), or size() when absent.
  std::size_t find(const ProjPoint& p) const;
  ProjPoint point(std::size_t index) const { return decode(points_[index]); }

  std::uint64_t encode(const ProjPoint& p) const;
  ProjPoint decode(std::uint64_t code) const;

  /// (g, h) . [A_k] = [Lambda^k(g) A_k Lambda^k(h)^{-1}] on each component.
  ProjPoint act(const FqMatrix& g, const FqMatrix& h, const ProjPoint& p) const;
  ProjPoint embed(const FqMatrix& m) const;

  ProjPoint base_point(SimpleSubset I, BasePointConvention convention = BasePointConvention::TrailingBlock) const;

  /// Permutation matrix with P e_j = e_{w(j)}, s_i exchanging e_i and e_{i+1}.
  FqMatrix permutation(const WeylElement& w) const;

  /// (perm(sigma rho), perm(tau)) . b_I.
  ProjPoint representative(const OrbitCalculus& calc, const OrbitLabel& o,
                           BasePointConvention convention = BasePointConvention::TrailingBlock) const;

  /// Generators of upper B (left factor) and lower B^- (right factor), as pairs (g, h).
  const std::vector<std::pair<FqMatrix, FqMatrix>>& borel_generators() const { return borel_; }
  /// Index of borel_generators()[gen] applied to points()[index].
  std::size_t successor(std::size_t gen, std::size_t index) const;

 private:
  struct Action {
    std::vector<FqMatrix> left;   // Lambda^k(g)
    std::vector<FqMatrix> right;  // Lambda^k(h^{-1})
  };
  Action prepare(const FqMatrix& g, const FqMatrix& h) const;
  ProjPoint apply(const Action& a, const ProjPoint& p) const;
  void enumerate(std::size_t cap);

  int n_;
  PrimeField field_;
  MatrixSpace space_;
  std::vector<int> degrees_;
  std::vector<int> dims_;  // C(n, k) per component
  std::size_t entries_ = 0;
  std::vector<std::uint64_t> points_;
  std::vector<std::pair<FqMatrix, FqMatrix>> borel_;
  std::vector<Action> borel_actions_;
};

/// Points grouped into B x B^- orbits; orbits ordered by smallest member.
struct OrbitPartition {
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::uint32_t> orbit_of;
};

OrbitPartition orbit_partition(const MatrixModel& model, Execution mode = Execution::Parallel);

/// Orbit calculus of type A_{n-1} with unit weights.
OrbitCalculus type_a_calculus(int n);

struct LabelMatching {
  std::vector<OrbitLabel> labels;
  /// Orbit containing the representative of each label.
  std::vector<std::size_t> orbit_of_label;
  /// Groups of label indices landing in one orbit.
  std::vector<std::vector<std::size_t>> collisions;
  /// Orbits hit by no label.
  std::vector<std::size_t> unmatched_orbits;
  /// Label indices whose orbit size differs from point_count_poly at q.
  std::vector<std::size_t> size_mismatches;

  bool bijective() const { return collisions.empty() && unmatched_orbits.empty(); }
  bool ok() const { return bijective() && size_mismatches.empty(); }
};

LabelMatching label_matching(const OrbitCalculus& calc, const MatrixModel& model, const OrbitPartition& partition,
                             BasePointConvention convention = BasePointConvention::TrailingBlock);

struct CellReport {
  /// Orbits made of points whose first component is invertible.
  std::size_t group_orbits = 0;
  std::size_t group_points = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Checks that PGL_n(F_q) splits into |W| orbits labelled (Delta, e, e, rho) with
/// sizes q^(2N - l(rho)) (q - 1)^(n - 1).
CellReport verify_group_cells(const OrbitCalculus& calc, const MatrixModel& model, const OrbitPartition& partition);

}  // namespace wonderful
