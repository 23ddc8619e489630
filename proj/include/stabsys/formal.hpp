#pragma once

#include "stabsys/charges.hpp"
#include "stabsys/class_vector.hpp"
#include "stabsys/rational.hpp"
#include "stabsys/slope.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stabsys {

struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A named object of the finite formal category: its class, proper nonzero
/// subobjects (by id), base-point labels, and system flags. Optional wall
/// metadata (mu_alpha_stable, delta_min_quotient_slope) feeds the actual-wall
/// hypotheses of the walls module.
struct FormalObject {
  std::string id;
  ClassVector cls;
  std::vector<std::string> subobjects;
  std::vector<std::string> base_points;
  bool complete{false};
  bool injective{false};
  std::optional<bool> mu_alpha_stable;
  std::optional<Rational> delta_min_quotient_slope;
};

/// Recorded elementary transformation `to` of `from` along a minimal class,
/// with the psi_1 != 0 marker when known.
struct ElementaryEdge {
  std::string from;
  std::string to;
  ClassVector along;
  std::optional<bool> psi1_nonzero;
};

/// Class-level witness of a nonzero morphism, used to label pseudo walls.
struct MorphismWitness {
  ClassVector from_cls;
  ClassVector to_cls;
};

/// Finite, fixture-defined model of the category of coherent systems. The
/// subobject lattice is given explicitly; quotient subobject posets are the
/// lattice intervals. Immutable after load.
class FormalCategory {
 public:
  static FormalCategory from_json_text(const std::string& text);
  static FormalCategory from_file(const std::string& path);

  const FormalObject& object(const std::string& id) const;
  bool has_object(const std::string& id) const { return objects_.count(id) > 0; }
  const std::map<std::string, FormalObject>& objects() const { return objects_; }
  const std::vector<ElementaryEdge>& elementary() const { return elementary_; }
  const std::vector<MorphismWitness>& morphisms() const { return morphisms_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// True iff `inner` == `outer` or `inner` is a (transitive) subobject.
  bool leq(const std::string& inner, const std::string& outer) const;

  void add_object(FormalObject obj);  // for programmatic fixtures in tests
  void add_elementary(ElementaryEdge edge);
  void add_morphism(MorphismWitness m);

  /// Validates referenced ids, acyclicity of the subobject relation, and
  /// nonnegativity of n and k on quotient classes. Purity violations
  /// (torsion-class subobjects under a pure-flagged parent) produce warnings
  /// only. Throws FixtureError on hard failures.
  void validate();

 private:
  std::map<std::string, FormalObject> objects_;
  std::vector<ElementaryEdge> elementary_;
  std::vector<MorphismWitness> morphisms_;
  std::map<std::string, std::set<std::string>> below_;  // transitive closure
  std::vector<std::string> warnings_;
  bool validated_{false};
  void require_validated() const;
};

struct HNFactor {
  ClassVector cls;
  SlopeValue slope;
  std::string step_id;  // filtration object realizing this step
};

/// Harder-Narasimhan filtration: factor classes sum to the object class and
/// slopes strictly decrease (the first factor may have slope infinity).
struct HNFiltration {
  std::vector<HNFactor> factors;
  ClassVector total;
};

/// Greedy maximal-destabilizer construction over the fixture lattice.
/// Tie-break: maximal slope, then maximal n, then maximal d, then the whole
/// object, then lexicographically smallest id. Class-level canonical.
HNFiltration hn_filtration(const FormalCategory& cat, const std::string& id,
                           const Rational& alpha);

enum class TiltClass { Torsion, Free, Mixed };

/// Torsion iff all factor slopes > beta, Free iff all <= beta, else Mixed.
TiltClass tilt_classify(const HNFiltration& factors, const Rational& beta);

/// Cuts the HN filtration at beta: (sum of factors with slope > beta,
/// remainder). The two parts always sum to the object class.
std::pair<ClassVector, ClassVector> torsion_pair_split(const FormalCategory& cat,
                                                       const std::string& id,
                                                       const Rational& alpha,
                                                       const Rational& beta);

struct MinimalPattern {
  ClassVector cls;
  std::string indexing;  // "point" | "vector_space"
};

/// The two minimal-object class patterns: point systems (0,1,0) and
/// one-dimensional pure vector-space systems (0,0,1).
std::vector<MinimalPattern> minimal_objects();

enum class ElementaryType { I, II };

struct ElementaryMove {
  ElementaryType type;
  ClassVector target;
  std::string along;  // base-point label for type I
};

/// Type-I moves (one per base point, class (n, d-1, k)) followed by the
/// type-II move (iff k > 0, class (n, d, k-1)).
std::vector<ElementaryMove> elementary_transformations(const FormalCategory& cat,
                                                       const std::string& id);

enum class TransferOutcome { Pass, Fail, Inconclusive, PreconditionViolated };

struct TransferResult {
  TransferOutcome outcome;
  std::string detail;
};

/// Checks the HN-transfer law along a recorded elementary transformation:
/// same filtration length, first factor absorbs the minimal class, all later
/// factors identical. Requires the psi_1 != 0 marker; degrades to
/// Inconclusive without it.
TransferResult hn_transfer_check(const FormalCategory& cat, const std::string& x_id,
                                 const std::string& xprime_id,
                                 const ClassVector& s_class, const Rational& alpha);

/// Two-cohomology representation of a tilted object by fixture ids.
struct TiltedRep {
  std::optional<std::string> f_part;  // appears shifted, HN slopes <= beta
  std::optional<std::string> t_part;  // HN slopes > beta
};

ClassVector signed_class(const TiltedRep& rep, const FormalCategory& cat);

/// True iff the f-part lies in the free side and the t-part in the torsion
/// side of the beta-cut.
bool heart_member(const TiltedRep& rep, const FormalCategory& cat,
                  const Rational& alpha, const Rational& beta);

enum class MinimalKind { OP, V1 };

/// Exact inequality system a destabilizing subobject class of (O_P,0) or
/// (0,V_1) must satisfy: the elementary window on (n,d,k), strict violation
/// of the semistability inequality, n >= 1, and the admissibility filter.
struct MinimalConstraintSystem {
  MinimalKind kind;
  Rational alpha, beta, gamma;
  ClassVector target;  // (0,1,0) or (0,0,1)

  bool contains(const ClassVector& c) const;
  std::vector<std::string> describe() const;
};

MinimalConstraintSystem destabilizer_constraints_minimal(MinimalKind kind,
                                                         const Rational& alpha,
                                                         const Rational& beta,
                                                         const Rational& gamma);

/// All classes in |n|,|d|,|k| <= bound satisfying the system, in
/// lexicographic order.
std::vector<ClassVector> scan_minimal_constraints(const MinimalConstraintSystem& sys,
                                                  long long bound, int workers = 0);

}  // namespace stabsys
