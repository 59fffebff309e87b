#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cubikit/free_strict.hpp"
#include "cubikit/strict.hpp"

namespace cubikit {

using InstancePtr = std::shared_ptr<const StrictInstance>;

// Per-dimension class maps source -> target.
struct StrictFunctor {
  std::string name;
  InstancePtr source;
  InstancePtr target;
  std::vector<std::vector<int>> maps;  // maps[k][cell]

  int apply(int k, int x) const;
  // Same instances (by value) and maps; names are ignored.
  bool operator==(const StrictFunctor& other) const;
};

bool same_instance(const InstancePtr& a, const InstancePtr& b);

StrictFunctor identity_functor(InstancePtr c);
// F then G, i.e. G∘F. Throws CompositionError unless F.target = G.source.
StrictFunctor compose(const StrictFunctor& f, const StrictFunctor& g);

// Map ranges, faces, degeneracies, connections, every composition and,
// when both sides have them, reversors (F(R a) must be the inverse of F(a)).
Report check_strict_functor(const StrictFunctor& f);

// The square
//
//   C00 --F--> C10
//    |          |
//    H    τ     G
//    v          v
//   C01 --K--> C11
//
// with τ(a) : G(F(a)) -> K(H(a)) a 1-cell of C11 for every 0-cell a of C00.
// As a 2-cell: s_1 = F, t_1 = K, s_2 = H, t_2 = G.
struct NatTrans {
  std::string name;
  StrictFunctor F, G, H, K;
  std::vector<int> components;

  bool operator==(const NatTrans& other) const;
};

// Shape and boundary problems come back under "transformation shape" and
// "transformation boundary"; naturality is only checked on 1-cells whose
// endpoint components have the right boundary. Naturality reads
// GF(f) then τ(b) = τ(a) then KH(f) for f : a -> b. Throws OutOfUniverse if a
// composite around a square is missing from C11.
Report check_naturality(const NatTrans& t);

// The composition formulas, written classically as
//   (ρ ∘²_{1,1} τ)(a) = ρ(H(a)) ∘ G'(τ(a))   (ρ below τ)
//   (ρ ∘²_{1,2} τ)(a) = K'(τ(a)) ∘ ρ(F(a))   (ρ right of τ)
// and evaluated here as "G'(τ(a)) then ρ(H(a))" and "ρ(F(a)) then K'(τ(a))".
// vcompose needs ρ.F = τ.K, hcompose needs ρ.H = τ.G; CompositionError
// otherwise, OutOfUniverse if a component composite is missing.
NatTrans vcompose(const NatTrans& rho, const NatTrans& tau);
NatTrans hcompose(const NatTrans& rho, const NatTrans& tau);

// 1¹_{2,1}(F), 1¹_{2,2}(F), 1^{1,-}_{2,1}(F), 1^{1,+}_{2,1}(F); every
// component is the identity 1-cell on F(a). Throws CapabilityError if the
// target has no degeneracies.
struct Constructors {
  NatTrans degen1, degen2, conn_minus, conn_plus;
};
Constructors transformation_constructors(const StrictFunctor& f);

// Instances, functors and transformations closed under identities,
// constructors and both compositions. The optional declared tables
// (indices into `functors` / `transformations`, "a then b" order) replace
// the computed composites; they are compared against the formulas.
struct TransformationFamily {
  std::vector<InstancePtr> instances;
  std::vector<StrictFunctor> functors;
  std::vector<NatTrans> transformations;
  CompositionTable functor_composites;  // (F, G) -> G∘F
  CompositionTable vertical;            // (τ, ρ) -> vcompose(ρ, τ)
  CompositionTable horizontal;          // (τ, ρ) -> hcompose(ρ, τ)
};

// Adds identities, constructors and composites until nothing new appears.
// Throws ResourceError past `limit` cells.
TransformationFamily close_family(TransformationFamily f, std::size_t limit = 5000);

// The 2-truncated reflexive meta-level: 0-cells instances, 1-cells
// functors, 2-cells transformations, with faces, identities, constructors
// and compositions as tables. Throws ClosureError listing every missing
// identity, constructor or composite.
StrictInstance meta_instance(const TransformationFamily& f);

// check_strict_functor and check_naturality on every member.
Report check_family_members(const TransformationFamily& f);

// Member checks, declared composites against the formulas, then
// check_strict_axioms on meta_instance.
Report check_cubical_2cat(const TransformationFamily& f);

namespace fixtures {

// Z/n with the functors {id, neg} and every translation transformation.
TransformationFamily integer_loop_family(int n = 3);
// S3 with the functors {id, conjugation by a transposition} and, for every
// quadruple of them, the transformation whose component is natural.
TransformationFamily s3_conjugation_family();
// Identity functor on one instance, closed.
TransformationFamily identity_family(InstancePtr c);
// The one-object instance with a single cell in every dimension up to n.
StrictInstance terminal(int n);

}  // namespace fixtures

}  // namespace cubikit
