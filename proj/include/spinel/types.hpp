#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "spinel/errors.hpp"
#include "spinel/node_store.hpp"

namespace spinel {

using SymbolId = std::uint32_t;

// Identity of an interned type. Two refs are equal iff the underlying
// structures are equal (perfect sharing), so == is an id comparison.
struct TypeRef {
  std::uint32_t id = 0;
  friend bool operator==(TypeRef a, TypeRef b) { return a.id == b.id; }
  friend bool operator!=(TypeRef a, TypeRef b) { return a.id != b.id; }
  friend bool operator<(TypeRef a, TypeRef b) { return a.id < b.id; }
};

enum class TypeTag : std::uint8_t { Base, Var, Arrow, Forall };

// Types of the second-order polymorphic lambda-calculus. Bound type
// variables are de Bruijn indices starting at 1 (1 = innermost forall).
struct TypeNode {
  TypeTag tag = TypeTag::Base;
  SymbolId sym = 0;         // Base: type-constant symbol
  std::uint32_t index = 0;  // Var: de Bruijn index, >= 1
  TypeRef a;                // Arrow: domain; Forall: body
  TypeRef b;                // Arrow: codomain
};

class TypeBank {
 public:
  TypeBank() = default;

  TypeRef base(SymbolId sym);
  TypeRef var(std::uint32_t index);
  TypeRef arrow(TypeRef domain, TypeRef codomain);
  TypeRef forall(TypeRef body);

  const TypeNode& node(TypeRef r) const { return nodes_[r.id]; }
  std::uint32_t size() const { return nodes_.size(); }

  bool isArrow(TypeRef r) const { return node(r).tag == TypeTag::Arrow; }
  bool isForall(TypeRef r) const { return node(r).tag == TypeTag::Forall; }

 private:
  TypeRef intern(const TypeNode& n);

  mutable std::shared_mutex mu_;
  detail::NodeStore<TypeNode> nodes_;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, detail::WordsHash> index_;
};

// Type-sort explicit substitution in flattened lambda-sigma form:
// cons(fronts[0], cons(fronts[1], ... shift(after))). The identity is
// shift(0) with no fronts.
struct TypeSubst {
  std::vector<TypeRef> fronts;
  std::uint32_t after = 0;

  static TypeSubst identity() { return {}; }
  static TypeSubst shift(std::uint32_t n) { return TypeSubst{{}, n}; }
  // cons(front, shift 0): instantiate index 1, leave the rest.
  static TypeSubst single(TypeRef front) { return TypeSubst{{front}, 0}; }

  bool isIdentity() const { return fronts.empty() && after == 0; }
};

// Capture-free simultaneous substitution over de Bruijn type indices.
// Result is interned; the identity substitution returns `ty` itself.
TypeRef applyTypeSubst(TypeBank& bank, TypeRef ty, const TypeSubst& s);

// Sequential composition: applyTypeSubst(ty, compose(s, r)) ==
// applyTypeSubst(applyTypeSubst(ty, s), r).
TypeSubst composeTypeSubst(TypeBank& bank, const TypeSubst& s, const TypeSubst& r);

// Push a substitution under one Forall binder: 1 . (s o shift(1)).
TypeSubst liftTypeSubst(TypeBank& bank, const TypeSubst& s);

// True iff the free de Bruijn type variable `index` occurs in `ty`
// (indices are adjusted when descending under Forall).
bool occursTypeVar(const TypeBank& bank, TypeRef ty, std::uint32_t index);

// True iff the type has no dangling de Bruijn indices.
bool closedType(const TypeBank& bank, TypeRef ty);

}  // namespace spinel
