#include "spinel/types.hpp"

#include <mutex>

namespace spinel {

namespace {

std::vector<std::uint64_t> keyOf(const TypeNode& n) {
  return {static_cast<std::uint64_t>(n.tag),
          (static_cast<std::uint64_t>(n.sym) << 32) | n.index,
          (static_cast<std::uint64_t>(n.a.id) << 32) | n.b.id};
}

}  // namespace

TypeRef TypeBank::intern(const TypeNode& n) {
  auto key = keyOf(n);
  {
    std::shared_lock lock(mu_);
    auto it = index_.find(key);
    if (it != index_.end()) return TypeRef{it->second};
  }
  std::unique_lock lock(mu_);
  auto it = index_.find(key);
  if (it != index_.end()) return TypeRef{it->second};
  std::uint32_t id = nodes_.append(n);
  index_.emplace(std::move(key), id);
  return TypeRef{id};
}

TypeRef TypeBank::base(SymbolId sym) {
  TypeNode n;
  n.tag = TypeTag::Base;
  n.sym = sym;
  return intern(n);
}

TypeRef TypeBank::var(std::uint32_t index) {
  if (index == 0) throw TypeError("type variable indices start at 1");
  TypeNode n;
  n.tag = TypeTag::Var;
  n.index = index;
  return intern(n);
}

TypeRef TypeBank::arrow(TypeRef domain, TypeRef codomain) {
  TypeNode n;
  n.tag = TypeTag::Arrow;
  n.a = domain;
  n.b = codomain;
  return intern(n);
}

TypeRef TypeBank::forall(TypeRef body) {
  TypeNode n;
  n.tag = TypeTag::Forall;
  n.a = body;
  return intern(n);
}

namespace {

// Lookup of a de Bruijn index through the flattened substitution: either a
// front type or a shifted index.
struct Looked {
  bool isFront;
  TypeRef front;
  std::uint32_t index;
};

Looked lookup(const TypeSubst& s, std::uint32_t index) {
  if (index <= s.fronts.size()) return {true, s.fronts[index - 1], 0};
  return {false, {}, index - static_cast<std::uint32_t>(s.fronts.size()) + s.after};
}

}  // namespace

TypeRef applyTypeSubst(TypeBank& bank, TypeRef ty, const TypeSubst& s) {
  if (s.isIdentity()) return ty;
  const TypeNode& n = bank.node(ty);
  switch (n.tag) {
    case TypeTag::Base:
      return ty;
    case TypeTag::Var: {
      Looked l = lookup(s, n.index);
      return l.isFront ? l.front : bank.var(l.index);
    }
    case TypeTag::Arrow:
      return bank.arrow(applyTypeSubst(bank, n.a, s), applyTypeSubst(bank, n.b, s));
    case TypeTag::Forall:
      return bank.forall(applyTypeSubst(bank, n.a, liftTypeSubst(bank, s)));
  }
  throw TypeError("corrupt type node");
}

TypeSubst composeTypeSubst(TypeBank& bank, const TypeSubst& s, const TypeSubst& r) {
  TypeSubst out;
  out.fronts.reserve(s.fronts.size());
  for (TypeRef f : s.fronts) out.fronts.push_back(applyTypeSubst(bank, f, r));
  // Drop s.after entries of r, then keep its tail.
  if (s.after <= r.fronts.size()) {
    out.fronts.insert(out.fronts.end(), r.fronts.begin() + s.after, r.fronts.end());
    out.after = r.after;
  } else {
    out.after = r.after + (s.after - static_cast<std::uint32_t>(r.fronts.size()));
  }
  return out;
}

TypeSubst liftTypeSubst(TypeBank& bank, const TypeSubst& s) {
  TypeSubst up = TypeSubst::shift(1);
  TypeSubst shifted = composeTypeSubst(bank, s, up);
  TypeSubst out;
  out.fronts.reserve(shifted.fronts.size() + 1);
  out.fronts.push_back(bank.var(1));
  out.fronts.insert(out.fronts.end(), shifted.fronts.begin(), shifted.fronts.end());
  out.after = shifted.after;
  return out;
}

bool occursTypeVar(const TypeBank& bank, TypeRef ty, std::uint32_t index) {
  const TypeNode& n = bank.node(ty);
  switch (n.tag) {
    case TypeTag::Base:
      return false;
    case TypeTag::Var:
      return n.index == index;
    case TypeTag::Arrow:
      return occursTypeVar(bank, n.a, index) || occursTypeVar(bank, n.b, index);
    case TypeTag::Forall:
      return occursTypeVar(bank, n.a, index + 1);
  }
  return false;
}

namespace {

bool closedUpTo(const TypeBank& bank, TypeRef ty, std::uint32_t depth) {
  const TypeNode& n = bank.node(ty);
  switch (n.tag) {
    case TypeTag::Base:
      return true;
    case TypeTag::Var:
      return n.index <= depth;
    case TypeTag::Arrow:
      return closedUpTo(bank, n.a, depth) && closedUpTo(bank, n.b, depth);
    case TypeTag::Forall:
      return closedUpTo(bank, n.a, depth + 1);
  }
  return false;
}

}  // namespace

bool closedType(const TypeBank& bank, TypeRef ty) { return closedUpTo(bank, ty, 0); }

}  // namespace spinel
