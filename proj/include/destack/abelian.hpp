#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "destack/normal_form.hpp"

namespace destack {

class Character;
class Subgroup;

// Finite abelian group presented as Z^k / columnSpan(P). The Smith form of P
// is cached; elements are stored in the diagonalized basis, so equality and
// reduction are componentwise mod the invariant factors.
class FinAbGroup {
 public:
  explicit FinAbGroup(const IntMatrix& presentation) {
    auto d = std::make_shared<Data>();
    d->presentation = presentation;
    std::size_t k = presentation.rows();
    SmithForm s = snf(presentation);
    d->u = s.u;
    d->factors.resize(k);
    d->order = 1;
    for (std::size_t i = 0; i < k; ++i) {
      Int f = (i < s.d.cols()) ? s.d(i, i) : Int(0);
      require(f != 0, Errc::InfiniteCokernel,
              "cokernel has free rank: " + presentation.str());
      d->factors[i] = f;
      d->order *= f;
    }
    d_ = std::move(d);
  }

  static FinAbGroup trivial() { return FinAbGroup(IntMatrix(0, 0)); }

  static FinAbGroup cyclic(const Int& n) {
    require(n >= 1, Errc::Precondition, "cyclic group order must be positive");
    IntMatrix p(1, 1);
    p(0, 0) = n;
    return FinAbGroup(p);
  }

  std::size_t ambientRank() const { return d_->factors.size(); }
  const Int& order() const { return d_->order; }
  // invariant factors in the diagonalized basis (may include leading 1s)
  const std::vector<Int>& smithFactors() const { return d_->factors; }

  // nontrivial invariant factors, canonical isomorphism type
  std::vector<Int> invariantFactors() const {
    std::vector<Int> out;
    for (const Int& f : d_->factors)
      if (f > 1) out.push_back(f);
    return out;
  }

  bool sameGroupAs(const FinAbGroup& o) const { return d_ == o.d_; }

  // canonical coordinates of an ambient vector x in Z^k
  std::vector<Int> reduce(const std::vector<Int>& x) const {
    require(x.size() == ambientRank(), Errc::Precondition, "coordinate length mismatch");
    std::vector<Int> y = d_->u.apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] %= d_->factors[i];
      if (y[i] < 0) y[i] += d_->factors[i];
    }
    return y;
  }

  Character element(const std::vector<Int>& ambientCoords) const;
  Character zero() const;
  // element from already-canonical coordinates
  Character fromCanonical(std::vector<Int> y) const;

  std::vector<Character> enumerate() const;  // all elements; order must be small

  Subgroup fullSubgroup() const;
  Subgroup trivialSubgroup() const;
  Subgroup span(const std::vector<Character>& gens) const;

 private:
  struct Data {
    IntMatrix presentation;
    IntMatrix u;                // from snf(presentation)
    std::vector<Int> factors;   // length k, each >= 1
    Int order;
  };
  std::shared_ptr<const Data> d_;
  friend class Character;
  friend class Subgroup;
};

class Character {
 public:
  Character() = default;

  const FinAbGroup& group() const { return g_; }
  const std::vector<Int>& coords() const { return y_; }

  bool isZero() const {
    for (const Int& c : y_)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const Character& o) const {
    require(g_.sameGroupAs(o.g_), Errc::GroupMismatch, "characters live in different groups");
    return y_ == o.y_;
  }

  Character operator+(const Character& o) const {
    require(g_.sameGroupAs(o.g_), Errc::GroupMismatch, "characters live in different groups");
    std::vector<Int> y(y_.size());
    const auto& f = g_.smithFactors();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y_[i] + o.y_[i]) % f[i];
    return g_.fromCanonical(std::move(y));
  }

  Character operator-() const {
    std::vector<Int> y(y_.size());
    const auto& f = g_.smithFactors();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = y_[i] == 0 ? Int(0) : f[i] - y_[i];
    return g_.fromCanonical(std::move(y));
  }

  Character operator-(const Character& o) const { return *this + (-o); }

  Character times(const Int& n) const {
    std::vector<Int> y(y_.size());
    const auto& f = g_.smithFactors();
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = (y_[i] * n) % f[i];
      if (y[i] < 0) y[i] += f[i];
    }
    return g_.fromCanonical(std::move(y));
  }

  Int order() const {
    Int t = 1;
    const auto& f = g_.smithFactors();
    for (std::size_t i = 0; i < y_.size(); ++i) {
      if (y_[i] == 0) continue;
      t = lcmInt(t, f[i] / gcdInt(f[i], y_[i]));
    }
    return t;
  }

 private:
  Character(const FinAbGroup& g, std::vector<Int> y) : g_(g), y_(std::move(y)) {}
  FinAbGroup g_ = FinAbGroup::trivial();
  std::vector<Int> y_;
  friend class FinAbGroup;
  friend class Subgroup;
};

inline Character FinAbGroup::element(const std::vector<Int>& ambientCoords) const {
  return Character(*this, reduce(ambientCoords));
}

inline Character FinAbGroup::fromCanonical(std::vector<Int> y) const {
  return Character(*this, std::move(y));
}

inline Character FinAbGroup::zero() const {
  return Character(*this, std::vector<Int>(ambientRank()));
}

inline std::vector<Character> FinAbGroup::enumerate() const {
  require(order() <= 100000, Errc::BudgetExceeded, "group too large to enumerate");
  std::vector<Character> out;
  std::vector<Int> y(ambientRank());
  for (;;) {
    out.push_back(fromCanonical(y));
    std::size_t i = 0;
    for (; i < y.size(); ++i) {
      y[i] += 1;
      if (y[i] < d_->factors[i]) break;
      y[i] = 0;
    }
    if (i == y.size()) break;
    if (y.empty()) break;
  }
  return out;
}

// Subgroup of a FinAbGroup, stored as the canonical Hermite basis of its
// preimage lattice in the diagonalized Z^k (the lattice sits between the
// relation lattice diag(factors) and Z^k).
class Subgroup {
 public:
  const FinAbGroup& group() const { return g_; }
  const IntMatrix& lattice() const { return basis_; }

  Int order() const {
    Int idx = 1;  // index of basis lattice in Z^k
    for (std::size_t i = 0; i < basis_.rows(); ++i) idx *= basis_(i, i);
    return g_.order() / idx;
  }

  bool isTrivial() const { return order() == 1; }

  bool contains(const Character& c) const {
    require(g_.sameGroupAs(c.group()), Errc::GroupMismatch, "character from another group");
    return inColumnSpan(basis_, c.coords());
  }

  bool containsSubgroup(const Subgroup& o) const {
    require(g_.sameGroupAs(o.g_), Errc::GroupMismatch, "subgroup of another group");
    for (std::size_t j = 0; j < o.basis_.cols(); ++j)
      if (!inColumnSpan(basis_, o.basis_.column(j))) return false;
    return true;
  }

  bool operator==(const Subgroup& o) const {
    require(g_.sameGroupAs(o.g_), Errc::GroupMismatch, "subgroup of another group");
    return basis_ == o.basis_;
  }

  friend Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require(a.g_.sameGroupAs(b.g_), Errc::GroupMismatch, "subgroups of different groups");
    std::size_t k = a.g_.ambientRank();
    // stacked kernel: x in both lattices iff x = A s = B t for integer s, t
    IntMatrix stacked(k, 2 * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        stacked(i, j) = a.basis_(i, j);
        stacked(i, k + j) = -b.basis_(i, j);
      }
    IntMatrix ker = kernelBasis(stacked);
    IntMatrix sPart(k, ker.cols());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) sPart(i, j) = ker(i, j);
    return Subgroup(a.g_, a.basis_ * sPart);
  }

 private:
  Subgroup(const FinAbGroup& g, const IntMatrix& generators) : g_(g) {
    // append the relation lattice so the span always contains it
    std::size_t k = g.ambientRank();
    IntMatrix all(k, generators.cols() + k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < generators.cols(); ++j) all(i, j) = generators(i, j);
      all(i, generators.cols() + i) = g.smithFactors()[i];
    }
    basis_ = latticeBasis(all);
  }
  FinAbGroup g_;
  IntMatrix basis_;  // k x k canonical Hermite basis
  friend class FinAbGroup;
  friend class CyclicQuotient;
};

inline Subgroup FinAbGroup::span(const std::vector<Character>& gens) const {
  IntMatrix g(ambientRank(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    require(sameGroupAs(gens[j].group()), Errc::GroupMismatch,
            "generator from another group");
    for (std::size_t i = 0; i < ambientRank(); ++i) g(i, j) = gens[j].coords()[i];
  }
  return Subgroup(*this, g);
}

inline Subgroup FinAbGroup::fullSubgroup() const {
  return Subgroup(*this, IntMatrix::identity(ambientRank()));
}

inline Subgroup FinAbGroup::trivialSubgroup() const {
  return Subgroup(*this, IntMatrix(ambientRank(), 0));
}

// Cyclic quotient big/small with a designated generator. The projection sends
// a character contained in `big` to its multiple of the generator in [0, ord).
class CyclicQuotient {
 public:
  CyclicQuotient(const Subgroup& big, const Subgroup& small, const Character& designated)
      : big_(big) {
    require(big.group().sameGroupAs(small.group()), Errc::GroupMismatch,
            "quotient of subgroups of different groups");
    require(big.containsSubgroup(small), Errc::NotSubgroup, "small is not inside big");
    std::size_t k = big.group().ambientRank();
    // express small's basis in big's coordinates
    IntMatrix rel(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto x = solveInColumnSpan(big.lattice(), small.lattice().column(j));
      require(x.has_value(), Errc::NotSubgroup, "small basis vector outside big");
      for (std::size_t i = 0; i < k; ++i) rel(i, j) = (*x)[i];
    }
    SmithForm s = snf(rel);
    order_ = 1;
    projRow_.assign(k, Int(0));
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Int f = (i < s.d.cols()) ? s.d(i, i) : Int(0);
      require(f != 0, Errc::InvariantViolation, "finite quotient expected");
      if (f > 1) {
        ++nontrivial;
        order_ = f;
        projRow_ = s.u.row(i);
      }
    }
    require(nontrivial <= 1, Errc::NotCyclic, "quotient has 2 or more invariant factors > 1");
    Int img = project(designated);
    generator_ = (img != 0 && gcdInt(img, order_) == 1) ? img : Int(1);
  }

  const Int& order() const { return order_; }
  // the image of the designated character, when it generates; 1 otherwise
  const Int& generatorResidue() const { return generator_; }

  // image of c in Z/order as a residue
  Int project(const Character& c) const {
    if (order_ == 1) return 0;
    auto x = solveInColumnSpan(big_.lattice(), c.coords());
    require(x.has_value(), Errc::Precondition, "character outside the big subgroup");
    Int acc = 0;
    for (std::size_t i = 0; i < x->size(); ++i) acc += projRow_[i] * (*x)[i];
    acc %= order_;
    if (acc < 0) acc += order_;
    return acc;
  }

  // c as a multiple of the chosen generator, in [0, order)
  Int indexOf(const Character& c) const {
    if (order_ == 1) return 0;
    Int img = project(c);
    // generator is a unit mod order; divide by it
    Int g, s, t;
    extGcd(generator_, order_, g, s, t);
    Int idx = (img * s) % order_;
    if (idx < 0) idx += order_;
    return idx;
  }

 private:
  Subgroup big_;
  Int order_;
  Int generator_;
  std::vector<Int> projRow_;
};

inline FinAbGroup cokernel(const IntMatrix& m) { return FinAbGroup(m); }

}  // namespace destack
