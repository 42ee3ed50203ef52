#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "destack/abelian.hpp"
#include "destack/hash.hpp"
#include "destack/linear.hpp"
#include "destack/normal_form.hpp"

namespace destack {

// A ray of an orbifold fan: the marked lattice point beta (not necessarily
// primitive), its position in the divisor ordering, and the divisor flags.
struct Ray {
  std::vector<Int> beta;
  long orderKey = 0;
  bool inD = false;
  bool distinguished = false;

  Int multiplicity() const {
    Int g = gcdVec(beta);
    return g == 0 ? Int(0) : g;
  }

  std::vector<Int> primitive() const {
    Int g = gcdVec(beta);
    std::vector<Int> p = beta;
    if (g > 1)
      for (Int& x : p) x /= g;
    return p;
  }
};

// Cone = strictly increasing list of ray indices. The empty cone is the
// origin.
using Cone = std::vector<std::size_t>;

struct LocalGroup {
  FinAbGroup group;                // character group of the stabilizer at the cone
  std::vector<Character> chars;    // action characters, parallel to the cone's rays
  LocalGroup() : group(FinAbGroup::trivial()) {}
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

class StackyFan {
 public:
  StackyFan() = default;

  StackyFan(std::size_t rank, std::vector<Ray> rays, const std::vector<Cone>& cones)
      : rank_(rank), rays_(std::move(rays)) {
    for (const Ray& r : rays_)
      require(r.beta.size() == rank_, Errc::Precondition, "ray dimension mismatch");
    std::set<long> keys;
    for (const Ray& r : rays_)
      require(keys.insert(r.orderKey).second, Errc::Precondition, "duplicate ray order key");
    std::set<Cone> closed;
    closed.insert(Cone{});
    for (std::size_t i = 0; i < rays_.size(); ++i) closed.insert(Cone{i});
    for (Cone c : cones) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (std::size_t idx : c)
        require(idx < rays_.size(), Errc::Precondition, "cone references unknown ray");
      insertWithFaces(closed, c);
    }
    cones_.assign(closed.begin(), closed.end());
  }

  std::size_t rank() const { return rank_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(std::size_t i) const { return rays_[i]; }
  std::size_t rayCount() const { return rays_.size(); }
  const std::vector<Cone>& cones() const { return cones_; }

  bool hasCone(const Cone& c) const {
    return std::binary_search(cones_.begin(), cones_.end(), c);
  }

  std::vector<Cone> maximalCones() const {
    std::vector<Cone> out;
    for (const Cone& c : cones_) {
      bool maximal = true;
      for (const Cone& d : cones_)
        if (c != d && c.size() < d.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(c);
    }
    return out;
  }

  long maxOrderKey() const {
    long m = -1;
    for (const Ray& r : rays_) m = std::max(m, r.orderKey);
    return m;
  }

  std::optional<std::size_t> rayByOrderKey(long key) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].orderKey == key) return i;
    return std::nullopt;
  }

  // ray indices of the divisor set D, sorted by order key
  std::vector<std::size_t> divisorRays() const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].inD) d.push_back(i);
    std::sort(d.begin(), d.end(),
              [&](std::size_t a, std::size_t b) { return rays_[a].orderKey < rays_[b].orderKey; });
    return d;
  }

  std::vector<std::size_t> distinguishedRays() const {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i].distinguished) d.push_back(i);
    std::sort(d.begin(), d.end(),
              [&](std::size_t a, std::size_t b) { return rays_[a].orderKey < rays_[b].orderKey; });
    return d;
  }

  IntMatrix coneMatrix(const Cone& c) const {
    IntMatrix m(rank_, c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
      for (std::size_t i = 0; i < rank_; ++i) m(i, j) = rays_[c[j]].beta[i];
    return m;
  }

  IntMatrix conePrimitiveMatrix(const Cone& c) const {
    IntMatrix m(rank_, c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      std::vector<Int> p = rays_[c[j]].primitive();
      for (std::size_t i = 0; i < rank_; ++i) m(i, j) = p[i];
    }
    return m;
  }

  // Cox-construction local data at a cone: the character group of the
  // stabilizer, presented as the cokernel of the transposed beta matrix in
  // the saturated sublattice spanned by the cone.
  LocalGroup localGroup(const Cone& sigma) const {
    require(hasCone(sigma), Errc::ConeNotInFan, "cone is not part of the fan");
    LocalGroup out;
    std::size_t d = sigma.size();
    if (d == 0) return out;
    IntMatrix b = coneMatrix(sigma);
    SmithForm s = snf(b);
    for (std::size_t i = 0; i < d; ++i)
      require(s.d(i, i) != 0, Errc::InvariantViolation, "cone is not simplicial");
    IntMatrix inSaturated = (s.u * b).topRows(d);
    out.group = FinAbGroup(inSaturated.transposed());
    out.chars.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Int> e(d);
      e[j] = 1;
      out.chars.push_back(out.group.element(e));
    }
    return out;
  }

  // smooth with respect to the ambient lattice: primitive generators extend
  // to a basis of Z^rank
  bool coneSmooth(const Cone& sigma) const {
    if (sigma.empty()) return true;
    SmithForm s = snf(conePrimitiveMatrix(sigma));
    for (std::size_t i = 0; i < sigma.size(); ++i)
      if (s.d(i, i) != 1) return false;
    return true;
  }

  StackyFan withRootStack(std::size_t rayIdx, const Int& d) const {
    require(rayIdx < rays_.size(), Errc::Precondition, "no such ray");
    require(d >= 1, Errc::Precondition, "root stack order must be >= 1");
    if (d == 1) return *this;
    StackyFan f = *this;
    for (Int& x : f.rays_[rayIdx].beta) x *= d;
    return f;
  }

  // Star subdivision along sigma at the stacky barycenter sum of beta(rho).
  // The new ray is appended with the supplied marks; its order key must
  // exceed every existing one. Defined after the Subdivision struct below.
  struct Subdivision;
  Subdivision withStarSubdivision(const Cone& sigma, long newOrderKey, bool newInD,
                                  bool newDistinguished) const;

  StackyFan withRayMarks(std::size_t rayIdx, std::optional<bool> inD,
                         std::optional<bool> distinguished,
                         std::optional<long> newOrderKey) const {
    require(rayIdx < rays_.size(), Errc::Precondition, "no such ray");
    StackyFan f = *this;
    if (inD) f.rays_[rayIdx].inD = *inD;
    if (distinguished) f.rays_[rayIdx].distinguished = *distinguished;
    if (newOrderKey) {
      for (std::size_t i = 0; i < rays_.size(); ++i)
        require(i == rayIdx || rays_[i].orderKey != *newOrderKey, Errc::Precondition,
                "order key already in use");
      f.rays_[rayIdx].orderKey = *newOrderKey;
    }
    f.cones_ = cones_;
    return f;
  }

  // Induced subfan on a face-closed subset of cones.
  StackyFan restrictedTo(const std::vector<Cone>& subset) const {
    std::set<Cone> sub(subset.begin(), subset.end());
    sub.insert(Cone{});
    for (const Cone& c : sub) {
      require(hasCone(c), Errc::Precondition, "subset cone not in fan");
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        Cone face;
        for (std::size_t k = 0; k < c.size(); ++k)
          if (k != drop) face.push_back(c[k]);
        require(sub.count(face), Errc::NotFaceClosed, "subset is not closed under faces");
      }
    }
    std::set<std::size_t> used;
    for (const Cone& c : sub)
      for (std::size_t idx : c) used.insert(idx);
    std::vector<Ray> rays;
    std::map<std::size_t, std::size_t> remap;
    for (std::size_t idx : used) {
      remap[idx] = rays.size();
      rays.push_back(rays_[idx]);
    }
    std::vector<Cone> cones;
    for (const Cone& c : sub) {
      Cone nc;
      for (std::size_t idx : c) nc.push_back(remap[idx]);
      std::sort(nc.begin(), nc.end());
      cones.push_back(nc);
    }
    return StackyFan(rank_, std::move(rays), cones);
  }

  // Canonical serialization: rays sorted by order key, cones as sorted tuples
  // of ray order keys (or dense ranks when densify is set), sorted
  // lexicographically.
  std::string canonicalString(bool densifyKeys = false) const {
    std::vector<std::size_t> byKey(rays_.size());
    for (std::size_t i = 0; i < rays_.size(); ++i) byKey[i] = i;
    std::sort(byKey.begin(), byKey.end(),
              [&](std::size_t a, std::size_t b) { return rays_[a].orderKey < rays_[b].orderKey; });
    std::map<long, long> keyOf;
    for (std::size_t pos = 0; pos < byKey.size(); ++pos)
      keyOf[rays_[byKey[pos]].orderKey] = densifyKeys ? static_cast<long>(pos)
                                                      : rays_[byKey[pos]].orderKey;
    std::ostringstream os;
    os << "rank " << rank_ << "\n";
    for (std::size_t i : byKey) {
      const Ray& r = rays_[i];
      os << "ray " << keyOf[r.orderKey] << " [";
      for (std::size_t k = 0; k < r.beta.size(); ++k) os << (k ? "," : "") << r.beta[k];
      os << "] D=" << r.inD << " dist=" << r.distinguished << "\n";
    }
    std::vector<std::vector<long>> coneKeys;
    for (const Cone& c : cones_) {
      std::vector<long> ck;
      for (std::size_t idx : c) ck.push_back(keyOf[rays_[idx].orderKey]);
      std::sort(ck.begin(), ck.end());
      coneKeys.push_back(std::move(ck));
    }
    std::sort(coneKeys.begin(), coneKeys.end());
    for (const auto& ck : coneKeys) {
      os << "cone";
      for (long k : ck) os << " " << k;
      os << "\n";
    }
    return os.str();
  }

  std::uint64_t hash() const { return fnv1a64(canonicalString()); }

  bool structurallyEqual(const StackyFan& o, bool densifyKeys = false) const {
    return canonicalString(densifyKeys) == o.canonicalString(densifyKeys);
  }

 private:
  static void insertWithFaces(std::set<Cone>& acc, const Cone& c) {
    if (!acc.insert(c).second) return;
    if (c.size() <= 1) return;
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      Cone face;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (k != drop) face.push_back(c[k]);
      insertWithFaces(acc, face);
    }
  }

  std::size_t rank_ = 0;
  std::vector<Ray> rays_;
  std::vector<Cone> cones_;  // sorted, face-closed, includes {} and all 1-cones
};

struct StackyFan::Subdivision {
  StackyFan fan;
  std::size_t newRay;
};

inline StackyFan::Subdivision StackyFan::withStarSubdivision(const Cone& sigma, long newOrderKey,
                                                             bool newInD,
                                                             bool newDistinguished) const {
  require(hasCone(sigma), Errc::InvalidCenter, "center is not a cone of the fan");
  require(sigma.size() >= 2, Errc::InvalidCenter, "center must have dimension >= 2");
  require(newOrderKey > maxOrderKey(), Errc::Precondition,
          "new ray order key must be strictly greatest");
  Ray nr;
  nr.beta.assign(rank_, Int(0));
  for (std::size_t idx : sigma)
    for (std::size_t i = 0; i < rank_; ++i) nr.beta[i] += rays_[idx].beta[i];
  nr.orderKey = newOrderKey;
  nr.inD = newInD;
  nr.distinguished = newDistinguished;

  std::vector<Ray> rays = rays_;
  rays.push_back(nr);
  std::size_t v = rays.size() - 1;

  std::vector<Cone> generators;
  for (const Cone& c : cones_) {
    if (!std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) {
      generators.push_back(c);
      continue;
    }
    // replace c by the star pattern: drop one ray of sigma, add v
    for (std::size_t drop : sigma) {
      Cone nc;
      for (std::size_t idx : c)
        if (idx != drop) nc.push_back(idx);
      nc.push_back(v);
      std::sort(nc.begin(), nc.end());
      generators.push_back(nc);
    }
  }
  return Subdivision{StackyFan(rank_, std::move(rays), generators), v};
}

// Structural validation of the orbifold-fan axioms plus the divisor-pair
// conditions. Strict mode requires every divisor to act nontrivially along
// its own locus (multiplicity >= 2); lenient mode downgrades that to a
// warning, matching the convention that a trivially-acting divisor may be
// neglected.
inline ValidationReport validate(const StackyFan& f, bool strict = false) {
  ValidationReport rep;
  auto complain = [&](const std::string& s) { rep.violations.push_back(s); };

  for (std::size_t i = 0; i < f.rayCount(); ++i) {
    const Ray& r = f.ray(i);
    bool zero = true;
    for (const Int& x : r.beta)
      if (x != 0) zero = false;
    if (zero) complain("ray " + std::to_string(i) + " has zero beta");
    if (r.distinguished && !r.inD)
      complain("ray " + std::to_string(i) + " is distinguished but not in D");
  }

  // simpliciality
  for (const Cone& c : f.cones()) {
    if (c.size() < 2) continue;
    if (rank(f.coneMatrix(c)) != c.size()) {
      std::ostringstream os;
      os << "cone {";
      for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
      os << "} is not simplicial";
      complain(os.str());
    }
  }

  // fan condition: distinct cones have disjoint relative interiors
  const auto& cones = f.cones();
  for (std::size_t a = 0; a < cones.size(); ++a) {
    if (cones[a].empty() || rank(f.coneMatrix(cones[a])) != cones[a].size()) continue;
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      if (cones[b].empty() || rank(f.coneMatrix(cones[b])) != cones[b].size()) continue;
      if (relativeInteriorsMeet(f.coneMatrix(cones[a]), f.coneMatrix(cones[b]))) {
        std::ostringstream os;
        os << "cones {";
        for (std::size_t k = 0; k < cones[a].size(); ++k) os << (k ? "," : "") << cones[a][k];
        os << "} and {";
        for (std::size_t k = 0; k < cones[b].size(); ++k) os << (k ? "," : "") << cones[b][k];
        os << "} overlap without a common face";
        complain(os.str());
      }
    }
  }

  // distinguished divisors form a top segment of the divisor ordering
  long maxNonDist = std::numeric_limits<long>::min();
  long minDist = std::numeric_limits<long>::max();
  bool anyDist = false, anyNonDist = false;
  for (const Ray& r : f.rays()) {
    if (!r.inD) continue;
    if (r.distinguished) {
      anyDist = true;
      minDist = std::min(minDist, r.orderKey);
    } else {
      anyNonDist = true;
      maxNonDist = std::max(maxNonDist, r.orderKey);
    }
  }
  if (anyDist && anyNonDist && maxNonDist > minDist)
    complain("a non-distinguished divisor follows a distinguished one in the ordering");

  // divisor nontriviality along its own locus
  for (std::size_t i = 0; i < f.rayCount(); ++i) {
    const Ray& r = f.ray(i);
    if (!r.inD) continue;
    if (r.multiplicity() < 2) {
      std::string msg = "divisor ray " + std::to_string(i) +
                        " acts trivially along its own locus (multiplicity 1)";
      if (strict)
        complain(msg);
      else
        rep.warnings.push_back(msg);
    }
  }
  return rep;
}

}  // namespace destack
