#pragma once

// Exact lattice and semigroup arithmetic for the rings
//   R = k[x^a, x^{p_1} y^{q_1}, ..., x^{p_t} y^{q_t}, y^b]  inside k[x, y].
// A monomial is identified with its exponent vector; S is the additive
// semigroup of exponent vectors of monomials of R.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace sgcm {

/// Exponent vector (alpha, beta) of x^alpha y^beta.
struct ExpVec {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

ExpVec operator+(ExpVec u, ExpVec v);

/// Componentwise partial order.
inline bool divides(ExpVec lower, ExpVec upper) {
  return lower.alpha <= upper.alpha && lower.beta <= upper.beta;
}

/// Ordering used for every public listing of monomials: by beta, then alpha.
inline bool beta_then_alpha(const ExpVec& u, const ExpVec& v) {
  return u.beta != v.beta ? u.beta < v.beta : u.alpha < v.alpha;
}

/// A point of Z^2 that may have negative coordinates.
struct LatticeVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
  friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
};

/// Canonical residue class in Z/aZ + Z/bZ: 0 <= p < a, 0 <= q < b.
struct ClassVec {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend auto operator<=>(const ClassVec&, const ClassVec&) = default;
  friend bool operator==(const ClassVec&, const ClassVec&) = default;
};

/// Unvalidated ring data as it arrives from a caller or a parser.
struct RawRing {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
};

/// Validated generator data. Only `validate` produces one, so every instance
/// satisfies a, b >= 1, nonzero and nonnegative duplicate-free generators.
class RingSpec {
 public:
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  const std::vector<ExpVec>& gens() const { return gens_; }

  /// (a,0), the middle generators in order, then (0,b).
  std::vector<ExpVec> all_generators() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

  friend RingSpec validate(const RawRing& raw);

 private:
  RingSpec(std::int64_t a, std::int64_t b, std::vector<ExpVec> gens)
      : a_(a), b_(b), gens_(std::move(gens)) {}

  std::int64_t a_;
  std::int64_t b_;
  std::vector<ExpVec> gens_;
};

/// Checks the raw data, removes repeated generators (first occurrence wins)
/// and otherwise keeps the caller's order.
RingSpec validate(const RawRing& raw);

/// Subgroup of Z/aZ + Z/bZ. Elements are kept sorted lexicographically.
class ClassGroup {
 public:
  ClassGroup(std::int64_t a, std::int64_t b, std::vector<ClassVec> sorted_elements);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  const std::vector<ClassVec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(ClassVec c) const;

  /// Dense index p*b + q, handy for per-class arrays of length a*b.
  std::size_t dense_index(ClassVec c) const { return static_cast<std::size_t>(c.p * b_ + c.q); }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<ClassVec> elements_;
  std::vector<bool> member_;  // indexed by dense_index
};

ClassVec class_of(ExpVec v, const RingSpec& spec);
ClassVec class_of(LatticeVec v, std::int64_t a, std::int64_t b);

/// Closure of the middle generators' classes under addition mod (a,b).
ClassGroup subgroup(const RingSpec& spec);
ClassGroup subgroup_generated_by(std::int64_t a, std::int64_t b, const std::vector<ClassVec>& gens);

/// Order of c in Z/aZ + Z/bZ.
std::int64_t order_of(ClassVec c, std::int64_t a, std::int64_t b);

/// x gets weight b and y gets weight a, so deg(x^a) = deg(y^b) = ab.
std::int64_t weighted_degree(ExpVec v, const RingSpec& spec);

/// Membership in S by reachability dynamic programming over [0,alpha] x [0,beta].
/// Each call recomputes; use `Semigroup` to amortize many queries.
bool semigroup_contains(const RingSpec& spec, ExpVec v);

/// Membership oracle with a lazily grown, mutex-guarded DP table.
/// Results are identical to `semigroup_contains`.
class Semigroup {
 public:
  explicit Semigroup(RingSpec spec);
  ~Semigroup();
  Semigroup(const Semigroup&) = delete;
  Semigroup& operator=(const Semigroup&) = delete;

  const RingSpec& spec() const { return spec_; }
  bool contains(ExpVec v) const;

 private:
  struct Table;
  RingSpec spec_;
  mutable std::mutex mutex_;
  mutable std::unique_ptr<Table> table_;
};

/// Hermite normal form of the group G generated by S:
/// G = Z(first, offset) + Z(0, second), first, second > 0, 0 <= offset < second.
class Lattice {
 public:
  explicit Lattice(const RingSpec& spec);
  explicit Lattice(const std::vector<LatticeVec>& generators);

  bool contains(LatticeVec v) const;
  std::int64_t first() const { return first_; }
  std::int64_t offset() const { return offset_; }
  std::int64_t second() const { return second_; }

 private:
  std::int64_t first_ = 0;
  std::int64_t offset_ = 0;
  std::int64_t second_ = 0;
};

bool lattice_contains(const RingSpec& spec, LatticeVec v);

}  // namespace sgcm
