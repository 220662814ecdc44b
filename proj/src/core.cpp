#include "sgcm/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgcm/checked.hpp"
#include "sgcm/error.hpp"

namespace sgcm {

namespace {

constexpr std::int64_t kMaxGridCells = std::int64_t{1} << 26;
constexpr std::int64_t kMaxClassTable = std::int64_t{1} << 24;

std::string pair_text(std::int64_t p, std::int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Reachability table over [0, width) x [0, height), column-major in alpha.
struct Grid {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<char> reach;

  bool covers(ExpVec v) const { return v.alpha < width && v.beta < height; }
  bool at(std::int64_t x, std::int64_t y) const { return reach[static_cast<std::size_t>(x * height + y)] != 0; }
};

Grid build_grid(const std::vector<ExpVec>& generators, std::int64_t width, std::int64_t height) {
  if (width > 0 && height > kMaxGridCells / width) {
    throw Error(ErrorCode::BudgetExceeded,
                "membership table " + std::to_string(width) + "x" + std::to_string(height) + " too large");
  }
  Grid g;
  g.width = width;
  g.height = height;
  g.reach.assign(static_cast<std::size_t>(width * height), 0);
  for (std::int64_t x = 0; x < width; ++x) {
    for (std::int64_t y = 0; y < height; ++y) {
      bool r = (x == 0 && y == 0);
      for (const ExpVec& gen : generators) {
        if (r) break;
        if (gen.alpha <= x && gen.beta <= y) r = g.at(x - gen.alpha, y - gen.beta);
      }
      g.reach[static_cast<std::size_t>(x * height + y)] = r ? 1 : 0;
    }
  }
  return g;
}

}  // namespace

ExpVec operator+(ExpVec u, ExpVec v) {
  return {checked_add(u.alpha, v.alpha), checked_add(u.beta, v.beta)};
}

std::vector<ExpVec> RingSpec::all_generators() const {
  std::vector<ExpVec> out;
  out.reserve(gens_.size() + 2);
  out.push_back({a_, 0});
  out.insert(out.end(), gens_.begin(), gens_.end());
  out.push_back({0, b_});
  return out;
}

RingSpec validate(const RawRing& raw) {
  if (raw.a <= 0 || raw.b <= 0) {
    throw Error(ErrorCode::NonPositiveAB, "a and b must be positive, got " + pair_text(raw.a, raw.b));
  }
  std::vector<ExpVec> gens;
  gens.reserve(raw.gens.size());
  for (const auto& [p, q] : raw.gens) {
    if (p < 0 || q < 0) throw Error(ErrorCode::NegativeExponent, "generator " + pair_text(p, q));
    if (p == 0 && q == 0) throw Error(ErrorCode::ZeroGenerator, "generator (0,0)");
    ExpVec v{p, q};
    if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
  }
  return RingSpec(raw.a, raw.b, std::move(gens));
}

ClassGroup::ClassGroup(std::int64_t a, std::int64_t b, std::vector<ClassVec> sorted_elements)
    : a_(a), b_(b), elements_(std::move(sorted_elements)) {
  member_.assign(static_cast<std::size_t>(a * b), false);
  for (const ClassVec& c : elements_) member_[dense_index(c)] = true;
}

bool ClassGroup::contains(ClassVec c) const {
  if (c.p < 0 || c.p >= a_ || c.q < 0 || c.q >= b_) return false;
  return member_[dense_index(c)];
}

ClassVec class_of(ExpVec v, const RingSpec& spec) {
  return {mod_floor(v.alpha, spec.a()), mod_floor(v.beta, spec.b())};
}

ClassVec class_of(LatticeVec v, std::int64_t a, std::int64_t b) {
  return {mod_floor(v.x, a), mod_floor(v.y, b)};
}

ClassGroup subgroup_generated_by(std::int64_t a, std::int64_t b, const std::vector<ClassVec>& gens) {
  if (a <= 0 || b <= 0) throw Error(ErrorCode::NonPositiveAB, "modulus " + pair_text(a, b));
  if (a > kMaxClassTable / b) throw Error(ErrorCode::BudgetExceeded, "class table for " + pair_text(a, b));
  std::vector<char> seen(static_cast<std::size_t>(a * b), 0);
  std::vector<ClassVec> frontier{{0, 0}};
  seen[0] = 1;
  std::vector<ClassVec> all{{0, 0}};
  while (!frontier.empty()) {
    std::vector<ClassVec> next;
    for (const ClassVec& c : frontier) {
      for (const ClassVec& g : gens) {
        ClassVec s{(c.p + mod_floor(g.p, a)) % a, (c.q + mod_floor(g.q, b)) % b};
        auto idx = static_cast<std::size_t>(s.p * b + s.q);
        if (!seen[idx]) {
          seen[idx] = 1;
          next.push_back(s);
          all.push_back(s);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return ClassGroup(a, b, std::move(all));
}

ClassGroup subgroup(const RingSpec& spec) {
  std::vector<ClassVec> gens;
  gens.reserve(spec.gens().size());
  for (const ExpVec& g : spec.gens()) gens.push_back(class_of(g, spec));
  return subgroup_generated_by(spec.a(), spec.b(), gens);
}

std::int64_t order_of(ClassVec c, std::int64_t a, std::int64_t b) {
  std::int64_t p = mod_floor(c.p, a);
  std::int64_t q = mod_floor(c.q, b);
  return checked_lcm(a / std::gcd(p, a), b / std::gcd(q, b));
}

std::int64_t weighted_degree(ExpVec v, const RingSpec& spec) {
  return checked_add(checked_mul(spec.b(), v.alpha), checked_mul(spec.a(), v.beta));
}

bool semigroup_contains(const RingSpec& spec, ExpVec v) {
  if (v.alpha < 0 || v.beta < 0) return false;
  Grid g = build_grid(spec.all_generators(), checked_add(v.alpha, 1), checked_add(v.beta, 1));
  return g.at(v.alpha, v.beta);
}

struct Semigroup::Table {
  Grid grid;
};

Semigroup::Semigroup(RingSpec spec) : spec_(std::move(spec)) {}
Semigroup::~Semigroup() = default;

bool Semigroup::contains(ExpVec v) const {
  if (v.alpha < 0 || v.beta < 0) return false;
  std::lock_guard lock(mutex_);
  if (!table_ || !table_->grid.covers(v)) {
    std::int64_t width = checked_add(v.alpha, 1);
    std::int64_t height = checked_add(v.beta, 1);
    if (table_) {
      std::int64_t w2 = std::max(width, std::min(table_->grid.width * 2, kMaxGridCells));
      std::int64_t h2 = std::max(height, std::min(table_->grid.height * 2, kMaxGridCells));
      if (h2 <= kMaxGridCells / w2) {
        width = w2;
        height = h2;
      } else {
        std::int64_t w3 = std::max(width, table_->grid.width);
        std::int64_t h3 = std::max(height, table_->grid.height);
        if (h3 <= kMaxGridCells / w3) {
          width = w3;
          height = h3;
        }
      }
    }
    auto t = std::make_unique<Table>();
    t->grid = build_grid(spec_.all_generators(), width, height);
    table_ = std::move(t);
  }
  return table_->grid.at(v.alpha, v.beta);
}

Lattice::Lattice(const RingSpec& spec) {
  std::vector<LatticeVec> gens;
  for (const ExpVec& g : spec.all_generators()) gens.push_back({g.alpha, g.beta});
  *this = Lattice(gens);
}

Lattice::Lattice(const std::vector<LatticeVec>& generators) {
  // Rows (first_, offset_) and (0, second_); absorb one generator at a time.
  for (LatticeVec v : generators) {
    std::int64_t x = v.x;
    std::int64_t y = v.y;
    if (x != 0) {
      if (first_ == 0) {
        first_ = x;
        offset_ = y;
        x = 0;
        y = 0;
      } else {
        // Extended gcd on the first coordinates.
        std::int64_t old_r = first_, r = x, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
          std::int64_t qt = old_r / r;
          std::int64_t tmp = old_r - qt * r;
          old_r = r;
          r = tmp;
          tmp = old_s - qt * s;
          old_s = s;
          s = tmp;
          tmp = old_t - qt * t;
          old_t = t;
          t = tmp;
        }
        std::int64_t g = old_r;
        std::int64_t new_offset = checked_add(checked_mul(old_s, offset_), checked_mul(old_t, y));
        // The combination (x/g)*row1 - (first/g)*v has zero first coordinate.
        std::int64_t residual = checked_sub(checked_mul(x / g, offset_), checked_mul(first_ / g, y));
        first_ = g;
        offset_ = new_offset;
        x = 0;
        y = residual;
      }
      if (first_ < 0) {
        first_ = -first_;
        offset_ = -offset_;
      }
    }
    if (y != 0) second_ = std::gcd(second_, y < 0 ? -y : y);
    if (second_ != 0) offset_ = mod_floor(offset_, second_);
  }
}

bool Lattice::contains(LatticeVec v) const {
  std::int64_t y = v.y;
  if (first_ == 0) {
    if (v.x != 0) return false;
  } else {
    if (v.x % first_ != 0) return false;
    y = checked_sub(y, checked_mul(v.x / first_, offset_));
  }
  if (second_ == 0) return y == 0;
  return y % second_ == 0;
}

bool lattice_contains(const RingSpec& spec, LatticeVec v) {
  return Lattice(spec).contains(v);
}

}  // namespace sgcm
