#pragma once

/**
 * @file region.hpp
 * @brief Parabolic inequalities and regions, exact interior-point search,
 *        region intersection and complementary merging.
 */

#include <optional>
#include <string>
#include <vector>

#include "plq/functions.hpp"
#include "plq/polytope.hpp"

namespace plq {

// a*x^2 + b*xy + c*y^2 + d*x + e*y + f <= 0 with b^2 - 4ac = 0 exactly.
// Stored closed; strictness appears only in interior tests.
class ParabolicInequality {
  public:
    // Canonicalizes to primitive coefficients; throws unless parabolic.
    static ParabolicInequality from(const QuadFn& f);
    static ParabolicInequality from_linear(const LinFn& l);

    const QuadFn& fn() const { return f_; }
    ParabolicInequality negated() const;
    const std::string& key() const { return key_; }
    bool operator==(const ParabolicInequality& o) const { return key_ == o.key_; }

    Scalar eval(const Pt& p) const { return f_.eval(p); }

  private:
    ParabolicInequality(QuadFn f, std::string key) : f_(std::move(f)), key_(std::move(key)) {}
    QuadFn f_;
    std::string key_;
};

class ParabolicRegion {
  public:
    ParabolicRegion() = default;  // whole plane
    explicit ParabolicRegion(std::vector<ParabolicInequality> ineqs,
                             std::optional<Pt> witness = std::nullopt);

    const std::vector<ParabolicInequality>& inequalities() const { return ineqs_; }
    const std::optional<Pt>& witness() const { return witness_; }
    void set_witness(const Pt& p);

    bool contains(const Pt& p) const;           // all <= 0
    bool strictly_contains(const Pt& p) const;  // all < 0

    ParabolicRegion with(const ParabolicInequality& extra) const;
    std::string key() const;  // canonical: sorted inequality keys

  private:
    std::vector<ParabolicInequality> ineqs_;  // deduplicated
    std::optional<Pt> witness_;
};

// Exact decision: a rational point with all constraints strictly negative,
// or certified absence of one.  Hints are tried first.
std::optional<Pt> find_strict_point(const std::vector<QuadFn>& constraints,
                                    const std::vector<Pt>& hints);

// Witness for the (strict) interior of R; caches into R on success.
std::optional<Pt> interior_point(ParabolicRegion& r, const std::vector<Pt>& hints = {});

// Conjunction with duplicates removed; nonempty interior required.
std::optional<ParabolicRegion> intersect_regions(const ParabolicRegion& r1,
                                                 const ParabolicRegion& r2);

// Merge iff the inequality sets differ in exactly one complementary pair.
std::optional<ParabolicRegion> merge_complementary(const ParabolicRegion& r1,
                                                   const ParabolicRegion& r2);

// Drop inequalities that never cut the region (exact emptiness tests).
ParabolicRegion prune_redundant(const ParabolicRegion& r);

// Polytope as a parabolic region (halfplanes become linear inequalities).
ParabolicRegion region_of_polytope(const Polytope& p);

}  // namespace plq
