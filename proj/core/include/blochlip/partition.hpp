#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace blochlip {

enum class TagRule { Left, Midpoint };

// Finite subdivision 0 = t_0 < t_1 < ... < t_n = 1 of the parameter interval,
// optionally carrying one tag point per subinterval (t_{i-1} <= tag_i <= t_i)
// for Stieltjes sums.
class Partition {
public:
    static Partition uniform(int intervals);
    static Partition of(std::vector<double> knots);

    const std::vector<double>& knots() const { return knots_; }
    int intervals() const { return static_cast<int>(knots_.size()) - 1; }

    bool has_tags() const { return !tags_.empty(); }
    const std::vector<double>& tags() const;

    Partition with_tags(std::vector<double> tags) const;
    Partition with_tag_rule(TagRule rule) const;
    Partition with_left_tags() const { return with_tag_rule(TagRule::Left); }
    Partition with_midpoint_tags() const { return with_tag_rule(TagRule::Midpoint); }

    // Inserts the midpoint of every subinterval. Tags are dropped; re-tag with
    // a rule afterwards.
    Partition bisected() const;

    double diameter() const;

    // True when every knot of parent appears in this partition.
    bool refines(const Partition& parent) const;

private:
    Partition() = default;
    std::vector<double> knots_;
    std::vector<double> tags_;
};

}  // namespace blochlip
