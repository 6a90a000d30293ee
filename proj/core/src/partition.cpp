#include "blochlip/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochlip {

namespace {

void validate_knots(const std::vector<double>& knots) {
    if (knots.size() < 2) throw std::invalid_argument("Partition: need at least two knots");
    if (knots.front() != 0.0 || knots.back() != 1.0)
        throw std::invalid_argument("Partition: endpoints must be exactly 0 and 1");
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1]))
            throw std::invalid_argument("Partition: knots must be strictly increasing");
        if (!std::isfinite(knots[i])) throw std::invalid_argument("Partition: knots must be finite");
    }
}

}  // namespace

Partition Partition::uniform(int intervals) {
    if (intervals < 1) throw std::invalid_argument("Partition::uniform: intervals must be >= 1");
    std::vector<double> knots(static_cast<std::size_t>(intervals) + 1);
    for (int i = 0; i <= intervals; ++i)
        knots[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(intervals);
    knots.front() = 0.0;
    knots.back() = 1.0;
    return of(std::move(knots));
}

Partition Partition::of(std::vector<double> knots) {
    validate_knots(knots);
    Partition p;
    p.knots_ = std::move(knots);
    return p;
}

const std::vector<double>& Partition::tags() const {
    if (!has_tags()) throw std::logic_error("Partition: tags requested but none present");
    return tags_;
}

Partition Partition::with_tags(std::vector<double> tags) const {
    if (tags.size() != static_cast<std::size_t>(intervals()))
        throw std::invalid_argument("Partition: need exactly one tag per subinterval");
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (!(tags[i] >= knots_[i] && tags[i] <= knots_[i + 1]))
            throw std::invalid_argument("Partition: tag outside its subinterval");
    Partition p = *this;
    p.tags_ = std::move(tags);
    return p;
}

Partition Partition::with_tag_rule(TagRule rule) const {
    std::vector<double> tags(static_cast<std::size_t>(intervals()));
    for (std::size_t i = 0; i < tags.size(); ++i)
        tags[i] = rule == TagRule::Left ? knots_[i] : 0.5 * (knots_[i] + knots_[i + 1]);
    Partition p = *this;
    p.tags_ = std::move(tags);
    return p;
}

Partition Partition::bisected() const {
    std::vector<double> knots;
    knots.reserve(knots_.size() * 2 - 1);
    for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
        knots.push_back(knots_[i]);
        knots.push_back(0.5 * (knots_[i] + knots_[i + 1]));
    }
    knots.push_back(knots_.back());
    Partition p;
    p.knots_ = std::move(knots);
    return p;
}

double Partition::diameter() const {
    double d = 0.0;
    for (std::size_t i = 1; i < knots_.size(); ++i) d = std::max(d, knots_[i] - knots_[i - 1]);
    return d;
}

bool Partition::refines(const Partition& parent) const {
    return std::includes(knots_.begin(), knots_.end(), parent.knots_.begin(), parent.knots_.end());
}

}  // namespace blochlip
