#include "interlab/measure_space.hpp"

#include <algorithm>

#include "interlab/error.hpp"

namespace interlab {

MeasureSpace::MeasureSpace(std::vector<std::string> atoms, std::vector<Scalar> weights,
                           std::optional<std::string> truncation_of)
    : atoms_(std::move(atoms)), weights_(std::move(weights)), truncation_of_(std::move(truncation_of)) {
  if (atoms_.empty()) throw InputError("a measure space needs at least one atom");
  if (atoms_.size() != weights_.size()) {
    throw InputError("measure space has " + std::to_string(atoms_.size()) + " atoms but " +
                     std::to_string(weights_.size()) + " weights");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (weights_[i].sign() < 0) throw InputError("negative weight on atom '" + atoms_[i] + "'");
    if (!index_.emplace(atoms_[i], i).second) throw InputError("duplicate atom '" + atoms_[i] + "'");
    total_mass_ += weights_[i];
  }
}

SpacePtr MeasureSpace::make(std::vector<Scalar> weights, std::optional<std::string> truncation_of) {
  std::vector<std::string> ids;
  ids.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) ids.push_back("w" + std::to_string(i));
  return std::make_shared<const MeasureSpace>(std::move(ids), std::move(weights), std::move(truncation_of));
}

std::size_t MeasureSpace::index_of(const std::string& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) throw InputError("unknown atom '" + atom + "'");
  return it->second;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

AtomSet AtomSet::of(const MeasureSpace& space, const std::vector<std::string>& ids) {
  AtomSet s(space.size());
  for (const auto& id : ids) s.insert(space.index_of(id));
  return s;
}

AtomSet AtomSet::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw InputError("mask sets are limited to 64 atoms");
  AtomSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

AtomSet AtomSet::all(std::size_t n) {
  AtomSet s(n);
  std::fill(s.members_.begin(), s.members_.end(), true);
  return s;
}

bool AtomSet::empty() const { return std::none_of(members_.begin(), members_.end(), [](bool b) { return b; }); }

std::size_t AtomSet::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::uint64_t AtomSet::mask() const {
  if (members_.size() > 64) throw InputError("mask sets are limited to 64 atoms");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

ExtReal measure(const MeasureSpace& space, const AtomSet& s) {
  if (s.universe_size() != space.size()) throw InputError("atom set does not belong to this space");
  Scalar total;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (s.contains(i)) total += space.weight(i);
  }
  return ExtReal(total);
}

bool is_null(const MeasureSpace& space, const AtomSet& s) { return measure(space, s).sign() == 0; }

}  // namespace interlab
