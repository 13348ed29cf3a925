#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/scalar.hpp"

namespace interlab {

/// A finite measure space: an ordered list of atoms with nonnegative finite
/// weights. F is the power set of the atoms. Zero-weight atoms model the null
/// sets, so every space is sigma-finite.
class MeasureSpace {
 public:
  /// Throws InputError on duplicate ids, an empty atom list, size mismatch or
  /// a negative weight.
  MeasureSpace(std::vector<std::string> atoms, std::vector<Scalar> weights,
               std::optional<std::string> truncation_of = std::nullopt);

  /// n atoms "w0".."w{n-1}" with the given weights.
  static std::shared_ptr<const MeasureSpace> make(std::vector<Scalar> weights,
                                                  std::optional<std::string> truncation_of = std::nullopt);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Scalar>& weights() const { return weights_; }
  const std::string& atom(std::size_t i) const { return atoms_.at(i); }
  const Scalar& weight(std::size_t i) const { return weights_.at(i); }
  bool is_null_atom(std::size_t i) const { return weights_.at(i).is_zero(); }
  const std::optional<std::string>& truncation_of() const { return truncation_of_; }
  const Scalar& total_mass() const { return total_mass_; }
  bool is_probability() const { return total_mass_ == Scalar(1); }

  /// Throws InputError for an unknown identifier.
  std::size_t index_of(const std::string& atom) const;

  /// Same atoms, same order, same weights.
  friend bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
    return a.atoms_ == b.atoms_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> atoms_;
  std::vector<Scalar> weights_;
  std::optional<std::string> truncation_of_;
  std::unordered_map<std::string, std::size_t> index_;
  Scalar total_mass_;
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

/// True when both pointers denote the same space (identity or structural).
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// A subset of a space's atoms, stored as a membership vector.
class AtomSet {
 public:
  explicit AtomSet(std::size_t n) : members_(n, false) {}
  /// Throws InputError when an identifier is not an atom of `space`.
  static AtomSet of(const MeasureSpace& space, const std::vector<std::string>& ids);
  /// Bit i of `mask` selects atom i. Requires n <= 64.
  static AtomSet from_mask(std::size_t n, std::uint64_t mask);
  static AtomSet all(std::size_t n);

  std::size_t universe_size() const { return members_.size(); }
  bool contains(std::size_t i) const { return members_.at(i); }
  void insert(std::size_t i) { members_.at(i) = true; }
  void erase(std::size_t i) { members_.at(i) = false; }
  bool empty() const;
  std::size_t count() const;
  /// Requires universe_size() <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  std::vector<bool> members_;
};

/// Sum of the weights of the atoms in `s`. Throws InputError if `s` is
/// sized for a different space.
ExtReal measure(const MeasureSpace& space, const AtomSet& s);
bool is_null(const MeasureSpace& space, const AtomSet& s);

}  // namespace interlab
