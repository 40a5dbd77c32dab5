#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgs {

// Carrier elements are 0..n-1; 0 is always the additive identity.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxOrder = 255;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed tables or out-of-range arguments.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration limit would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Induced operation on a quotient is not well defined.
class IllDefinedQuotient : public Error {
 public:
  IllDefinedQuotient(std::string what, Element first, Element second)
      : Error(std::move(what)), first_(first), second_(second) {}
  Element first() const noexcept { return first_; }
  Element second() const noexcept { return second_; }

 private:
  Element first_;
  Element second_;
};

// Subset of the carrier (n <= 64) stored as a bitmask.
class IdealSet {
 public:
  IdealSet() = default;
  explicit IdealSet(std::uint64_t bits) : bits_(bits) {}

  static IdealSet from_elements(const std::vector<Element>& elements) {
    std::uint64_t bits = 0;
    for (auto e : elements) bits |= std::uint64_t{1} << e;
    return IdealSet(bits);
  }
  static IdealSet full(std::size_t n) {
    return IdealSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static IdealSet zero() { return IdealSet(1); }

  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(std::size_t e) const noexcept { return (bits_ >> e) & 1U; }
  void insert(std::size_t e) noexcept { bits_ |= std::uint64_t{1} << e; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool subset_of(IdealSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::size_t e = 0; e < 64; ++e)
      if (contains(e)) out.push_back(static_cast<Element>(e));
    return out;
  }

  friend IdealSet operator&(IdealSet a, IdealSet b) { return IdealSet(a.bits_ & b.bits_); }
  friend IdealSet operator|(IdealSet a, IdealSet b) { return IdealSet(a.bits_ | b.bits_); }
  friend bool operator==(IdealSet a, IdealSet b) = default;
  friend auto operator<=>(IdealSet a, IdealSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Partition of the carrier; rep[a] is the least element of a's block.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<Element> rep);

  static Congruence diagonal(std::size_t n);
  static Congruence full(std::size_t n);
  // Smallest equivalence relation containing the given pairs.
  static Congruence from_pairs(std::size_t n,
                               const std::vector<std::pair<Element, Element>>& pairs);
  // Blocks given by an arbitrary labeling (equal labels share a block).
  static Congruence from_labels(const std::vector<std::size_t>& labels);

  std::size_t order() const noexcept { return rep_.size(); }
  const std::vector<Element>& representatives() const noexcept { return rep_; }
  Element rep(std::size_t a) const { return rep_[a]; }
  bool related(std::size_t a, std::size_t b) const { return rep_[a] == rep_[b]; }
  std::size_t num_classes() const;
  bool is_diagonal() const { return num_classes() == rep_.size(); }
  bool is_full() const { return num_classes() <= 1; }
  // True when every block of *this lies inside a block of other.
  bool refines(const Congruence& other) const;

  friend Congruence meet(const Congruence& a, const Congruence& b);
  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Element> rep_;
};

Congruence meet(const Congruence& a, const Congruence& b);

}  // namespace tgs
