#ifndef ASSOSYM_DECOMPOSITION_HPP
#define ASSOSYM_DECOMPOSITION_HPP

#include <map>
#include <optional>
#include <string>

#include "assosym/bigint.hpp"
#include "assosym/errors.hpp"
#include "assosym/partitions.hpp"

namespace assosym {

enum class Group { symmetric, alternating, general_linear };

/// Formal tag of the two halves of a split alternating-group irreducible.
enum class SplitTag { none, plus, minus };

inline std::string group_code(Group g) {
  switch (g) {
  case Group::symmetric:
    return "S";
  case Group::alternating:
    return "A";
  case Group::general_linear:
    return "GL";
  }
  return "?";
}

inline Group parse_group(const std::string& s) {
  if (s == "S")
    return Group::symmetric;
  if (s == "A")
    return Group::alternating;
  if (s == "GL")
    return Group::general_linear;
  throw ArgumentError("unknown group '" + s + "' (expected S, A or GL)");
}

struct Label {
  Partition shape;
  SplitTag tag = SplitTag::none;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Canonical label order: shapes in reverse lexicographic order, then
/// untagged, plus, minus.
struct LabelOrder {
  bool operator()(const Label& a, const Label& b) const {
    if (a.shape != b.shape)
      return a.shape > b.shape;
    return static_cast<int>(a.tag) < static_cast<int>(b.tag);
  }
};

/// Irreducible decomposition: label -> multiplicity, zero terms omitted.
///
/// For the general linear group (and for the alternating-group Weyl variant)
/// `dim` holds the dimension of the underlying vector space.
class Decomposition {
public:
  using Terms = std::map<Label, BigCount, LabelOrder>;

  Decomposition(int n, Group group, std::optional<int> dim = std::nullopt)
      : n_(n), group_(group), dim_(dim) {}

  int n() const { return n_; }
  Group group() const { return group_; }
  std::optional<int> dim() const { return dim_; }
  const Terms& terms() const { return terms_; }

  /// Adds mult to the label's multiplicity; zero contributions are dropped.
  void add(const Label& label, const BigCount& mult) {
    if (label.shape.size() != n_)
      throw DegreeMismatchError("label " + label.shape.str() +
                                " is not a partition of " + std::to_string(n_));
    if (label.tag != SplitTag::none &&
        (group_ != Group::alternating || !is_self_conjugate(label.shape)))
      throw ArgumentError("split tags are only valid on self-conjugate "
                          "alternating-group labels");
    if (mult < 0)
      throw ArgumentError("multiplicities must be non-negative");
    if (mult == 0)
      return;
    terms_[label] += mult;
  }

  void add(const Partition& shape, const BigCount& mult) {
    add(Label{shape, SplitTag::none}, mult);
  }

  /// Multiplicity of a label, 0 if absent.
  BigCount at(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? BigCount(0) : it->second;
  }

  BigCount at(const Partition& shape) const {
    return at(Label{shape, SplitTag::none});
  }

  /// Sum of all multiplicities.
  BigCount total_multiplicity() const {
    BigCount s = 0;
    for (const auto& [label, mult] : terms_)
      s += mult;
    return s;
  }

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.n_ == b.n_ && a.group_ == b.group_ && a.dim_ == b.dim_ &&
           a.terms_ == b.terms_;
  }

private:
  int n_;
  Group group_;
  std::optional<int> dim_;
  Terms terms_;
};

} // namespace assosym

#endif // ASSOSYM_DECOMPOSITION_HPP
