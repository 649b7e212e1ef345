#ifndef ASSOSYM_IO_HPP
#define ASSOSYM_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "assosym/assosym.hpp"
#include "assosym/characters.hpp"
#include "assosym/decomposition.hpp"
#include "assosym/partitions.hpp"

// Text, JSON and CSV renderings. All numbers that can exceed 64 bits are
// written as decimal strings.

namespace assosym {

using ordered_json = nlohmann::ordered_json;

inline ordered_json partition_to_json(const Partition& p) {
  ordered_json a = ordered_json::array();
  for (int part : p.parts())
    a.push_back(part);
  return a;
}

inline Partition partition_from_json(const ordered_json& j) {
  if (!j.is_array())
    throw ArgumentError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ArgumentError("partition entries must be integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

inline std::string split_symbol(SplitTag t) {
  switch (t) {
  case SplitTag::plus:
    return "+";
  case SplitTag::minus:
    return "-";
  case SplitTag::none:
    break;
  }
  return "";
}

/// Serialized form:
/// {"n":4,"group":"S","terms":[{"partition":[4],"mult":"3"},...],
///  "codimension":"29","colength":"13"}
/// Split labels carry "split":"+" or "-"; decompositions over GL(V) carry
/// "dim" and a per-term "weyl_dim". Derived totals are recomputed on output
/// and ignored on input.
inline ordered_json to_json(const Decomposition& d) {
  ordered_json j;
  j["n"] = d.n();
  j["group"] = group_code(d.group());
  if (d.dim())
    j["dim"] = *d.dim();
  ordered_json terms = ordered_json::array();
  for (const auto& [label, mult] : d.terms()) {
    ordered_json t;
    t["partition"] = partition_to_json(label.shape);
    if (label.tag != SplitTag::none)
      t["split"] = split_symbol(label.tag);
    t["mult"] = to_string(mult);
    if (d.group() == Group::general_linear)
      t["weyl_dim"] = to_string(weyl_dim(label.shape, *d.dim()));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  if (d.group() == Group::symmetric)
    j["codimension"] = to_string(specht_total_dimension(d));
  if (d.group() == Group::general_linear)
    j["total_dim"] = to_string(weyl_total_dimension(d, *d.dim()));
  j["colength"] = to_string(d.total_multiplicity());
  return j;
}

inline Decomposition decomposition_from_json(const ordered_json& j) {
  std::optional<int> dim;
  if (j.contains("dim"))
    dim = j.at("dim").get<int>();
  const Group group = parse_group(j.at("group").get<std::string>());
  if (group == Group::general_linear && !dim)
    throw ArgumentError("GL decomposition without \"dim\"");
  Decomposition d(j.at("n").get<int>(), group, dim);
  for (const auto& t : j.at("terms")) {
    Label label{partition_from_json(t.at("partition")), SplitTag::none};
    if (t.contains("split")) {
      const auto s = t.at("split").get<std::string>();
      if (s == "+")
        label.tag = SplitTag::plus;
      else if (s == "-")
        label.tag = SplitTag::minus;
      else
        throw ArgumentError("split must be \"+\" or \"-\"");
    }
    BigCount mult;
    if (mult.set_str(t.at("mult").get<std::string>(), 10) != 0)
      throw ArgumentError("mult must be a decimal string");
    d.add(label, mult);
  }
  return d;
}

/// Irreducible symbol in the notation S^{(3,1)}, S_A^{+(2,2)}, W^{(2,1)}.
inline std::string term_symbol(const Decomposition& d, const Label& label) {
  const bool weyl = d.dim().has_value();
  std::string base = weyl ? "W" : "S";
  if (d.group() == Group::alternating)
    base += "_A";
  return base + "^{" + split_symbol(label.tag) + label.shape.str() + "}";
}

/// One-line sum such as "3*S^{(4)} + 4*S^{(3,1)} + S^{(1,1,1,1)}".
inline std::string format_sum(const Decomposition& d) {
  std::string s;
  for (const auto& [label, mult] : d.terms()) {
    if (!s.empty())
      s += " + ";
    if (mult != 1)
      s += to_string(mult) + "*";
    s += term_symbol(d, label);
  }
  return s.empty() ? "0" : s;
}

inline std::string format_pretty(const Decomposition& d) {
  std::ostringstream os;
  const bool weyl = d.dim().has_value();
  os << (weyl ? "H_" : "P_") << d.n() << (weyl ? "(V)" : "") << " = "
     << format_sum(d) << "\n";
  if (weyl)
    os << "dim V = " << *d.dim() << "\n";
  const bool has_dims =
      d.group() != Group::alternating || !d.dim().has_value();
  os << "label";
  os << std::string(14, ' ') << "mult";
  if (has_dims)
    os << "  dim";
  os << "\n";
  for (const auto& [label, mult] : d.terms()) {
    std::string name = split_symbol(label.tag) + label.shape.str();
    os << name << std::string(name.size() < 19 ? 19 - name.size() : 1, ' ')
       << to_string(mult);
    if (has_dims) {
      BigCount dim;
      if (d.group() == Group::general_linear)
        dim = weyl_dim(label.shape, *d.dim());
      else if (d.group() == Group::alternating)
        dim = alternating_irreducible_dim(label);
      else
        dim = specht_dim(label.shape);
      const std::string m = to_string(mult);
      os << std::string(m.size() < 6 ? 6 - m.size() : 1, ' ') << to_string(dim);
    }
    os << "\n";
  }
  if (d.group() == Group::symmetric)
    os << "codimension " << to_string(specht_total_dimension(d)) << "\n";
  if (d.group() == Group::general_linear)
    os << "total dimension " << to_string(weyl_total_dimension(d, *d.dim()))
       << "\n";
  os << "colength " << to_string(d.total_multiplicity()) << "\n";
  return os.str();
}

/// Header "n,group,dim,partition,split,mult"; partitions are written with
/// space-separated parts.
inline std::string format_csv(const Decomposition& d) {
  std::ostringstream os;
  os << "n,group,dim,partition,split,mult\n";
  for (const auto& [label, mult] : d.terms()) {
    os << d.n() << ',' << group_code(d.group()) << ',';
    if (d.dim())
      os << *d.dim();
    os << ',';
    for (int i = 0; i < label.shape.length(); ++i)
      os << (i ? " " : "") << label.shape[static_cast<std::size_t>(i)];
    os << ',' << split_symbol(label.tag) << ',' << to_string(mult) << "\n";
  }
  return os.str();
}

/// {"n":3,"rows":[[3],[2,1],[1,1,1]],"columns":[...],"class_sizes":[...],
///  "values":[["1","1","1"],...]}
inline ordered_json to_json(const CharacterTable& t) {
  ordered_json j;
  j["n"] = t.n;
  ordered_json labels = ordered_json::array();
  ordered_json sizes = ordered_json::array();
  for (const auto& p : t.labels) {
    labels.push_back(partition_to_json(p));
    sizes.push_back(to_string(class_size(p)));
  }
  j["rows"] = labels;
  j["columns"] = labels;
  j["class_sizes"] = std::move(sizes);
  ordered_json values = ordered_json::array();
  for (const auto& row : t.values) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row)
      r.push_back(to_string(v));
    values.push_back(std::move(r));
  }
  j["values"] = std::move(values);
  return j;
}

inline ordered_json to_json(const CharacterVector& chi) {
  ordered_json j;
  j["n"] = chi.n;
  ordered_json classes = ordered_json::array();
  for (const auto& p : generate_partitions(chi.n))
    classes.push_back(partition_to_json(p));
  j["classes"] = std::move(classes);
  ordered_json values = ordered_json::array();
  for (const auto& v : chi.values)
    values.push_back(to_string(v));
  j["values"] = std::move(values);
  return j;
}

} // namespace assosym

#endif // ASSOSYM_IO_HPP
