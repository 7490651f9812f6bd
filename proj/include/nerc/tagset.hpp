#ifndef NERC_TAGSET_HPP
#define NERC_TAGSET_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nerc/errors.hpp"

namespace nerc {

/// One row of the tag table. `entity` is the display name of the entity
/// group and is empty on continuation rows (multi-word B/I/E variants),
/// mirroring how the table is printed.
struct TagEntry {
  std::string entity;
  std::string mnemonic;
  int label = 0;
  std::string description;
};

/// Fixed bijection between tag mnemonics and integer labels. Immutable.
class TagSet {
 public:
  explicit TagSet(std::vector<TagEntry> entries) : entries_(std::move(entries)) {
    by_label_.resize(entries_.size(), -1);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const TagEntry& e = entries_[i];
      if (e.mnemonic.empty())
        throw ArgumentError("tag set: empty mnemonic");
      if (!by_mnemonic_.emplace(e.mnemonic, e.label).second)
        throw ArgumentError("tag set: duplicate mnemonic " + e.mnemonic);
      if (e.label < 0 || static_cast<std::size_t>(e.label) >= entries_.size() ||
          by_label_[static_cast<std::size_t>(e.label)] != -1)
        throw ArgumentError("tag set: labels are not a bijection onto 0.." +
                            std::to_string(entries_.size() - 1));
      by_label_[static_cast<std::size_t>(e.label)] = static_cast<int>(i);
    }
  }

  const std::vector<TagEntry>& entries() const noexcept { return entries_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }

  int label_of(std::string_view mnemonic) const {
    auto it = by_mnemonic_.find(std::string(mnemonic));
    if (it == by_mnemonic_.end())
      throw LookupError("unknown tag mnemonic: " + std::string(mnemonic));
    return it->second;
  }

  const std::string& mnemonic_of(int label) const {
    if (label < 0 || static_cast<std::size_t>(label) >= by_label_.size())
      throw LookupError("tag label out of range: " + std::to_string(label));
    return entries_[static_cast<std::size_t>(by_label_[static_cast<std::size_t>(label)])].mnemonic;
  }

  bool contains(std::string_view mnemonic) const {
    return by_mnemonic_.count(std::string(mnemonic)) != 0;
  }

  /// The 23-tag named-entity set this toolkit classifies into.
  static const TagSet& default_set() {
    static const TagSet set(std::vector<TagEntry>{
        {"Person", "NEP", 0, "Name of a person one word"},
        {"", "NEPB", 13, "Beginning name"},
        {"", "NEPI", 14, "Intermediate name"},
        {"", "NEPE", 15, "End name"},
        {"Location", "NEL", 1, "Name of a place, location one word"},
        {"", "NELB", 16, "Beginning name Loc"},
        {"", "NELI", 17, "Intermediate name Loc"},
        {"", "NELE", 18, "End name Loc"},
        {"Organization", "NEO", 2, "Name of an organization one word"},
        {"", "NEOB", 19, "Beginning name Org"},
        {"", "NEOI", 20, "Intermediate name Org"},
        {"", "NEOE", 21, "End name Org"},
        {"Designation", "NED", 3, "Name of any designation"},
        {"Term", "NETE", 4, "Name of terms, diseases"},
        {"Title-Person", "NETP", 5, "Title before the name"},
        {"Title-Object", "NETO", 6, "Name of Object"},
        {"Brand", "NEB", 7, "Brands Name"},
        {"Measure", "NEM", 8, "Any measure"},
        {"Number", "NEN", 9, "Numeric value"},
        {"Time", "NETI", 10, "date, month, year etc"},
        {"Abbreviation", "NEA", 11, "Name in short form"},
        {"Noun entity", "NE", 12, "Other than names (nouns)"},
        {"Not a NE", "NONE", 22, "Not a named entity"},
    });
    return set;
  }

 private:
  std::vector<TagEntry> entries_;
  std::unordered_map<std::string, int> by_mnemonic_;
  std::vector<int> by_label_;  // label -> entry index
};

}  // namespace nerc

#endif  // NERC_TAGSET_HPP
