// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROID_ELEMENT_SET_H_
#define MATROID_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace matroid {

// Elements of a ground set are dense 0-based ids.
using Element = std::uint32_t;

// A finite set of elements kept in canonical ascending order with no
// duplicates. Sets compare by size first, then lexicographically, which is
// the order every list-valued result in this library is reported in.
class ElementSet {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<Element> members);
  // Sorts and removes duplicates.
  explicit ElementSet(std::vector<Element> members);

  // Bit i of `mask` selects element i.
  static ElementSet from_mask(std::uint64_t mask);
  // {0, 1, ..., n-1}
  static ElementSet range(std::size_t n);

  // Requires every member < 64.
  std::uint64_t mask() const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Element operator[](std::size_t i) const { return members_[i]; }
  Element back() const { return members_.back(); }
  const std::vector<Element>& members() const { return members_; }

  bool contains(Element e) const;
  bool is_subset_of(const ElementSet& other) const;

  ElementSet with(Element e) const;
  ElementSet without(Element e) const;

  // Rendered as "{0,1,2}"; the empty set is "{}".
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

 private:
  std::vector<Element> members_;
};

ElementSet operator|(const ElementSet& a, const ElementSet& b);
ElementSet operator&(const ElementSet& a, const ElementSet& b);
ElementSet operator-(const ElementSet& a, const ElementSet& b);

// Parses a subset literal "{a,b,c}". Ids must be strictly ascending;
// throws InputError otherwise.
ElementSet parse_subset(const std::string& text);

}  // namespace matroid

template <>
struct std::hash<matroid::ElementSet> {
  std::size_t operator()(const matroid::ElementSet& s) const noexcept;
};

#endif  // MATROID_ELEMENT_SET_H_
