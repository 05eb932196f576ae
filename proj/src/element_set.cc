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

#include "matroid/element_set.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include "matroid/errors.h"

namespace matroid {

ElementSet::ElementSet(std::initializer_list<Element> members)
    : ElementSet(std::vector<Element>(members)) {}

ElementSet::ElementSet(std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

ElementSet ElementSet::from_mask(std::uint64_t mask) {
  ElementSet s;
  s.members_.reserve(std::popcount(mask));
  while (mask != 0) {
    s.members_.push_back(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

ElementSet ElementSet::range(std::size_t n) {
  ElementSet s;
  s.members_.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.members_[i] = static_cast<Element>(i);
  return s;
}

std::uint64_t ElementSet::mask() const {
  std::uint64_t m = 0;
  for (Element e : members_) {
    assert(e < 64);
    m |= std::uint64_t{1} << e;
  }
  return m;
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

ElementSet ElementSet::with(Element e) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), e);
  if (it == s.members_.end() || *it != e) s.members_.insert(it, e);
  return s;
}

ElementSet ElementSet::without(Element e) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.members_.begin(), s.members_.end(), e);
  if (it != s.members_.end() && *it == e) s.members_.erase(it);
  return s;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members_[i]);
  }
  out += '}';
  return out;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.members_ <=> b.members_;
}

ElementSet operator|(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet operator&(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet operator-(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

ElementSet parse_subset(const std::string& text) {
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("bad subset literal \"" + text + "\": " + why);
  };
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             body.end());
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw fail("expected {a,b,...}");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<Element> ids;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      Element value = 0;
      auto [ptr, ec] =
          std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() ||
          ptr != item.data() + item.size()) {
        throw fail("\"" + item + "\" is not an element id");
      }
      if (!ids.empty() && value <= ids.back()) {
        throw fail("ids must be strictly ascending");
      }
      ids.push_back(value);
    }
    if (body.back() == ',') throw fail("trailing comma");
  }
  return ElementSet(std::move(ids));
}

void require_within_bound(const char* operation, std::size_t n,
                          std::size_t max_n) {
  if (n > max_n) {
    throw BoundExceeded(std::string(operation) + ": ground set size " +
                        std::to_string(n) + " exceeds exhaustive bound " +
                        std::to_string(max_n) + " (raise with --max-n)");
  }
}

}  // namespace matroid

std::size_t std::hash<matroid::ElementSet>::operator()(
    const matroid::ElementSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ s.size();
  for (matroid::Element e : s) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
