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

#include "wfst/featurized.h"

#include <algorithm>
#include <cstdlib>

#include "wfst/semirings.h"

namespace wfst {

FeaturizedWeight::FeaturizedWeight(FeatureCounts counts)
    : counts_(std::move(counts)) {
  std::erase_if(counts_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [name, count] : counts_) {
    if (!IsValidFeatureName(name)) {
      throw InvalidWeightError("invalid feature name '" + name + "'");
    }
  }
  hash_ = HashKeys(counts_);
}

FeaturizedWeight FeaturizedWeight::ZeroSentinel() {
  FeaturizedWeight w;
  w.zero_ = true;
  w.hash_ = ~std::size_t{0};
  return w;
}

std::uint64_t FeaturizedWeight::count(std::string_view feature) const {
  const auto it = counts_.find(feature);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t FeaturizedWeight::HashKeys(const FeatureCounts& counts) {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& kv : counts) {
    h ^= std::hash<std::string>{}(kv.first) + 0x9e3779b97f4a7c15ull +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::shared_ptr<FeatureWeights> GlobalFeatureWeights() {
  static const auto table = std::make_shared<FeatureWeights>();
  return table;
}

bool IsValidFeatureName(std::string_view name) {
  if (name.empty() || name == "zero") return false;
  for (const char c : name) {
    if (c == ':' || c == ',' || c == '{' || c == '}' || c == '=' ||
        static_cast<unsigned char>(c) <= 0x20) {
      return false;
    }
  }
  return true;
}

FeaturizedSemiring::FeaturizedSemiring() : table_(GlobalFeatureWeights()) {}

FeaturizedSemiring::FeaturizedSemiring(
    std::shared_ptr<const FeatureWeights> table)
    : table_(table ? std::move(table) : GlobalFeatureWeights()) {}

FeaturizedWeight FeaturizedSemiring::Plus(const Weight& a,
                                          const Weight& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FeatureCounts out = a.counts();
  for (const auto& [name, count] : b.counts()) {
    auto& slot = out[name];
    slot = std::max(slot, count);
  }
  return Weight(std::move(out));
}

FeaturizedWeight FeaturizedSemiring::Times(const Weight& a,
                                           const Weight& b) const {
  if (a.is_zero() || b.is_zero()) return Zero();
  FeatureCounts out = a.counts();
  for (const auto& [name, count] : b.counts()) out[name] += count;
  return Weight(std::move(out));
}

FeaturizedWeight FeaturizedSemiring::Divide(const Weight& a,
                                            const Weight& b) const {
  if (b.is_zero()) throw DomainError("featurized division by zero");
  if (a.is_zero()) return Zero();
  FeatureCounts out = a.counts();
  for (const auto& [name, count] : b.counts()) {
    const auto it = out.find(name);
    if (it == out.end() || it->second < count) {
      throw DomainError("featurized division makes count of '" + name +
                        "' negative");
    }
    it->second -= count;
  }
  return Weight(std::move(out));
}

bool FeaturizedSemiring::ApproxEqual(const Weight& a, const Weight& b,
                                     double delta) const {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  double distance = 0.0;
  auto ia = a.counts().begin();
  auto ib = b.counts().begin();
  while (ia != a.counts().end() || ib != b.counts().end()) {
    if (ib == b.counts().end() ||
        (ia != a.counts().end() && ia->first < ib->first)) {
      distance += static_cast<double>(ia->second);
      ++ia;
    } else if (ia == a.counts().end() || ib->first < ia->first) {
      distance += static_cast<double>(ib->second);
      ++ib;
    } else {
      distance += std::abs(static_cast<double>(ia->second) -
                           static_cast<double>(ib->second));
      ++ia;
      ++ib;
    }
  }
  return distance <= delta;
}

double FeaturizedSemiring::SamplingWeight(const Weight& a) const {
  if (a.is_zero()) return 0.0;
  double total = 0.0;
  for (const auto& [name, count] : a.counts()) {
    const auto it = table_->find(name);
    if (it != table_->end()) total += it->second * static_cast<double>(count);
  }
  return total;
}

std::string FeaturizedSemiring::ToString(const Weight& a) const {
  if (a.is_zero()) return "zero";
  std::string out = "{";
  bool first = true;
  for (const auto& [name, count] : a.counts()) {
    if (!first) out.push_back(',');
    first = false;
    out += name;
    out.push_back(':');
    out += std::to_string(count);
  }
  out.push_back('}');
  return out;
}

FeaturizedWeight FeaturizedSemiring::Parse(std::string_view text) const {
  if (text == "zero") return Zero();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw InvalidWeightError("featurized weight must look like {name:count,...}"
                             ", got '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  FeatureCounts counts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.rfind(':');
    if (colon == std::string_view::npos) {
      throw InvalidWeightError("feature entry '" + std::string(item) +
                               "' lacks ':count'");
    }
    const std::string name(item.substr(0, colon));
    const double count = detail::ParseDouble(item.substr(colon + 1));
    if (count < 0 || count != static_cast<double>(
                                  static_cast<std::uint64_t>(count))) {
      throw InvalidWeightError("feature count must be a nonnegative integer");
    }
    if (!IsValidFeatureName(name) || counts.contains(name)) {
      throw InvalidWeightError("invalid or repeated feature name '" + name +
                               "'");
    }
    counts.emplace(name, static_cast<std::uint64_t>(count));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Weight(std::move(counts));
}

FeaturizedWeight FeaturizedSemiring::Random(std::mt19937_64& rng) const {
  const auto pick = rng() % 10;
  if (pick == 0) return Zero();
  if (pick == 1) return One();
  FeatureCounts counts;
  for (int f = 0; f < 4; ++f) {
    const auto c = rng() % 4;
    if (c) counts.emplace("f" + std::to_string(f), c);
  }
  return Weight(std::move(counts));
}

}  // namespace wfst
