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

#include "wfst/any_fst.h"

#include <cmath>
#include <type_traits>

#include "wfst/compose.h"
#include "wfst/rational.h"
#include "wfst/text_io.h"
#include "wfst/transform.h"

namespace wfst {
namespace {

template <class F>
AnyFst WithKind(SemiringKind kind, F&& f) {
  switch (kind) {
    case SemiringKind::kBoolean: return f(BooleanSemiring{});
    case SemiringKind::kReal: return f(RealSemiring{});
    case SemiringKind::kMin: return f(MinSemiring{});
    case SemiringKind::kMax: return f(MaxSemiring{});
    case SemiringKind::kTropical: return f(TropicalSemiring{});
    case SemiringKind::kFeaturized: return f(FeaturizedSemiring{});
    case SemiringKind::kDiff: return f(DiffSemiring{});
  }
  throw InvalidArgumentError("unknown semiring kind");
}

template <class X>
using SemiringOf = std::decay_t<decltype(std::declval<const X&>().semiring())>;

template <class S>
constexpr bool kIsBoolean = std::is_same_v<S, BooleanSemiring>;

template <class S>
constexpr bool kIsScalar =
    std::is_same_v<S, RealSemiring> || std::is_same_v<S, MinSemiring> ||
    std::is_same_v<S, MaxSemiring> || std::is_same_v<S, TropicalSemiring> ||
    std::is_same_v<S, DiffSemiring>;

template <Semiring S>
double ScalarValue(const WeightOf<S>& w) {
  if constexpr (std::is_same_v<S, DiffSemiring>) {
    return w.value;
  } else {
    return w;
  }
}

template <Semiring T>
WeightOf<T> FromScalar(const T& target, double v) {
  if constexpr (std::is_same_v<T, DiffSemiring>) {
    return Parameter(target.tape(), v);
  } else {
    return v;
  }
}

// Moves `fst` onto another instance of the same semiring (a different tape
// or feature table) by writing it out and reading it back.
template <Semiring S>
Fst<S> Rehome(const Fst<S>& fst, const S& target) {
  if (fst.semiring() == target) return fst;
  return ParseText(RenderText(fst), target);
}

template <class Op>
AnyFst Binary(const AnyFst& a, const AnyFst& b, std::string_view name, Op op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> AnyFst {
        using SX = SemiringOf<decltype(x)>;
        using SY = SemiringOf<decltype(y)>;
        if constexpr (std::is_same_v<SX, SY>) {
          return op(x, Rehome(y, x.semiring()));
        } else if constexpr (kIsBoolean<SX>) {
          return op(CastFromBoolean(x, y.semiring()), y);
        } else if constexpr (kIsBoolean<SY>) {
          return op(x, CastFromBoolean(y, x.semiring()));
        } else {
          throw SemiringMismatchError(
              std::string(name) + ": cannot combine " +
              std::string(x.descriptor().name) + " and " +
              std::string(y.descriptor().name) +
              " machines; lift one of them first");
        }
      },
      a.variant(), b.variant());
}

}  // namespace

const std::vector<std::string_view>& SemiringNames() {
  static const std::vector<std::string_view> names = {
      "boolean", "real", "min", "max", "tropical", "featurized", "diff"};
  return names;
}

std::string_view SemiringName(SemiringKind kind) {
  return SemiringNames().at(static_cast<std::size_t>(kind));
}

SemiringKind ParseSemiringKind(std::string_view name) {
  const auto& names = SemiringNames();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<SemiringKind>(i);
  }
  std::string message = "unknown semiring '" + std::string(name) + "'; supported:";
  for (std::size_t i = 0; i < names.size(); ++i) {
    message += (i ? ", " : " ");
    message += names[i];
  }
  throw InvalidArgumentError(message);
}

AnyFst EmptyFst(SemiringKind kind) {
  return WithKind(kind, [](auto sr) { return AnyFst(Fst<decltype(sr)>(sr)); });
}

AnyFst ParseAnyText(std::string_view text) {
  SemiringKind kind;
  try {
    kind = ParseSemiringKind(PeekSemiringName(text));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(1, e.what());
  }
  return WithKind(kind, [&](auto sr) { return AnyFst(ParseText(text, sr)); });
}

std::string RenderAnyText(const AnyFst& fst) {
  return fst.Visit([](const auto& f) { return RenderText(f); });
}

AnyFst AnyFromSequence(std::string_view utf8, SemiringKind kind) {
  return WithKind(kind, [&](auto sr) {
    return AnyFst(FromSequence<decltype(sr)>(utf8, sr));
  });
}

AnyFst Union(const AnyFst& a, const AnyFst& b) {
  return Binary(a, b, "union", [](const auto& x, const auto& y) {
    return AnyFst(Union(x, y));
  });
}

AnyFst Concat(const AnyFst& a, const AnyFst& b) {
  return Binary(a, b, "concat", [](const auto& x, const auto& y) {
    return AnyFst(Concat(x, y));
  });
}

AnyFst Compose(const AnyFst& a, const AnyFst& b) {
  return Binary(a, b, "compose", [](const auto& x, const auto& y) {
    return AnyFst(Compose(x, y));
  });
}

CastMode ParseCastMode(std::string_view name) {
  if (name == "copy") return CastMode::kCopy;
  if (name == "neglog") return CastMode::kNegLog;
  if (name == "log") return CastMode::kLog;
  throw InvalidArgumentError("cast must be 'copy', 'neglog' or 'log', got '" +
                             std::string(name) + "'");
}

AnyFst LiftTo(const AnyFst& fst, SemiringKind target, CastMode mode) {
  auto map = [mode](double v) {
    switch (mode) {
      case CastMode::kCopy: return v;
      case CastMode::kNegLog: return -std::log(v);
      case CastMode::kLog: return std::log(v);
    }
    return v;
  };
  return fst.Visit([&](const auto& src) -> AnyFst {
    using S = SemiringOf<decltype(src)>;
    const S& ssr = src.semiring();
    return WithKind(target, [&](auto tsr) -> AnyFst {
      using T = decltype(tsr);
      if constexpr (kIsBoolean<S>) {
        return AnyFst(CastFromBoolean(src, tsr));
      } else if constexpr (kIsBoolean<T>) {
        return AnyFst(Lift(src, tsr, [&](const WeightOf<S>& w) {
          return BooleanWeight(!IsZero(ssr, w));
        }));
      } else if constexpr (std::is_same_v<S, T> && !kIsScalar<S>) {
        return AnyFst(src);
      } else if constexpr (kIsScalar<S> && kIsScalar<T>) {
        if constexpr (std::is_same_v<S, T>) {
          if (mode == CastMode::kCopy && !std::is_same_v<S, DiffSemiring>) {
            return AnyFst(src);
          }
        }
        const T& tr = tsr;
        return AnyFst(Lift(src, tr, [&](const WeightOf<S>& w) {
          return FromScalar(tr, map(ScalarValue<S>(w)));
        }));
      } else {
        throw UnsupportedOperationError(
            "lift: no cast from " + std::string(ssr.descriptor().name) +
            " to " + std::string(tsr.descriptor().name));
      }
    });
  });
}

}  // namespace wfst
