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

#include "cli.h"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wfst/wfst.h"

namespace wfst::cli {
namespace {

// Raised for problems with the invocation itself (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string out_path;
  double delta = kDelta;
  bool stdin_used = false;
};

bool IsStdin(const std::string& path) { return path.empty() || path == "-"; }

std::string ReadInput(Context& ctx, const std::string& path) {
  std::ostringstream buffer;
  if (IsStdin(path)) {
    if (ctx.stdin_used) {
      throw UsageError("standard input can only be read once");
    }
    ctx.stdin_used = true;
    buffer << ctx.in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

AnyFst Load(Context& ctx, const std::string& path) {
  const std::string text = ReadInput(ctx, path);
  try {
    return ParseAnyText(text);
  } catch (const FstError& e) {
    throw FstError(e.code(),
                   (IsStdin(path) ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void Emit(Context& ctx, const std::string& text) {
  if (ctx.out_path.empty() || ctx.out_path == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(ctx.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + ctx.out_path + "'");
  file << text;
}

ShortestDistanceOptions DistanceOptions(const Context& ctx) {
  ShortestDistanceOptions options;
  options.delta = ctx.delta;
  return options;
}

template <Semiring S>
std::string PathLine(const S& sr, const Path<WeightOf<S>>& path) {
  return LabelsToDisplay(path.input) + '\t' + LabelsToDisplay(path.output) +
         '\t' + sr.ToString(path.weight) + '\n';
}

AnyFst MaybeLift(const AnyFst& fst, const std::string& semiring,
                 const std::string& cast) {
  if (semiring.empty()) return fst;
  return LiftTo(fst, ParseSemiringKind(semiring), ParseCastMode(cast));
}

std::vector<TrainingPair> ReadPairs(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open pairs file '" + path + "'");
  std::vector<TrainingPair> pairs;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const std::string input = line.substr(0, tab);
    const std::string output = tab == std::string::npos ? input : line.substr(tab + 1);
    pairs.emplace_back(LabelsFromUtf8(input), LabelsFromUtf8(output));
  }
  return pairs;
}

CLI::IsMember SemiringCheck() {
  const auto& names = SemiringNames();
  return CLI::IsMember(std::vector<std::string>(names.begin(), names.end()));
}

using Handler = std::function<void()>;

class Commands {
 public:
  Commands(CLI::App& app, Context& ctx) : app_(app), ctx_(ctx) {}

  CLI::App* Add(const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app_.add_subcommand(name, help);
    handlers_.emplace(sub, std::move(handler));
    return sub;
  }

  // A subcommand taking one machine and printing a transformed machine.
  template <class Fn>
  CLI::App* AddUnary(const std::string& name, const std::string& help, Fn fn) {
    auto file = std::make_shared<std::string>("-");
    CLI::App* sub = Add(name, help, [this, file, fn] {
      const AnyFst input = Load(ctx_, *file);
      Emit(ctx_, RenderAnyText(input.Visit([&](const auto& f) { return AnyFst(fn(f)); })));
    });
    sub->add_option("file", *file, "input machine ('-' for stdin)");
    return sub;
  }

  template <class Fn>
  CLI::App* AddBinary(const std::string& name, const std::string& help, Fn fn) {
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    CLI::App* sub = Add(name, help, [this, a, b, fn] {
      const AnyFst x = Load(ctx_, *a);
      const AnyFst y = Load(ctx_, *b);
      Emit(ctx_, RenderAnyText(fn(x, y)));
    });
    sub->add_option("first", *a, "first machine")->required();
    sub->add_option("second", *b, "second machine ('-' for stdin)")->required();
    return sub;
  }

  Handler* Selected() {
    for (auto& [sub, handler] : handlers_) {
      if (sub->parsed()) return &handler;
    }
    return nullptr;
  }

  std::string current() const {
    for (const auto& [sub, handler] : handlers_) {
      if (sub->parsed()) return sub->get_name();
    }
    return "";
  }

 private:
  CLI::App& app_;
  Context& ctx_;
  std::map<CLI::App*, Handler> handlers_;
};

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err, {}, kDelta, false};
  CLI::App app{"Weighted finite-state transducer toolkit", "wfst"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--out", ctx.out_path, "output file (default stdout)");
  app.add_option("--delta", ctx.delta, "approximate-equality tolerance")
      ->check(CLI::PositiveNumber);

  Commands commands(app, ctx);

  std::string compile_file, compile_string, compile_semiring;
  {
    CLI::App* sub = commands.Add("compile", "build an acceptor or read a text file", [&] {
      AnyFst result = EmptyFst(SemiringKind::kBoolean);
      if (!compile_string.empty() || compile_file.empty()) {
        if (!compile_file.empty()) {
          throw UsageError("compile takes either --string or a file, not both");
        }
        const SemiringKind kind = compile_semiring.empty()
                                      ? SemiringKind::kBoolean
                                      : ParseSemiringKind(compile_semiring);
        result = AnyFromSequence(compile_string, kind);
      } else {
        result = MaybeLift(Load(ctx, compile_file), compile_semiring, "copy");
      }
      Emit(ctx, RenderAnyText(result));
    });
    sub->add_option("file", compile_file, "text machine to validate");
    sub->add_option("-s,--string", compile_string, "string to compile into an acceptor");
    sub->add_option("--semiring", compile_semiring, "boolean, real, min, max, tropical, featurized or diff")
        ->check(SemiringCheck());
  }

  std::string print_file = "-";
  commands.Add("print", "parse and re-emit a machine", [&] {
    Emit(ctx, RenderAnyText(Load(ctx, print_file)));
  })->add_option("file", print_file, "input machine");

  std::string draw_file = "-", draw_format = "dot";
  {
    CLI::App* sub = commands.Add("draw", "emit a DOT or HTML diagram", [&] {
      const AnyFst fst = Load(ctx, draw_file);
      Emit(ctx, fst.Visit([&](const auto& f) {
        return draw_format == "html" ? RenderHtml(f) : RenderDot(f);
      }));
    });
    sub->add_option("file", draw_file, "input machine");
    sub->add_option("--format", draw_format, "dot or html")
        ->check(CLI::IsMember({"dot", "html"}));
  }

  commands.AddBinary("union", "union of two machines",
                     [](const AnyFst& a, const AnyFst& b) { return Union(a, b); });
  commands.AddBinary("concat", "concatenation of two machines",
                     [](const AnyFst& a, const AnyFst& b) { return Concat(a, b); });
  commands.AddBinary("compose", "composition of two machines",
                     [](const AnyFst& a, const AnyFst& b) { return Compose(a, b); });

  commands.AddUnary("closure", "Kleene closure", [](const auto& f) { return Closure(f); });
  auto side = std::make_shared<std::string>("output");
  commands
      .AddUnary("project", "keep one label side",
                [side](const auto& f) { return Project(f, ParseProjectSide(*side)); })
      ->add_option("--side", *side, "input or output")
      ->check(CLI::IsMember({"input", "output"}));
  commands.AddUnary("invert", "swap input and output labels",
                    [](const auto& f) { return Invert(f); });
  commands.AddUnary("rmepsilon", "remove epsilon arcs", [&ctx](const auto& f) {
    return RemoveEpsilon(f, DistanceOptions(ctx));
  });
  commands.AddUnary("determinize", "weighted subset construction", [&ctx](const auto& f) {
    DeterminizeOptions options;
    options.delta = ctx.delta;
    return Determinize(f, options);
  });
  commands.AddUnary("reverse", "reverse every path", [](const auto& f) { return Reverse(f); });
  auto push_to = std::make_shared<std::string>("initial");
  commands
      .AddUnary("push", "move weight toward the initial or final states",
                [&ctx, push_to](const auto& f) {
                  return Push(f, ParsePushDirection(*push_to), DistanceOptions(ctx));
                })
      ->add_option("--to", *push_to, "initial or final")
      ->check(CLI::IsMember({"initial", "final"}));

  std::string lift_file = "-", lift_to, lift_cast = "copy";
  {
    CLI::App* sub = commands.Add("lift", "convert weights to another semiring", [&] {
      Emit(ctx, RenderAnyText(LiftTo(Load(ctx, lift_file), ParseSemiringKind(lift_to),
                                     ParseCastMode(lift_cast))));
    });
    sub->add_option("file", lift_file, "input machine");
    sub->add_option("--to", lift_to, "target semiring")->required()->check(SemiringCheck());
    sub->add_option("--cast", lift_cast, "copy, neglog or log")
        ->check(CLI::IsMember({"copy", "neglog", "log"}));
  }

  // Queries accept --semiring to lift before running.
  std::string query_file = "-", query_semiring, query_cast = "copy";
  auto add_query = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = commands.Add(name, help, std::move(h));
    sub->add_option("file", query_file, "input machine");
    sub->add_option("--semiring", query_semiring, "lift to this semiring first")
        ->check(SemiringCheck());
    sub->add_option("--cast", query_cast, "cast used with --semiring")
        ->check(CLI::IsMember({"copy", "neglog", "log"}));
    return sub;
  };
  auto query_input = [&] { return MaybeLift(Load(ctx, query_file), query_semiring, query_cast); };

  add_query("shortestpath", "best path in an idempotent semiring", [&] {
    Emit(ctx, query_input().Visit([&](const auto& f) {
      return PathLine(f.semiring(), ShortestPath(f, DistanceOptions(ctx)).path);
    }));
  });
  bool to_final = false;
  add_query("shortestdistance", "per-state distance table", [&] {
    Emit(ctx, query_input().Visit([&](const auto& f) {
      const auto table = to_final ? ShortestDistanceToFinal(f, DistanceOptions(ctx))
                                  : ShortestDistance(f, DistanceOptions(ctx));
      std::string text;
      for (std::size_t s = 0; s < table.size(); ++s) {
        text += std::to_string(s) + '\t' + f.semiring().ToString(table[s]) + '\n';
      }
      return text;
    }));
  })->add_flag("--to-final", to_final, "distance to the final states instead");
  add_query("sumpaths", "total weight of all accepting paths", [&] {
    Emit(ctx, query_input().Visit([&](const auto& f) {
      return f.semiring().ToString(SumPaths(f, DistanceOptions(ctx))) + '\n';
    }));
  });

  std::string rand_file = "-";
  std::uint64_t rand_seed = 0;
  std::size_t rand_count = 1;
  {
    CLI::App* sub = commands.Add("randpath", "sample paths by sampling weight", [&] {
      const AnyFst fst = Load(ctx, rand_file);
      Emit(ctx, fst.Visit([&](const auto& f) {
        std::string text;
        for (std::size_t i = 0; i < rand_count; ++i) {
          RandomPathOptions options;
          options.seed = rand_seed + i;
          text += PathLine(f.semiring(), RandomPath(f, options));
        }
        return text;
      }));
    });
    sub->add_option("file", rand_file, "input machine");
    sub->add_option("--seed", rand_seed, "random seed");
    sub->add_option("--count", rand_count, "number of samples (seeds seed..seed+count-1)");
  }

  std::string enum_file = "-";
  std::size_t enum_max = 10000;
  {
    CLI::App* sub = commands.Add("enumerate", "list accepting paths", [&] {
      const AnyFst fst = Load(ctx, enum_file);
      Emit(ctx, fst.Visit([&](const auto& f) {
        EnumerateOptions options;
        options.max_paths = enum_max;
        const auto list = EnumeratePaths(f, options);
        if (list.truncated) {
          ctx.err << "wfst enumerate: output truncated at " << list.paths.size()
                  << " paths\n";
        }
        std::string text;
        for (const auto& p : list.paths) text += PathLine(f.semiring(), p);
        return text;
      }));
    });
    sub->add_option("file", enum_file, "input machine");
    sub->add_option("--max", enum_max, "maximum number of paths");
  }

  std::string train_file = "-", train_pairs;
  TrainOptions train_options;
  {
    CLI::App* sub = commands.Add("train", "fit diff-semiring weights to observed pairs", [&] {
      const std::vector<TrainingPair> pairs = ReadPairs(train_pairs);
      const AnyFst fst = Load(ctx, train_file);
      const auto* model = fst.As<DiffSemiring>();
      if (model == nullptr) {
        throw SemiringMismatchError("train needs a diff machine, got " +
                                    std::string(fst.semiring_name()));
      }
      train_options.distance = DistanceOptions(ctx);
      const TrainResult result = Train(*model, pairs, train_options);
      for (std::size_t i = 0; i < result.losses.size(); ++i) {
        ctx.err << "step " << i << "\tloss " << detail::FormatDouble(result.losses[i]) << '\n';
      }
      Emit(ctx, RenderText(result.model));
    });
    sub->add_option("file", train_file, "diff-semiring machine");
    sub->add_option("--pairs", train_pairs, "file of input<TAB>output lines")->required();
    sub->add_option("--steps", train_options.steps, "gradient steps");
    sub->add_option("--rate", train_options.rate, "learning rate");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = commands.current();
  try {
    Handler* handler = commands.Selected();
    if (handler == nullptr) throw UsageError("no subcommand given");
    (*handler)();
  } catch (const UsageError& e) {
    err << "wfst " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const FstError& e) {
    err << "wfst " << name << ": " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "wfst " << name << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace wfst::cli
