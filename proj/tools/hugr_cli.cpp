// Copyright 2026 The hugr-cpp Authors
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

// hugr: validate, optimize, structure, run and roundtrip serialized graphs.
//
// Exit status: 0 ok, 1 diagnostics or a failed check, 2 usage or IO error.

#include <charconv>
#include <complex>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hugr/extension.hpp"
#include "hugr/interp.hpp"
#include "hugr/rewrite.hpp"
#include "hugr/serial.hpp"
#include "hugr/structure.hpp"
#include "hugr/validate.hpp"

namespace {

using namespace hugr;

constexpr int kOk = 0;
constexpr int kDiagnostics = 1;
constexpr int kUsage = 2;

/// Failure that maps straight to an exit status.
struct Exit {
  int code;
  std::string message;
};

Registry load_registry(const std::vector<std::string>& ext_files) {
  Registry r = stdlib();
  for (const std::string& path : ext_files) {
    try {
      r.add(decode_extension(read_file(path)));
    } catch (const std::exception& e) {
      throw Exit{kUsage, path + ": " + e.what()};
    }
  }
  return r;
}

std::string load_text(const std::string& path) {
  try {
    return read_file(path);
  } catch (const std::exception& e) {
    throw Exit{kUsage, e.what()};
  }
}

Hugr load_graph(const std::string& path, const std::string& text) {
  try {
    Decoded d = decode_document(text);
    for (const std::string& w : d.warnings) std::cerr << path << ": warning: " << w << "\n";
    return std::move(d.hugr);
  } catch (const std::exception& e) {
    throw Exit{kUsage, path + ": " + e.what()};
  }
}

void store(const std::string& out, std::string_view text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  try {
    write_file(out, text);
  } catch (const std::exception& e) {
    throw Exit{kUsage, e.what()};
  }
}

/// Prints the diagnostics and reports whether there were any.
bool report(const std::vector<Diagnostic>& diags) {
  for (const Diagnostic& d : diags) std::cout << render(d) << "\n";
  return !diags.empty();
}

// ------------------------------------------------------------ subcommands

struct Common {
  std::string file;
  std::vector<std::string> ext;
};

int cmd_validate(const Common& c) {
  const Registry r = load_registry(c.ext);
  const Hugr h = load_graph(c.file, load_text(c.file));
  return report(validate(h, r)) ? kDiagnostics : kOk;
}

int cmd_optimize(const Common& c, const std::vector<std::string>& rule_files, std::size_t budget,
                 const std::string& out) {
  const Registry r = load_registry(c.ext);
  Hugr h = load_graph(c.file, load_text(c.file));
  std::vector<RewriteRule> rules;
  for (const std::string& path : rule_files) {
    try {
      rules.push_back(decode_rule(read_file(path)));
    } catch (const std::exception& e) {
      throw Exit{kUsage, path + ": " + e.what()};
    }
  }
  if (report(validate(h, r))) return kDiagnostics;
  SaturateResult res;
  try {
    res = saturate(rules, h, budget, r);
  } catch (const RewriteError& e) {
    throw Exit{kDiagnostics, e.what()};
  }
  for (const AppliedRewrite& a : res.applied) std::cout << a.rule << " " << to_string(a.anchor) << "\n";
  if (res.budget_exhausted) std::cerr << "budget of " << budget << " exhausted\n";
  if (report(validate(h, r))) return kDiagnostics;
  if (!out.empty()) store(out, encode(h));
  return kOk;
}

int cmd_structure(const Common& c, const std::string& out) {
  const Registry r = load_registry(c.ext);
  const std::string text = load_text(c.file);
  Hugr h = load_graph(c.file, text);
  StructureReport rep;
  try {
    rep = structure_all(h, r);
  } catch (const StructureError& e) {
    throw Exit{kDiagnostics, e.what()};
  }
  for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (report(validate(h, r))) return kDiagnostics;
  store(out, rep.converted == 0 ? text : encode(h));
  return kOk;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

Value parse_arg(const std::string& text, const Type& t) {
  auto bad = [&] { return Exit{kUsage, "cannot read '" + text + "' as " + t.to_string()}; };
  if (t == float_type()) {
    double d = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
    return d;
  }
  if (t == int_type()) {
    std::int64_t i = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (ec != std::errc() || ptr != text.data() + text.size()) throw bad();
    return i;
  }
  if (t.is_enum()) {
    if (t.enum_size() == 2 && (text == "true" || text == "false")) return EnumTag{text == "true", 2};
    std::uint32_t tag = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), tag);
    if (ec != std::errc() || ptr != text.data() + text.size() || tag >= t.enum_size()) throw bad();
    return EnumTag{tag, t.enum_size()};
  }
  throw Exit{kUsage, "arguments of type " + t.to_string() + " cannot be given on the command line"};
}

int cmd_run(const Common& c, const std::string& entry, const std::optional<std::string>& script,
            const std::optional<std::uint64_t>& seed, const std::vector<std::string>& arg_text, bool show_state) {
  const Registry r = load_registry(c.ext);
  const Hugr h = load_graph(c.file, load_text(c.file));
  if (report(validate(h, r))) return kDiagnostics;
  auto f = find_function(h, entry);
  if (!f) throw Exit{kUsage, "no function named '" + entry + "'"};

  std::vector<std::string> raw;
  for (const std::string& a : arg_text) {
    for (std::string& part : split(a, ',')) raw.push_back(std::move(part));
  }
  std::vector<Value> args;
  std::size_t next = 0;
  for (const Type& t : std::get<op::FuncDef>(h.op(*f)).signature.body.inputs) {
    if (t == qubit_type()) continue;
    if (next == raw.size()) throw Exit{kUsage, "missing argument " + std::to_string(next) + " of type " + t.to_string()};
    args.push_back(parse_arg(raw[next++], t));
  }
  if (next != raw.size()) throw Exit{kUsage, "too many arguments"};

  OutcomeSource outcomes = OutcomeSource::scripted({});
  if (seed) {
    outcomes = OutcomeSource::seeded(*seed);
  } else if (script) {
    std::vector<bool> bits;
    for (const std::string& b : split(*script, ',')) {
      if (b != "0" && b != "1") throw Exit{kUsage, "outcome script must be comma-separated 0/1, got '" + b + "'"};
      bits.push_back(b == "1");
    }
    outcomes = OutcomeSource::scripted(std::move(bits));
  }

  Eigen::VectorXcd state;
  std::vector<Value> outs;
  try {
    outs = run(h, entry, args, std::move(outcomes), r, &state);
  } catch (const InterpError& e) {
    throw Exit{e.code() == InterpErrorCode::BadArguments ? kUsage : kDiagnostics, e.what()};
  }
  for (std::size_t i = 0; i < outs.size(); ++i) std::cout << "out" << i << " = " << to_string(outs[i]) << "\n";
  if (show_state) {
    std::cout.precision(12);
    for (Eigen::Index i = 0; i < state.size(); ++i) {
      std::cout << "amp[" << i << "] = " << state[i].real() << (state[i].imag() < 0 ? " - " : " + ")
                << std::abs(state[i].imag()) << "i\n";
    }
  }
  return kOk;
}

int cmd_roundtrip(const Common& c) {
  const std::string text = load_text(c.file);
  const Hugr h = load_graph(c.file, text);
  const std::string once = encode(h);
  const std::string twice = encode(decode(once));
  if (once != twice) {
    std::cerr << c.file << ": encoding is not stable under a second roundtrip\n";
    return kDiagnostics;
  }
  if (text != once) std::cout << once;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate, optimize, structure and run hugr graphs"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("file", c.file, "Graph document (.hugr.json)")->required();
    sub->add_option("--ext", c.ext, "Extra extension declarations (.hugrext.json)");
  };

  Common validate_args;
  auto* validate_cmd = app.add_subcommand("validate", "Print diagnostics");
  add_common(validate_cmd, validate_args);

  Common optimize_args;
  std::vector<std::string> rule_files;
  std::size_t budget = 10000;
  std::string optimize_out;
  auto* optimize_cmd = app.add_subcommand("optimize", "Apply rewrite rules until none matches");
  add_common(optimize_cmd, optimize_args);
  optimize_cmd->add_option("--rules", rule_files, "Rule files (.hugrrule.json)")->required();
  optimize_cmd->add_option("--budget", budget, "Maximum number of applications");
  optimize_cmd->add_option("-o", optimize_out, "Output file");

  Common structure_args;
  std::string structure_out;
  auto* structure_cmd = app.add_subcommand("structure", "Replace CFGs by Conditional and TailLoop nodes");
  add_common(structure_cmd, structure_args);
  structure_cmd->add_option("-o", structure_out, "Output file (default: standard output)");

  Common run_args;
  std::string entry;
  std::optional<std::string> script;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> arg_text;
  bool show_state = false;
  auto* run_cmd = app.add_subcommand("run", "Execute a function");
  add_common(run_cmd, run_args);
  run_cmd->add_option("--entry", entry, "Module-level function to run")->required();
  auto* outcomes_opt = run_cmd->add_option("--outcomes", script, "Measurement outcomes, e.g. 0,0,1");
  run_cmd->add_option("--seed", seed, "Sample measurements from this seed")->excludes(outcomes_opt);
  run_cmd->add_option("--args", arg_text, "Classical arguments, comma separated");
  run_cmd->add_flag("--state", show_state, "Print the amplitudes of the output qubits");

  Common roundtrip_args;
  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check the canonical encoding");
  roundtrip_cmd->add_option("file", roundtrip_args.file, "Graph document (.hugr.json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(validate_args);
    if (*optimize_cmd) return cmd_optimize(optimize_args, rule_files, budget, optimize_out);
    if (*structure_cmd) return cmd_structure(structure_args, structure_out);
    if (*run_cmd) return cmd_run(run_args, entry, script, seed, arg_text, show_state);
    if (*roundtrip_cmd) return cmd_roundtrip(roundtrip_args);
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
