#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loopsmith/loopsmith.hpp"

namespace {

using loopsmith::ojson;

struct CommonArgs {
  std::string group;
  std::string file;
  std::string out;
  int max_order = 32;
  int parallel = 1;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_format = true) {
  cmd->add_option("--group", args.group,
                  "group preset (trivial, cyclic(n), klein, dihedral(n), q8, "
                  "c4_semidirect_c3, s3, elementary_abelian(k))");
  cmd->add_option("--file", args.file, "group Cayley-table JSON file");
  cmd->add_option("--out", args.out, "write output to this path");
  cmd->add_option("--max-order", args.max_order, "loop-order bound")
      ->envname("LOOPSMITH_MAX_ORDER");
  cmd->add_option("--parallel", args.parallel, "worker threads for search");
  if (with_format)
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

struct LoadedGroup {
  loopsmith::FiniteGroup group;
  std::string name;
  std::string descriptor;
  std::string hash;
};

LoadedGroup load_group(const CommonArgs& args) {
  if (args.group.empty() == args.file.empty())
    throw loopsmith::ValidationError(
        "exactly one of --group and --file is required");
  LoadedGroup lg;
  if (!args.group.empty()) {
    lg.group = loopsmith::preset(args.group);
    lg.name = args.group;
    lg.descriptor = "preset:" + args.group;
    lg.hash = loopsmith::fnv1a64_hex(
        loopsmith::group_to_json(lg.group, args.group).dump());
  } else {
    const std::string bytes = loopsmith::read_file_bytes(args.file);
    const ojson j = loopsmith::load_json_file(args.file);
    lg.group = loopsmith::group_from_json(j);
    lg.name = j.value("name", args.file);
    lg.descriptor = "file:" + args.file;
    lg.hash = loopsmith::fnv1a64_hex(bytes);
  }
  return lg;
}

void deliver(const CommonArgs& args, const ojson& json_payload,
             const std::string& text_payload) {
  if (!args.out.empty()) {
    loopsmith::write_file(args.out, json_payload.dump(2) + "\n");
    if (!text_payload.empty()) std::cout << text_payload;
    return;
  }
  if (args.format == "json")
    std::cout << json_payload.dump(2) << "\n";
  else
    std::cout << text_payload;
}

void warn_if_raised(const CommonArgs& args) {
  if (args.max_order > 32)
    std::cerr << "warning: enumeration bound raised to " << args.max_order
              << "; exhaustive search may take a while\n";
}

int cmd_analyze(const CommonArgs& args) {
  warn_if_raised(args);
  const LoadedGroup lg = load_group(args);
  loopsmith::AnalyzeOptions opt;
  opt.max_order = args.max_order;
  opt.threads = args.parallel;
  const loopsmith::LoopAnalysis la = loopsmith::analyze_chein(lg.group, opt);
  const loopsmith::AnalysisReport report =
      loopsmith::build_report(lg.descriptor, lg.hash, lg.name, la, opt);
  deliver(args, loopsmith::report_to_json(report),
          loopsmith::report_to_text(report));
  return report.all_pass ? 0 : 1;
}

int cmd_build(const CommonArgs& args) {
  const LoadedGroup lg = load_group(args);
  const loopsmith::CheinEmbedding e = loopsmith::chein(lg.group);
  const ojson j = loopsmith::chein_to_json(e, "M(" + lg.name + ",2)");
  std::ostringstream text;
  text << "M(" << lg.name << ",2): order " << e.loop.order << ", u at index "
       << e.u_index << "\n";
  deliver(args, j, text.str());
  return 0;
}

int cmd_check(const CommonArgs& args, const std::string& path) {
  const std::string target = !path.empty() ? path : args.file;
  if (target.empty())
    throw loopsmith::ValidationError("check needs a Cayley-table file");
  const ojson j = loopsmith::load_json_file(target);
  const loopsmith::FiniteLoop l = loopsmith::loop_from_json(j);
  const auto moufang = loopsmith::is_moufang(l);
  const auto assoc = loopsmith::is_associative(l);
  const bool two_sided = l.two_sided_inverses.has_value();
  const bool diassoc = l.order <= 64 && loopsmith::is_diassociative(l);
  const bool aaip = two_sided && loopsmith::has_aaip(l);
  ojson out;
  out["valid"] = true;
  out["order"] = l.order;
  out["associative"] = assoc.ok;
  out["moufang"] = moufang.ok;
  out["diassociative"] = diassoc;
  out["two_sided_inverses"] = two_sided;
  out["aaip"] = aaip;
  if (!moufang.ok)
    out["moufang_witness"] = moufang.witness;
  std::ostringstream text;
  text << "valid loop of order " << l.order << ": associative "
       << (assoc.ok ? "yes" : "no") << ", Moufang "
       << (moufang.ok ? "yes" : "no") << ", diassociative "
       << (diassoc ? "yes" : "no") << ", AAIP " << (aaip ? "yes" : "no")
       << "\n";
  deliver(args, out, text.str());
  return 0;
}

int cmd_enumerate(const CommonArgs& args, const std::string& kind,
                  bool as_loop) {
  warn_if_raised(args);
  const LoadedGroup lg = load_group(args);
  loopsmith::EnumOptions eopt;
  eopt.max_order = args.max_order;
  eopt.threads = args.parallel;

  loopsmith::FiniteLoop carrier;
  std::optional<loopsmith::CheinEmbedding> embedding;
  if (as_loop) {
    carrier = loopsmith::as_loop(lg.group);
  } else {
    embedding = loopsmith::chein(lg.group);
    carrier = embedding->loop;
  }

  loopsmith::HalfGroup set;
  if (kind == "aut") {
    set = loopsmith::enumerate_automorphisms(carrier, eopt);
  } else if (kind == "half") {
    set = loopsmith::enumerate_half_automorphisms(carrier, eopt);
  } else {
    if (!embedding)
      throw loopsmith::ValidationError(
          "--kind h needs the doubled loop; drop --as-loop");
    if (carrier.order > eopt.max_order)
      throw loopsmith::OrderBoundExceeded("loop order exceeds bound");
    set = loopsmith::coset_fixing_subgroup(*embedding);
  }

  const loopsmith::HalfSummary s = loopsmith::summarize(carrier, set);
  ojson j;
  j["kind"] = kind;
  j["loop_order"] = carrier.order;
  ojson maps = ojson::array();
  for (const loopsmith::Perm& p : set.elements)
    maps.push_back(ojson{{"images", p}});
  j["mappings"] = std::move(maps);
  j["summary"] = ojson{{"total", s.total},
                       {"automorphisms", s.automorphisms},
                       {"anti_automorphisms", s.anti_automorphisms},
                       {"nontrivial", s.nontrivial}};
  std::ostringstream text;
  text << kind << ": " << s.total << " mappings (" << s.automorphisms
       << " automorphisms, " << s.anti_automorphisms << " anti-automorphisms, "
       << s.nontrivial << " nontrivial)\n";
  deliver(args, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopsmith: doubled-loop construction and half-automorphism "
               "analysis for finite groups"};
  app.require_subcommand(1);

  CommonArgs analyze_args, build_args, check_args, enum_args;
  // build and enumerate produce JSON artifacts; text is opt-in for them
  build_args.format = "json";
  enum_args.format = "json";
  std::string check_path;
  std::string enum_kind = "half";
  bool enum_as_loop = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "run the full analysis pipeline on M(G,2)");
  add_common(analyze, analyze_args);

  CLI::App* build =
      app.add_subcommand("build", "emit the Cayley table of M(G,2)");
  add_common(build, build_args);

  CLI::App* check =
      app.add_subcommand("check", "validate a Cayley file and report predicates");
  add_common(check, check_args);
  check->add_option("path", check_path, "Cayley-table JSON file");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "emit a full mapping list");
  add_common(enumerate, enum_args);
  enumerate->add_option("--kind", enum_kind, "what to enumerate")
      ->check(CLI::IsMember({"aut", "half", "h"}));
  enumerate->add_flag("--as-loop", enum_as_loop,
                      "treat the group table itself as the carrier");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (build->parsed()) return cmd_build(build_args);
    if (check->parsed()) return cmd_check(check_args, check_path);
    if (enumerate->parsed())
      return cmd_enumerate(enum_args, enum_kind, enum_as_loop);
  } catch (const loopsmith::BoundError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const loopsmith::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
