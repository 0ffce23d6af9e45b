#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopsmith/cayley_io.hpp"
#include "loopsmith/structure.hpp"

namespace loopsmith {

inline constexpr const char* kSchemaVersion = "1.0";

// Stated in every report: how far the structural verification reaches.
inline constexpr const char* kVerificationScope =
    "group structure is verified through set products, closures, normality "
    "and quotient checks, and order identities; abstract product "
    "decompositions are not materialized";

// Machine-readable analysis verdicts for one input. Wall-clock timings are
// carried for the text summary only; the JSON serialization is byte-identical
// across runs for the same input and flags, so timings stay out of it.
struct AnalysisReport {
  std::string descriptor;    // "preset:q8" or "file:<path>"
  std::string content_hash;  // fnv1a64 of the canonical input serialization
  int max_order = 32;
  int threads = 1;

  std::string group_name;
  int group_order = 0;
  bool abelian = false;
  long long group_aut_order = 0;
  int center_order = 0;
  int inner_order = 0;
  bool generalized_dihedral = false;

  int loop_order = 0;
  bool moufang = false;
  bool associative = false;

  long long aut_order = 0;
  long long trivial_half_order = 0;
  long long half_order = 0;
  long long fixing_order = 0;
  long long nontrivial_count = 0;
  long long trivial_fixing_intersection = 0;

  std::optional<int> witness_nontriviality;
  std::optional<int> witness_factorization;

  struct FixingGenerator {
    Perm images;
    std::vector<int> inverted;
  };
  int fixing_rank = 0;
  std::vector<FixingGenerator> fixing_generators;

  std::vector<Claim> claims;
  bool all_pass = false;

  std::vector<std::pair<std::string, double>> timings_ms;
};

inline AnalysisReport build_report(const std::string& descriptor,
                                   const std::string& content_hash,
                                   const std::string& group_name,
                                   const LoopAnalysis& la,
                                   const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.descriptor = descriptor;
  r.content_hash = content_hash;
  r.max_order = opt.max_order;
  r.threads = opt.threads;

  const FiniteGroup& g = la.group();
  r.group_name = group_name;
  r.group_order = g.order;
  r.abelian = g.abelian;
  r.group_aut_order = static_cast<long long>(la.group_automorphisms.size());
  r.center_order = static_cast<int>(la.center_members.size());
  r.inner_order = static_cast<int>(la.inner_automorphisms.size());
  r.generalized_dihedral = la.dihedral.has_value();

  r.loop_order = la.loop().order;
  r.moufang = la.moufang;
  r.associative = la.associative;

  r.aut_order = la.loop_automorphisms.size();
  r.trivial_half_order = static_cast<long long>(la.trivial_half.size());
  r.half_order = la.half.size();
  r.fixing_order = la.fixing.size();
  r.nontrivial_count = r.half_order - r.trivial_half_order;
  r.trivial_fixing_intersection = static_cast<long long>(
      detail::sorted_intersection(la.trivial_half, la.fixing.elements).size());

  r.witness_nontriviality = la.witness_nontriviality;
  r.witness_factorization = la.witness_factorization;

  r.fixing_rank = static_cast<int>(la.fixing_generators.size());
  for (const Perm& f : la.fixing_generators) {
    AnalysisReport::FixingGenerator gen;
    gen.images = f;
    gen.inverted = inverted_set(la.embedding, f).members;
    r.fixing_generators.push_back(std::move(gen));
  }

  const auto t0 = std::chrono::steady_clock::now();
  StructureVerdict verdict = verify_structure(la);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  r.claims = std::move(verdict.claims);
  r.all_pass = true;
  for (const Claim& c : r.claims)
    if (!c.pass) r.all_pass = false;

  r.timings_ms = la.timings_ms;
  r.timings_ms.emplace_back("structure_checks", ms);
  return r;
}

inline ojson report_to_json(const AnalysisReport& r) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = ojson{{"descriptor", r.descriptor},
                     {"content_hash", "fnv1a64:" + r.content_hash}};
  j["options"] = ojson{{"max_order", r.max_order}, {"parallel", r.threads}};
  j["group"] = ojson{{"name", r.group_name},
                     {"order", r.group_order},
                     {"abelian", r.abelian},
                     {"aut_order", r.group_aut_order},
                     {"center_order", r.center_order},
                     {"inner_order", r.inner_order},
                     {"generalized_dihedral", r.generalized_dihedral}};
  j["loop"] = ojson{{"order", r.loop_order},
                    {"moufang", r.moufang},
                    {"associative", r.associative}};
  j["counts"] = ojson{{"aut", r.aut_order},
                      {"trivial_half", r.trivial_half_order},
                      {"half", r.half_order},
                      {"h", r.fixing_order},
                      {"nontrivial", r.nontrivial_count},
                      {"trivial_h_intersection", r.trivial_fixing_intersection}};
  j["witnesses"] =
      ojson{{"nontriviality", r.witness_nontriviality
                                  ? ojson(*r.witness_nontriviality)
                                  : ojson(nullptr)},
            {"factorization", r.witness_factorization
                                  ? ojson(*r.witness_factorization)
                                  : ojson(nullptr)}};
  ojson gens = ojson::array();
  for (const auto& g : r.fixing_generators)
    gens.push_back(ojson{{"images", g.images}, {"inverted", g.inverted}});
  j["h"] = ojson{{"rank", r.fixing_rank}, {"generators", std::move(gens)}};
  ojson claims = ojson::array();
  for (const Claim& c : r.claims)
    claims.push_back(
        ojson{{"claim", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  j["claims"] = std::move(claims);
  j["verification_scope"] = kVerificationScope;
  j["all_pass"] = r.all_pass;
  return j;
}

inline std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  out << "input: " << r.descriptor << " (hash fnv1a64:" << r.content_hash
      << ")\n";
  out << "group G: " << r.group_name << ", order " << r.group_order
      << ", abelian: " << yesno(r.abelian) << ", |Aut(G)| = " << r.group_aut_order
      << ", |Z(G)| = " << r.center_order << ", |Inn(G)| = " << r.inner_order
      << ", generalized dihedral: " << yesno(r.generalized_dihedral) << "\n";
  out << "loop M(G,2): order " << r.loop_order
      << ", Moufang: " << yesno(r.moufang)
      << ", associative: " << yesno(r.associative) << "\n";
  out << "counts: |H| = " << r.fixing_order << ", |Aut(L)| = " << r.aut_order
      << ", |Half_T(L)| = " << r.trivial_half_order
      << ", |Half(L)| = " << r.half_order
      << ", nontrivial = " << r.nontrivial_count << "\n";
  out << "witnesses: nontriviality = "
      << (r.witness_nontriviality ? std::to_string(*r.witness_nontriviality)
                                  : std::string("absent"))
      << ", factorization = "
      << (r.witness_factorization ? std::to_string(*r.witness_factorization)
                                  : std::string("absent"))
      << "\n";
  out << "H rank: " << r.fixing_rank << "\n";
  int passed = 0;
  for (const Claim& c : r.claims) passed += c.pass ? 1 : 0;
  out << "claims: " << passed << "/" << r.claims.size() << " pass\n";
  out << "scope: " << kVerificationScope << "\n";
  for (const Claim& c : r.claims)
    if (!c.pass) out << "  FAIL " << c.id << ": " << c.detail.dump() << "\n";
  out << "timings:";
  for (const auto& [name, ms] : r.timings_ms)
    out << " " << name << " " << std::fixed << std::setprecision(1) << ms
        << "ms";
  out << "\n";
  return out.str();
}

}  // namespace loopsmith
