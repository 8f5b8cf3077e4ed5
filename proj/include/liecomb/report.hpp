#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "liecomb/ksmall.hpp"

namespace liecomb {

struct ReproduceRow {
  std::string label;  // group being verified, e.g. "SL6"
  KSmallCertificate cert;
};

struct ReproduceReport {
  std::vector<ReproduceRow> rows;
  bool all_positive = false;
};

// The full verification matrix: SL3..SL8, Sp4, Sp6, SO(4,4), SO(4,5),
// SO(5,5) and the G2 realization.
ReproduceReport reproduce_section7();
ReproduceReport reproduce_family(const std::string& tag, int size);

std::string reproduce_label(const std::string& tag, int size);
std::string to_json(const ReproduceReport& rep);
std::string to_text(const ReproduceReport& rep);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_pass = false;
  std::uint64_t seed = 0;
};

// Runs the acceptance suite; `only` empty means all nine criteria.  Each
// criterion owns a generator reseeded from (seed, id), so filtering does not
// change results.
AcceptanceReport run_acceptance(const std::set<int>& only = {}, std::uint64_t seed = 0);

// Criterion ids exercised by a module name (for --only <module>).
std::set<int> criteria_for_module(const std::string& module);

std::string to_json(const AcceptanceReport& rep);
std::string to_text(const AcceptanceReport& rep);

}  // namespace liecomb
