#ifndef HALLFORGE_SUITES_HPP
#define HALLFORGE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hallforge/quiver.hpp"
#include "hallforge/rep.hpp"

namespace hallforge {

/// Outcome of one verification suite. Randomized suites echo their seed in
/// params so a failing run can be replayed.
struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string suite_name, std::string run_params)
      : suite(std::move(suite_name)), params(std::move(run_params)) {}

  std::string suite;
  std::string params;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0; }
  std::string summary() const;
};

struct SuiteConfig {
  Quiver quiver = Quiver::parse("a1");
  std::uint32_t q = 2;
  DimVector dmax;
  std::uint64_t limit = kDefaultEnumLimit;
  std::uint64_t samples = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
};

/// Each suite builds its own catalog, enlarged enough that every sum that
/// the checked identities touch stays inside the bound. The grid of checked
/// cases ranges over classes with dimension below cfg.dmax.
SuiteReport run_green(const SuiteConfig& cfg);
SuiteReport run_rp_sum(const SuiteConfig& cfg);
SuiteReport run_assoc_dh2(const SuiteConfig& cfg);
SuiteReport run_assoc_dh1(const SuiteConfig& cfg);
SuiteReport run_assoc_dhz1(const SuiteConfig& cfg);
SuiteReport run_drinfeld(const SuiteConfig& cfg);
SuiteReport run_phi(const SuiteConfig& cfg);
SuiteReport run_ext_aggregate(const SuiteConfig& cfg);
SuiteReport run_triangular(const SuiteConfig& cfg);
SuiteReport run_k_relations(const SuiteConfig& cfg);
SuiteReport run_grading(const SuiteConfig& cfg);
SuiteReport run_aut_crosscheck(const SuiteConfig& cfg);
SuiteReport run_embeddings(const SuiteConfig& cfg);

/// Catalog ids whose dimension vector fits under the bound.
std::vector<ClassId> ids_within(const Catalog& cat, const DimVector& bound);

DimVector scale_dim(const DimVector& d, int k);

}  // namespace hallforge

#endif
