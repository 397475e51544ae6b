#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ncsym::verify {

// Outcome of one exhaustively checked property. Counterexamples are chosen
// by smallest enumeration index, so reports do not depend on thread count.
struct PropertyResult {
  std::string name;
  long long pass = 0;
  long long fail = 0;
  std::string counterexample;  // empty when everything passed
  std::string note;            // informational (e.g. recorded witness)

  bool ok() const { return fail == 0; }
};

struct SuiteReport {
  std::string suite;
  int max_n = 0;
  std::vector<PropertyResult> properties;
  double seconds = 0;

  bool ok() const;
};

// Suite registry. run_suite throws UnknownSuiteError for a bad name and
// BoundTooLargeError when max_n exceeds the suite cap; max_n < 0 selects the
// default bound.
std::vector<std::string> suite_names();
int suite_default_bound(const std::string& suite);
int suite_max_bound(const std::string& suite);
SuiteReport run_suite(const std::string& suite, int max_n, unsigned jobs);

std::string render_text(const SuiteReport& report, bool include_timing);
nlohmann::ordered_json render_json(const SuiteReport& report,
                                   bool include_timing);

// Individual properties (bounds are inclusive; jobs >= 1).
PropertyResult check_lattice_axioms(int max_n, unsigned jobs);
PropertyResult check_lattice_associativity(int max_n, unsigned jobs);
PropertyResult check_glb_lub(int max_n, unsigned jobs);
PropertyResult check_concat_lattice_morphism(int max_total, unsigned jobs);
PropertyResult check_concat_monoid(int max_total, unsigned jobs);
PropertyResult check_split_inverse(int max_total, unsigned jobs);
PropertyResult check_bell_counts(int max_n);
PropertyResult check_type_stability();

PropertyResult check_mobius_recursion_vs_product(int max_n, unsigned jobs);
PropertyResult check_mobius_inversion(int max_n, unsigned jobs);
PropertyResult check_mobius_cache_transparent(int max_n);

PropertyResult check_convert_roundtrip(int max_deg);
PropertyResult check_triangularity(int max_n);
PropertyResult check_character_matrix(int max_n);
PropertyResult check_p_product(int max_total, unsigned jobs);
PropertyResult check_p_internal(int max_deg, unsigned jobs);
PropertyResult check_p_external_pipeline(int max_deg);
PropertyResult check_coassoc_external(int max_deg);
PropertyResult check_counit_laws(int max_deg);
PropertyResult check_coassoc_internal(int max_deg);
PropertyResult check_bialgebra_compat(int max_total);
PropertyResult check_duality_pairing(int max_n);
PropertyResult check_no_antipode();

PropertyResult check_x_product(int max_total, unsigned jobs);
PropertyResult check_x_internal(int max_deg, unsigned jobs);
PropertyResult check_x_external_coassoc(int max_deg);

PropertyResult check_idempotent_orthogonality(int max_n, unsigned jobs);
PropertyResult check_idempotent_completeness(int max_n);
PropertyResult check_idempotent_concat(int max_total, unsigned jobs);
PropertyResult check_action_consistency(int max_n, unsigned jobs);

PropertyResult check_module_tensor(int max_n);
PropertyResult check_module_restrict(int max_n);
PropertyResult check_module_induct(int max_total);
PropertyResult check_res_coproduct_tensor(int max_n);
PropertyResult check_res_structure(int max_n);

PropertyResult check_frobenius_product(int max_total, unsigned jobs);
PropertyResult check_frobenius_internal(int max_n, unsigned jobs);
PropertyResult check_ind_res_witness(int max_total);

PropertyResult check_realization_roundtrip(int max_deg);
PropertyResult check_realization_invariance(int max_deg);
PropertyResult check_realization_product(int max_total, unsigned jobs);
PropertyResult check_realization_xy(int max_deg, unsigned jobs);
PropertyResult check_realization_term_counts(int max_deg);

}  // namespace ncsym::verify
