#include "properties.hpp"

#include <doctest.h>

namespace {

void expect(const props::Report& r, int min_cases) {
  INFO(r.name << ": " << r.failures << " failures, first: " << r.first_failure);
  CHECK(r.cases >= min_cases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("standardize reconstructs the input") { expect(props::standardize_reconstruction(101, 500), 500); }
TEST_CASE("minor gcd matches exhaustive minors") { expect(props::minor_gcd_exhaustive(102, 500), 500); }
TEST_CASE("is_standard matches the Smith form") { expect(props::is_standard_smith(103, 500), 500); }
TEST_CASE("hermite form invariants") { expect(props::hnf_properties(104, 500), 500); }
TEST_CASE("SL lift reduces to the residue matrix") { expect(props::sl_lift_reduces(105, 500), 500); }
TEST_CASE("well-forming output and certificate") { expect(props::well_form_properties(106, 500), 500); }
TEST_CASE("wps well-forming agrees with the matrix routine") { expect(props::wps_agreement(107, 1000), 1000); }
TEST_CASE("presentation equivalence is an equivalence") { expect(props::equivalence_relation(108, 500), 500); }
TEST_CASE("gale duality round trip") { expect(props::gale_round_trip(109, 500), 500); }
TEST_CASE("fan and ideal round trip") { expect(props::fan_ideal_round_trip(110, 500), 500); }
TEST_CASE("bundle fans have the expected shape") { expect(props::bundle_fan_shape(111, 500), 500); }
TEST_CASE("star subdivision keeps the support") { expect(props::star_subdivision_support(112, 500), 500); }
TEST_CASE("quotient type normalization") { expect(props::singular_normalization(113, 500), 500); }
TEST_CASE("chart counts and smooth charts") { expect(props::chart_counts(114, 500), 500); }
TEST_CASE("chamber models match brute-force semistability") { expect(props::chamber_semistability(115, 500), 500); }
TEST_CASE("2-ray game consistency") { expect(props::game_consistency(116, 500), 500); }
TEST_CASE("bundle blow-up agrees with star subdivision") { expect(props::blowup_coherence(117, 500), 500); }
TEST_CASE("discrepancy is affine in the weights") { expect(props::discrepancy_linearity(118, 500), 500); }
