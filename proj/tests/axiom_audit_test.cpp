#include "proxtopo/axiom_audit.hpp"

#include <gtest/gtest.h>

#include "proxtopo/error.hpp"
#include "test_spaces.hpp"

using namespace proxtopo;
using namespace proxtopo::testing;

namespace {

void expect_holds(const AuditReport& r, const std::string& axiom) {
  const AxiomResult* res = r.find(axiom);
  ASSERT_NE(res, nullptr) << axiom;
  EXPECT_TRUE(res->holds) << axiom;
}

const AxiomResult& expect_fails(const AuditReport& r, const std::string& axiom) {
  const AxiomResult* res = r.find(axiom);
  EXPECT_NE(res, nullptr) << axiom;
  EXPECT_FALSE(res->holds) << axiom;
  return *res;
}

void expect_self_certifying(const FiniteSpace& sp, const ProximityKind& k, const AuditReport& r) {
  for (const AxiomResult& res : r.results) {
    if (res.holds) continue;
    EXPECT_FALSE(res.witness.empty()) << res.axiom;
    EXPECT_TRUE(replay_witness(sp, k, res)) << res.axiom;
  }
}

}  // namespace

TEST(AuditLodato, IntersectionOnDiscrete) {
  const FiniteSpace d3 = discrete_space(3);
  const AuditReport r = audit_lodato(d3, ProximityKind::intersection());
  EXPECT_TRUE(r.all_hold());
  for (const char* ax : {"P0", "P1", "P2", "P3", "P4", "P5"}) expect_holds(r, ax);
}

TEST(AuditLodato, ClosureLodatoOnChainFailsSeparation) {
  const FiniteSpace s3 = make_s3();
  const auto k = ProximityKind::closure_lodato();
  const AuditReport r = audit_lodato(s3, k);
  for (const char* ax : {"P0", "P1", "P2", "P3", "P4"}) expect_holds(r, ax);
  const AxiomResult& p5 = expect_fails(r, "P5");
  EXPECT_EQ(p5.get("x"), Subset{A});
  EXPECT_EQ(p5.get("y"), Subset{B});
  expect_self_certifying(s3, k, r);
}

TEST(AuditLodato, RejectsStrongOnlyKinds) {
  EXPECT_THROW(audit_lodato(make_s3(), ProximityKind::interior_overlap()), Error);
  EXPECT_THROW(audit_ef(make_s3(), ProximityKind::mixed()), Error);
}

TEST(AuditLodato, SizeGuard) {
  const FiniteSpace d5 = discrete_space(5);
  try {
    audit_lodato(d5, ProximityKind::intersection());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
  }
  EXPECT_TRUE(audit_lodato(d5, ProximityKind::intersection(), {.allow_five_points = true}).all_hold());
  EXPECT_THROW(audit_kuratowski(discrete_space(6), {.allow_five_points = true}), Error);
}

TEST(AuditEf, Examples) {
  EXPECT_TRUE(audit_ef(discrete_space(3), ProximityKind::intersection()).all_hold());
  EXPECT_TRUE(audit_ef(discrete_space(3), ProximityKind::closure_lodato()).all_hold());
  EXPECT_TRUE(audit_ef(make_d4_line(), ProximityKind::metric_gap(0)).all_hold());
}

TEST(AuditEf, MetricToleranceWitnessesReplay) {
  const FiniteSpace line = make_d4_line();
  const auto k = ProximityKind::metric_gap(Rational(3, 2));
  const AuditReport r = audit_ef(line, k);
  expect_self_certifying(line, k, r);
}

TEST(AuditAlmost, InteriorOverlapOnDiscreteHolds) {
  const AuditReport r = audit_almost(discrete_space(3), ProximityKind::interior_overlap());
  for (const char* ax : {"N0", "N1", "N2", "N3", "N4", "N5", "N6"}) expect_holds(r, ax);
}

TEST(AuditAlmost, InteriorOverlapOnChainFailsN0) {
  const FiniteSpace s3 = make_s3();
  const auto k = ProximityKind::interior_overlap();
  const AuditReport r = audit_almost(s3, k);
  const AxiomResult& n0 = expect_fails(r, "N0");
  EXPECT_EQ(n0.get("A"), (Subset{B, C}));
  for (const char* ax : {"N1", "N2", "N4", "N5", "N6"}) expect_holds(r, ax);
  expect_self_certifying(s3, k, r);
}

TEST(AuditAlmost, IntersectionSatisfiesN2Everywhere) {
  for (unsigned n = 1; n <= 3; ++n)
    for_each_topology(n, [&](const FiniteSpace& sp) {
      expect_holds(audit_almost(sp, ProximityKind::intersection()), "N2");
    });
}

TEST(AuditCompatibility, Examples) {
  const FiniteSpace s3 = make_s3();
  const auto lodato = ProximityKind::closure_lodato();
  const AuditReport r = audit_compatibility(s3, lodato);
  const AxiomResult& c = expect_fails(r, "COMPAT");
  EXPECT_EQ(c.get("A"), (Subset{B}));
  expect_self_certifying(s3, lodato, r);
  EXPECT_TRUE(audit_compatibility(discrete_space(3), lodato).all_hold());
  EXPECT_TRUE(audit_compatibility(discrete_space(3), ProximityKind::intersection()).all_hold());
}

TEST(AuditKuratowski, Examples) {
  const AuditReport r = audit_kuratowski(make_s3());
  EXPECT_TRUE(r.all_hold());
  std::size_t count = 0;
  for_each_topology(3, [&](const FiniteSpace& sp) {
    EXPECT_TRUE(audit_kuratowski(sp).all_hold());
    ++count;
  });
  EXPECT_EQ(count, 29u);
  const FiniteSpace d3 = discrete_space(3);
  EXPECT_TRUE(audit_kuratowski(d3).all_hold());
  for_each_subset(3, [&](Subset s) { EXPECT_EQ(d3.closure(s), s); });
}

// Across all topologies on <= 3 points: every failure witness replays, the
// mandatory almost-axioms hold for every strong kind, and Intersection is Lodato.
TEST(AuditProperties, WitnessesReplayAndMandatoryAxiomsHold) {
  const ProximityKind strong[] = {ProximityKind::intersection(), ProximityKind::interior_overlap(),
                                  ProximityKind::mixed()};
  for (unsigned n = 1; n <= 3; ++n) {
    for_each_topology(n, [&](const FiniteSpace& sp) {
      for (const auto& k : strong) {
        const AuditReport r = audit_almost(sp, k);
        for (const char* ax : {"N1", "N2", "N4", "N5", "N6"}) expect_holds(r, ax);
        expect_self_certifying(sp, k, r);
      }
      const AuditReport lo = audit_lodato(sp, ProximityKind::intersection());
      EXPECT_TRUE(lo.all_hold());
      const auto lodato = ProximityKind::closure_lodato();
      AuditReport cl = audit_lodato(sp, lodato);
      cl.merge(audit_compatibility(sp, lodato));
      cl.merge(audit_ef(sp, lodato));
      expect_self_certifying(sp, lodato, cl);
    });
  }
}
