#include "fwexact/json_io.hpp"

namespace fwexact {

namespace {

std::string bigint_str(const BigInt& v) { return v.str(); }

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", bigint_str(numerator(r))},
              {"den", bigint_str(denominator(r))}};
}

Json scalar_json(const ExactScalar& s) {
  return Json{{"re", rational_json(s.re)}, {"im", rational_json(s.im)}};
}

Json units_json(const UnitVector& u) {
  return Json{{"hbar", u.hbar},
              {"q", u.q},
              {"m", u.m},
              {"c", u.c},
              {"mupp", u.mupp}};
}

Json mono_json(const OpMonomial& m) {
  return Json{{"sp", m.sp},
              {"pi2n", m.pi},
              {"field", field_name(m.field)},
              {"phi", m.phi}};
}

Json expr_json(const OpExpr& e) {
  Json terms = Json::array();
  for (const auto& [key, scalar] : e.terms()) {
    terms.push_back(Json{{"coeff", scalar_json(scalar)},
                         {"units", units_json(key.units)},
                         {"mono", mono_json(key.mono)}});
  }
  return terms;
}

namespace {

const char* grading_name(Grading g) {
  return g == Grading::Recursion ? "recursion" : "physical";
}

Json orders_json(const OpSeries& s) {
  Json orders = Json::array();
  for (const auto& [g, e] : s.entries())
    orders.push_back(Json{{"order", g}, {"terms", expr_json(e)}});
  return orders;
}

}  // namespace

Json series_json(const OpSeries& s, const std::string& symbol) {
  return Json{{"symbol", symbol},
              {"grading", grading_name(s.grading())},
              {"orders", orders_json(s)}};
}

Json hamiltonian_json(const HamiltonianSeries& h, const std::string& theory,
                      const std::string& representation) {
  return Json{{"theory", theory},
              {"representation", representation},
              {"grading", grading_name(h.body.grading())},
              {"rest_energy", h.rest_energy},
              {"orders", orders_json(h.body)}};
}

Json coeffs_json(const SeqTable& t, int jmax, int identity_jmax) {
  Json seqs;
  Json a = Json::array(), b = Json::array(), c = Json::array(),
       d = Json::array();
  for (int j = 0; j <= jmax; ++j) {
    a.push_back(bigint_str(t.a(j)));
    b.push_back(bigint_str(t.b(j)));
    c.push_back(bigint_str(t.c(j)));
    d.push_back(bigint_str(t.d(j)));
  }
  seqs["a"] = a;
  seqs["b"] = b;
  seqs["c"] = c;
  seqs["d"] = d;

  Json identities = Json::array();
  for (Identity id : {Identity::A, Identity::B, Identity::C1, Identity::C2,
                      Identity::D, Identity::E, Identity::F}) {
    IdentityReport r = check_identity(t, id, identity_jmax);
    Json entry{{"id", identity_name(id)},
               {"j_min", r.j_min},
               {"j_max", r.j_max},
               {"status", r.pass ? "pass"
                                 : (identity_expected_inconsistent(id)
                                        ? "printed-inconsistent"
                                        : "fail")}};
    if (r.first_failure)
      entry["first_failure"] = Json{{"j", r.first_failure->j},
                                    {"lhs", bigint_str(r.first_failure->lhs)},
                                    {"rhs", bigint_str(r.first_failure->rhs)}};
    else
      entry["first_failure"] = nullptr;
    identities.push_back(entry);
  }
  return Json{{"version", kVersion},
              {"jmax", jmax},
              {"identity_jmax", identity_jmax},
              {"sequences", seqs},
              {"identities", identities}};
}

Json series_check_json(const SeqTable& t, int order) {
  Json checks = Json::array();
  const char* names[] = {"a", "b", "c", "d"};
  Seq seqs[] = {Seq::A, Seq::B, Seq::C, Seq::D};
  for (int k = 0; k < 4; ++k) {
    SeriesReport r = verify_series(t, seqs[k], order);
    Json entry{{"series", names[k]},
               {"order", order},
               {"status", r.pass ? "pass" : "fail"}};
    if (r.first_failure) {
      entry["first_failure"] =
          Json{{"power", r.first_failure->power},
               {"lhs", rational_json(r.first_failure->lhs)},
               {"rhs", rational_json(r.first_failure->rhs)}};
    } else {
      entry["first_failure"] = nullptr;
    }
    checks.push_back(entry);
  }
  SeriesReport printed = series_c_printed_prefactor_report(t, order);
  Json entry{{"series", "c_printed_prefactor"},
             {"order", order},
             {"status", printed.pass ? "pass" : "printed-inconsistent"}};
  if (printed.first_failure)
    entry["first_failure"] =
        Json{{"power", printed.first_failure->power},
             {"lhs", rational_json(printed.first_failure->lhs)},
             {"rhs", rational_json(printed.first_failure->rhs)}};
  else
    entry["first_failure"] = nullptr;
  checks.push_back(entry);
  return Json{{"version", kVersion}, {"order", order}, {"checks", checks}};
}

Json report_json(const VerificationReport& report,
                 const std::string& command) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry{{"name", c.name},
               {"authoritative", c.authoritative},
               {"status", c.status()},
               {"elapsed_ms", c.elapsed_ms}};
    if (c.first_failure) {
      Json f;
      if (c.first_failure->order)
        f["order"] = *c.first_failure->order;
      else
        f["order"] = nullptr;
      f["structure"] = c.first_failure->structure;
      f["lhs"] = c.first_failure->lhs;
      f["rhs"] = c.first_failure->rhs;
      entry["first_failure"] = f;
    } else {
      entry["first_failure"] = nullptr;
    }
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }

  Json breakdowns = Json::array();
  for (const auto& [g, by] : report.pauli_breakdown.edotpi_by_grade) {
    Json sources = Json::array();
    for (const auto& [src, e] : by)
      sources.push_back(Json{{"source", src}, {"terms", expr_json(e)}});
    breakdowns.push_back(Json{{"order", g}, {"contributions", sources}});
  }

  return Json{{"version", kVersion},
              {"command", command},
              {"config",
               Json{{"order", report.config.order},
                    {"phi_sign",
                     report.config.phi_sign < 0 ? "minus" : "plus"},
                    {"series_order", report.config.series_order},
                    {"identity_jmax", report.config.identity_jmax}}},
              {"checks", checks},
              {"edotpi_breakdown", breakdowns},
              {"overall_pass", report.overall_pass}};
}

}  // namespace fwexact
