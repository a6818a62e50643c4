#include "dftsub/json_io.hpp"

#include <stdexcept>

namespace dftsub {

Json to_json(const IndexSet& s) {
  return Json{{"n", s.n}, {"elements", s.elements}};
}

IndexSet index_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("elements")) {
    throw std::invalid_argument("index set JSON needs {\"n\", \"elements\"}");
  }
  return IndexSet(j.at("n").get<std::uint64_t>(),
                  j.at("elements").get<std::vector<std::uint64_t>>());
}

Json to_json(const DivisorSet& d) {
  return Json{{"n", d.n}, {"divisors", d.divisors}};
}

DivisorSet divisor_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("divisors")) {
    throw std::invalid_argument("divisor set JSON needs {\"n\", \"divisors\"}");
  }
  return DivisorSet(j.at("n").get<std::uint64_t>(),
                    j.at("divisors").get<std::vector<std::uint64_t>>());
}

Json to_json(const Idempotent& h) {
  return Json{{"n", h.modulus()},
              {"elements", h.support().elements},
              {"divisors", h.zero_set_divisors().divisors},
              {"zero_set", h.zero_set().elements}};
}

Json to_json(const DigitTable& t) {
  return Json{{"p", t.p}, {"m", t.m}, {"marked", t.marked}, {"rows", t.rows}};
}

DigitTable digit_table_from_json(const Json& j) {
  DigitTable t;
  t.p = j.at("p").get<std::uint64_t>();
  t.m = j.at("m").get<int>();
  t.marked = j.at("marked").get<std::vector<int>>();
  t.rows = j.at("rows").get<std::vector<std::vector<Digit>>>();
  return t;
}

Json pair_report_json(const IndexSet& i, const IndexSet& j,
                      const PairReport& report) {
  Json out{{"i", i.elements},
           {"j", j.elements},
           {"n", i.n},
           {"unitary", report.unitary_exact},
           {"gram_offdiag_max", report.gram_offdiag_max}};
  if (report.witness_basis_norm) {
    out["witness_basis_norm"] = *report.witness_basis_norm;
  } else {
    out["witness_basis_norm"] = nullptr;
  }
  return out;
}

Json graph_report_json(const DifferenceGraph& g, const IndexSet& clique,
                       const BergeReport& berge) {
  Json holes = Json::array();
  if (berge.hole) holes.push_back(*berge.hole);
  if (berge.complement_hole) holes.push_back(*berge.complement_hole);
  return Json{{"n", g.order()},
              {"divisors", g.classes().divisors},
              {"max_clique", clique.elements},
              {"holes", holes}};
}

Json to_json(const FugledeReport& report) {
  Json out{{"j", report.j.elements}, {"n", report.j.n}};
  out["sampling_set"] =
      report.sampling_set ? Json(report.sampling_set->elements) : Json(nullptr);
  out["tiling_complement"] = report.tiling_complement
                                 ? Json(report.tiling_complement->elements)
                                 : Json(nullptr);
  out["agree"] = report.agree();
  return out;
}

Json to_json(const ScanReport& report) {
  Json entries = Json::array();
  for (const auto& entry : report.entries) {
    Json row{{"divisors", entry.divisors.divisors},
             {"realizable", entry.realizable},
             {"witness", entry.witness ? Json(entry.witness->elements) : Json(nullptr)},
             {"clique_size", entry.clique_size},
             {"clique_size_divides_n", entry.clique_size_divides_n}};
    entries.push_back(std::move(row));
  }
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.elements);
  return Json{{"n", report.n}, {"entries", entries}, {"violations", violations}};
}

namespace {

Json family_common(std::uint64_t n, std::uint64_t d, std::uint64_t offset,
                   const IndexSet& support, const IndexSet& zeros,
                   const std::optional<IndexSet>& sampling) {
  Json out{{"n", n}, {"d", d}, {"offset", offset}};
  out["support"] = support.elements;
  out["zero_set"] = zeros.elements;
  out["sampling_set"] = sampling ? Json(sampling->elements) : Json(nullptr);
  return out;
}

}  // namespace

Json to_json(const ConsecutiveFamily& fam) {
  return family_common(fam.n, fam.d, fam.offset, fam.support, fam.zeros,
                       fam.sampling_set);
}

Json to_json(const ProgressionFamily& fam) {
  Json out = family_common(fam.n, fam.d, fam.offset, fam.support, fam.zeros,
                           fam.sampling_set);
  out["s"] = fam.s;
  return out;
}

}  // namespace dftsub
