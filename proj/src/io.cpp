#include "gwitt/io.hpp"

#include <stdexcept>
#include <string>

namespace gwitt::io {

namespace {

Json frame(int d, int e) { return Json::array({d, e}); }

template <typename Scalar>
Json class_json(const LineClass<Scalar>& cls) {
  Json terms = Json::array();
  for (const auto& [g, c] : cls.terms()) {
    Json term;
    term["gen"] = g.kind == Generator::Kind::BaseDet ? "BaseDet" : "TautDet";
    term["index"] = g.index;
    if constexpr (!std::is_same_v<Scalar, Z2>) term["coeff"] = c;
    terms.push_back(std::move(term));
  }
  Json j;
  j["n"] = cls.ambient();
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace

Json to_json(const FramedDiagram& diagram) {
  Json j;
  j["frame"] = frame(diagram.d(), diagram.e());
  j["rows"] = Json(std::vector<int>(diagram.rows().begin(), diagram.rows().end()));
  return j;
}

FramedDiagram diagram_from_json(const Json& j) {
  try {
    const auto f = j.at("frame").get<std::vector<int>>();
    if (f.size() != 2) throw std::invalid_argument("diagram JSON: frame must be [d, e]");
    return FramedDiagram(f[0], f[1], j.at("rows").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("diagram JSON: ") + ex.what());
  }
}

Json to_json(const PicClass& cls) { return class_json(cls); }
Json to_json(const PicClassMod2& cls) { return class_json(cls); }

PicClass pic_class_from_json(const Json& j) {
  try {
    PicClass cls(j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
      const auto gen = term.at("gen").get<std::string>();
      const int index = term.at("index").get<int>();
      const auto coeff = term.contains("coeff") ? term.at("coeff").get<std::int64_t>() : 1;
      if (gen == "BaseDet") {
        cls.add(Generator::base(index), coeff);
      } else if (gen == "TautDet") {
        cls.add(Generator::taut(index), coeff);
      } else {
        throw std::invalid_argument("class JSON: unknown generator " + gen);
      }
    }
    return cls;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("class JSON: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw std::invalid_argument(std::string("class JSON: ") + ex.what());
  }
}

Json to_json(const JumpTuples& tuples) {
  Json j;
  j["dvec"] = tuples.dvec;
  j["evec"] = tuples.evec;
  return j;
}

Json to_json(const GradedDegree& degree) {
  Json j;
  j["shift"] = degree.shift;
  j["base"] = to_json(degree.base);
  j["twist"] = degree.det_twist;
  return j;
}

Json to_json(const BasisElement& element) {
  if (const auto* pt = std::get_if<PointGenerator>(&element)) {
    Json j;
    j["point"] = pt->index;
    return j;
  }
  return to_json(std::get<FramedDiagram>(element));
}

Json to_json(const BasisMap& map) {
  Json j;
  j["which"] = std::string(to_string(map.which));
  j["source_frame"] = frame(map.source.d(), map.source.e());
  j["target_frame"] = frame(map.target.d(), map.target.e());
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < map.matrix.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < map.matrix.cols(); ++c) row.push_back(map.matrix(r, c));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Json to_json(const ExactnessReport& report) {
  Json j;
  j["frame"] = frame(report.d, report.e);
  j["ring"] = report.prime ? "F_" + std::to_string(*report.prime) : std::string("Z");
  j["exact"] = report.exact();
  j["verdicts_agree"] = report.verdicts_agree();
  Json positions = Json::array();
  for (const auto& v : report.positions) {
    Json p;
    p["position"] = v.position;
    p["incoming"] = std::string(to_string(v.incoming));
    p["outgoing"] = std::string(to_string(v.outgoing));
    p["structural"] = v.structural;
    p["linear"] = v.linear;
    p["dimension"] = v.dimension;
    p["image_rank"] = v.image_rank;
    p["kernel_rank"] = v.kernel_rank;
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses) witnesses.push_back(to_json(w));
    p["witnesses"] = std::move(witnesses);
    positions.push_back(std::move(p));
  }
  j["positions"] = std::move(positions);
  return j;
}

Json to_json(const DegreeTransportReport& report) {
  Json j;
  j["frame"] = frame(report.d, report.e);
  j["trivial_base"] = report.trivial_base;
  j["ok"] = report.ok();
  j["checked"] = report.checks.size();
  Json failures = Json::array();
  for (const auto& c : report.checks) {
    if (c.ok) continue;
    Json f;
    f["which"] = std::string(to_string(c.which));
    f["source"] = to_json(c.source);
    f["target"] = to_json(c.target);
    f["expected"] = to_json(c.expected);
    f["actual"] = to_json(c.actual);
    failures.push_back(std::move(f));
  }
  j["failures"] = std::move(failures);
  j["notes"] = report.notes;
  return j;
}

Json to_json(const DualityReport& report) {
  Json j;
  j["frame"] = frame(report.d, report.e);
  j["dual_frame"] = frame(report.e, report.d);
  j["bijective"] = report.bijective;
  j["degrees_preserved"] = report.degrees_preserved;
  j["area_preserved"] = report.area_preserved;
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(to_json(f));
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const InductionCertificate& cert) {
  Json j;
  j["frame"] = frame(cert.d, cert.e);
  j["ok"] = cert.ok();
  j["exact"] = cert.exactness.exact();
  j["bord_zero"] = cert.bord_zero;
  j["split_short_exact"] = cert.split_short_exact;
  j["degree_transport"] = cert.transport.ok();
  Json ledger;
  ledger["dim_sub"] = cert.ledger.dim_sub;
  ledger["dim_middle"] = cert.ledger.dim_middle;
  ledger["dim_open"] = cert.ledger.dim_open;
  ledger["rank_iota"] = cert.ledger.rank_iota;
  ledger["rank_kappa"] = cert.ledger.rank_kappa;
  ledger["rank_bord"] = cert.ledger.rank_bord;
  ledger["consistent"] = cert.ledger.consistent();
  j["rank_ledger"] = std::move(ledger);
  j["exactness"] = to_json(cert.exactness);
  return j;
}

Json table_json(int d, int e, bool trivial_base, const RankTable& table) {
  Json j;
  j["frame"] = frame(d, e);
  j["trivial_base"] = trivial_base;
  Json ranks = Json::array();
  for (const auto& [key, rank] : table) {
    Json r;
    r["shift"] = key.shift;
    r["twist"] = key.twist;
    if (!trivial_base) {
      Json base = Json::array();
      for (int i : key.base) base.push_back("BaseDet(" + std::to_string(i) + ")");
      r["base"] = std::move(base);
    }
    r["rank"] = rank;
    ranks.push_back(std::move(r));
  }
  j["ranks"] = std::move(ranks);
  j["total"] = table_total(table);
  return j;
}

}  // namespace gwitt::io
