#include "cantorlab/cli/reports.hpp"

#include <map>

namespace cantorlab::cli {

std::string claim_for(const std::string& check) {
  static const std::map<std::string, std::string> claims = {
      {"theorem41",
       "2^(j+a_1-3) <= D(C,q^j) D(D,q^j) <= 2^(j+a_1) for every j >= s_2"},
      {"theorem42",
       "dim_B C = -(log 2/log q) limsup o_k/s_{2k-1} and dim_B D = -(log 2/log q) limsup "
       "e_k/s_{2k}, via -log_q L_n = n - n_k + s_{2k} on [n_k, n_{k+1}) and "
       "-log_q M_n = n - m_k + s_{2k+1} on [m_k, m_{k+1})"},
      {"lemma35",
       "if lambda_{j+1} = ... = lambda_{j+m} = max_i lambda_i then "
       "D(C,L_{j+m}) / D(C,L_j) >= 2^(m-1)"},
      {"chain", "D(F,4d) <= N(F,2d) <= P(F,d) <= D(F,d)"},
      {"equihom6",
       "a generalised Cantor set is equi-homogeneous: sup_x D(B(x,d),r) <= M inf_x D(B(x,d),r) "
       "with M <= 6 on every window"},
      {"appendix",
       "D(F,8d/m1)^2 <= D(FxF,d) <= D(F,d/(2m2))^2, hence dim_B(FxF) = 2 dim_B F"},
      {"oracle-selftest",
       "greedy covers and packings of finite sets equal exhaustive optima; the Cantor sweep "
       "equals the point-by-point greedy"},
  };
  const auto it = claims.find(check);
  return it == claims.end() ? "" : it->second;
}

Json make_report(const std::string& check, const Json& params, Json entries, bool pass) {
  Json r;
  r["check"] = check;
  r["claim"] = claim_for(check);
  r["params"] = params;
  r["entries"] = std::move(entries);
  r["pass"] = pass;
  return r;
}

Json to_json(const dims::DimEstimate& est) {
  return Json{{"lower", est.lower},
              {"upper", est.upper},
              {"method", est.method_name()},
              {"range_hi", est.scale_hi.str()},
              {"range_lo", est.scale_lo.str()}};
}

Json to_json(const covers::ProfileEntry& e) {
  return Json{{"scale", e.scale.str()},
              {"countD", e.count_d},
              {"countN", e.count_n},
              {"countP", e.count_p}};
}

Json to_json(const covers::ChainEntry& e) {
  return Json{{"delta", e.delta.str()}, {"D_4delta", e.d4}, {"N_2delta", e.n2},
              {"P_delta", e.p1},        {"D_delta", e.d1},  {"pass", e.holds()}};
}

Json to_json(const covers::WindowStat& w) {
  return Json{{"delta", w.delta.str()},      {"rho", w.rho.str()},
              {"sup", w.sup_sampled},        {"inf", w.inf_sampled},
              {"sample_size", w.sample_size}, {"sup_at", w.sup_at},
              {"inf_at", w.inf_at}};
}

Json to_json(const dims::WindowSlope& w) {
  Json j = to_json(w.stat);
  j["slope"] = w.slope;
  j["self_product_lower"] = w.self_product_lower;
  return j;
}

Json to_json(const dims::WitnessEntry& w) {
  Json j{{"m", w.m}, {"found", w.found}, {"pass", w.pass}};
  if (w.found) {
    j["j"] = w.j;
    j["delta"] = w.delta.str();
    j["rho"] = w.rho.str();
    j["count_delta"] = w.count_delta;
    j["count_rho"] = w.count_rho;
    j["ratio"] = w.ratio.str();
  }
  if (!w.notice.empty()) j["notice"] = w.notice;
  return j;
}

Json to_json(const dims::ProductTheoremEntry& e) {
  Json j{{"j", e.j}, {"skipped", e.skipped}};
  if (!e.skipped) {
    j["countC"] = e.count_c;
    j["countD"] = e.count_d;
    j["product"] = e.product.get_str();
    j["lower"] = e.lower.get_str();
    j["upper"] = e.upper.get_str();
    j["pass"] = e.pass;
  }
  return j;
}

Json to_json(const dims::ExponentBlock& b) {
  return Json{{"side", setlab::side_name(b.side)},
              {"block", b.index},
              {"start", b.start},
              {"end", b.end},
              {"levels", Json::array({b.first_level, b.last_level})},
              {"base", b.base.get_str()},
              {"exponents_match", b.exponents_match},
              {"block_max", b.block_max.str()},
              {"bound", Rational(numerics::to_big(b.end), b.bound_den).str()},
              {"pass", b.pass}};
}

std::string serialize(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace cantorlab::cli
