#include "kostka/jsonio.hpp"

#include <cstdio>
#include <fstream>

namespace kostka::jsonio {

using nlohmann::json;

nlohmann::json system_to_json(const shoji::KostkaSystem& ks) {
  json j;
  j["family"] = weyl::family_name(ks.params.family);
  j["n"] = ks.params.n;
  j["r"] = ks.params.r;
  j["s0"] = rat_to_string(ks.params.s0);
  j["eps_sign"] = ks.params.eps_sign;
  j["engine"] = ks.engine;
  json labels = json::array();
  for (const auto& lab : ks.labels) labels.push_back(shoji::label_string(ks.params.family, lab));
  j["labels"] = std::move(labels);
  j["blocks"] = ks.blocks;
  json k = json::array(), lam = json::array();
  for (std::size_t i = 0; i < ks.K.rows(); ++i) {
    json krow = json::array(), lrow = json::array();
    for (std::size_t c = 0; c < ks.K.cols(); ++c) {
      krow.push_back(ks.K.at(i, c).is_zero() ? "0" : ks.K.at(i, c).as_polynomial().to_string());
      lrow.push_back(ks.Lambda.at(i, c).to_string());
    }
    k.push_back(std::move(krow));
    lam.push_back(std::move(lrow));
  }
  j["K"] = std::move(k);
  j["Lambda"] = std::move(lam);
  return j;
}

shoji::KostkaSystem system_from_json(const nlohmann::json& j) {
  shoji::KostkaSystem ks;
  try {
    ks.params.family = weyl::parse_family(j.at("family").get<std::string>());
    ks.params.n = j.at("n").get<int>();
    ks.params.r = j.at("r").get<int>();
    ks.params.s0 = parse_rat(j.at("s0").get<std::string>());
    ks.params.eps_sign = j.at("eps_sign").get<int>();
    ks.engine = j.at("engine").get<std::string>();
    for (const auto& lab : j.at("labels"))
      ks.labels.push_back(shoji::parse_label(ks.params.family, lab.get<std::string>()));
    ks.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    std::size_t dim = ks.labels.size();
    const json& k = j.at("K");
    const json& lam = j.at("Lambda");
    if (k.size() != dim || lam.size() != dim) throw SchemaError("matrix shape mismatch");
    ks.K = RatMatrix(dim, dim);
    ks.Lambda = RatMatrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (k.at(i).size() != dim || lam.at(i).size() != dim)
        throw SchemaError("matrix shape mismatch");
      for (std::size_t c = 0; c < dim; ++c) {
        ks.K.at(i, c) = QRatFun(QPoly::parse(k.at(i).at(c).get<std::string>()));
        ks.Lambda.at(i, c) = QRatFun::parse(lam.at(i).at(c).get<std::string>());
      }
    }
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return ks;
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace kostka::jsonio
