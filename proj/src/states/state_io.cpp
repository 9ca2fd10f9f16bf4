#include "boundfuel/states/state_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace boundfuel {

std::string state_to_json(const DensityMatrix& rho) {
  nlohmann::json j;
  j["dims"] = rho.space().dims();
  auto re = nlohmann::json::array();
  auto im = nlohmann::json::array();
  const Matrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto rr = nlohmann::json::array();
    auto ri = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

DensityMatrix state_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const HilbertSpace space(j.at("dims").get<std::vector<int>>());
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const int n = space.dimension();
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::invalid_argument("state_from_json: row count does not match dims");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(re[static_cast<std::size_t>(r)].size()) != n ||
        static_cast<int>(im[static_cast<std::size_t>(r)].size()) != n)
      throw std::invalid_argument("state_from_json: ragged rows");
    for (int c = 0; c < n; ++c)
      m(r, c) = Complex(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>(),
                        im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>());
  }
  return DensityMatrix(space, m);
}

}  // namespace boundfuel
