#include "lieint/io.hpp"

#include <fstream>

namespace lieint {

namespace {

nlohmann::json parse_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(path + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace

AlgebraFile algebra_from_json(const nlohmann::json &j,
                              const std::string &name_hint) {
  try {
    int dim = j.at("dim").get<int>();
    auto basis = j.at("basis").get<std::vector<std::string>>();
    if (static_cast<int>(basis.size()) != dim)
      throw ParseError("algebra: 'basis' length does not match 'dim'");
    std::vector<BracketTerm> terms;
    for (const auto &entry : j.at("brackets")) {
      if (!entry.is_array() || entry.size() != 4)
        throw ParseError("algebra: each bracket must be [i, j, k, value]");
      terms.push_back({entry[0].get<int>(), entry[1].get<int>(),
                       entry[2].get<int>(), entry[3].get<double>()});
    }
    std::string name = j.value("name", name_hint);
    auto algebra = std::make_shared<LieAlgebra>(name, basis, terms);

    AlgebraFile out{algebra, std::nullopt};
    if (j.contains("decomposition")) {
      std::vector<Mat> blocks;
      for (const auto &jb : j.at("decomposition")) {
        Mat block(dim, static_cast<int>(jb.size()));
        int c = 0;
        for (const auto &jcol : jb) {
          auto col = jcol.get<std::vector<double>>();
          if (static_cast<int>(col.size()) != dim)
            throw ParseError(
                "algebra: decomposition column length must equal dim");
          for (int r = 0; r < dim; ++r)
            block(r, c) = col[r];
          ++c;
        }
        blocks.push_back(std::move(block));
      }
      out.decomposition =
          Decomposition(algebra, std::move(blocks), "file");
    }
    return out;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("algebra: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
}

AlgebraFile load_algebra_file(const std::string &path) {
  return algebra_from_json(parse_file(path), path);
}

nlohmann::json algebra_to_json(const LieAlgebra &L, const Decomposition *dec) {
  nlohmann::json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.basis_names();
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto &t : L.terms())
    brackets.push_back({t.i, t.j, t.k, t.value});
  j["brackets"] = std::move(brackets);
  if (dec) {
    nlohmann::json blocks = nlohmann::json::array();
    for (int b = 0; b < dec->num_blocks(); ++b) {
      nlohmann::json cols = nlohmann::json::array();
      for (int c = 0; c < dec->block_dim(b); ++c) {
        std::vector<double> col(L.dim());
        for (int r = 0; r < L.dim(); ++r)
          col[r] = dec->block(b)(r, c);
        cols.push_back(col);
      }
      blocks.push_back(std::move(cols));
    }
    j["decomposition"] = std::move(blocks);
  }
  return j;
}

Representation representation_from_json(const nlohmann::json &j,
                                        AlgebraPtr algebra) {
  try {
    int dim_H = j.at("dim_H").get<int>();
    bool skew = j.value("skew", false);
    std::vector<Mat> mats;
    for (const auto &jm : j.at("matrices")) {
      auto flat = jm.get<std::vector<double>>();
      if (static_cast<int>(flat.size()) != dim_H * dim_H)
        throw ParseError("representation: matrix must have dim_H^2 entries "
                         "(row-major)");
      Mat m(dim_H, dim_H);
      for (int r = 0; r < dim_H; ++r)
        for (int c = 0; c < dim_H; ++c)
          m(r, c) = flat[r * dim_H + c];
      mats.push_back(std::move(m));
    }
    std::string name = j.value("algebra", algebra->name());
    return Representation(std::move(algebra), name, dim_H, std::move(mats),
                          skew);
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("representation: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
}

Representation load_representation_file(const std::string &path,
                                        AlgebraPtr algebra) {
  return representation_from_json(parse_file(path), std::move(algebra));
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

} // namespace lieint
