#include "galetx/config_io.hpp"

#include <fstream>
#include <sstream>

namespace galetx {

FieldSpec parse_field(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    std::uint64_t p = 0;
    if (!(in >> p)) throw Error(ErrorCode::ParseError, "field prime needs a modulus");
    return FieldSpec::prime(p);
  }
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
}

PointConfiguration parse_configuration(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  FieldSpec field;
  bool have_field = false;
  std::optional<std::size_t> dim, count;
  std::vector<Vector> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "field") {
      std::string rest;
      std::getline(ls, rest);
      field = parse_field(rest);
      have_field = true;
    } else if (first == "dim") {
      std::size_t r;
      if (!(ls >> r)) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad dim");
      dim = r;
    } else if (first == "points") {
      std::size_t g;
      if (!(ls >> g)) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad points");
      count = g;
    } else {
      if (!have_field || !dim || !count) {
        throw Error(ErrorCode::ParseError, "coordinates before the field/dim/points header");
      }
      Vector row{Scalar::parse(field, first)};
      std::string tok;
      while (ls >> tok) row.push_back(Scalar::parse(field, tok));
      if (row.size() != *dim + 1) {
        throw Error(ErrorCode::DimensionMismatch,
                    "line " + std::to_string(line_no) + ": expected " + std::to_string(*dim + 1) +
                        " coordinates");
      }
      rows.push_back(std::move(row));
    }
  }
  if (!have_field || !dim || !count) throw Error(ErrorCode::ParseError, "missing field/dim/points header");
  if (rows.size() != *count) {
    throw Error(ErrorCode::DimensionMismatch, "header announces " + std::to_string(*count) +
                                                  " points, file has " + std::to_string(rows.size()));
  }
  return PointConfiguration::from_rows(field, *dim, rows);
}

PointConfiguration read_configuration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_configuration(buf.str());
}

std::string format_vector(std::span<const Scalar> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

std::string format_configuration(const PointConfiguration& cfg, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << "\n";
  os << "field " << cfg.field().to_string() << "\n";
  os << "dim " << cfg.dim() << "\n";
  os << "points " << cfg.size() << "\n";
  for (std::size_t i = 0; i < cfg.size(); ++i) os << format_vector(cfg.point(i)) << "\n";
  return os.str();
}

}  // namespace galetx
