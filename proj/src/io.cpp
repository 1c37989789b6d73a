#include "steiner/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "steiner/errors.hpp"

namespace steiner {

using nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return {buf, res.ptr};
}

std::string chain_to_json(const SteinerChain& chain, int indent) {
  json doc;
  doc["gauge"] = {{"n", chain.gauge.n}, {"R", chain.gauge.R}, {"r", chain.gauge.r}, {"d", chain.gauge.d}};
  doc["phase"] = chain.phase;
  json circles = json::array();
  for (const auto& c : chain.circles)
    circles.push_back({{"x", c.center.x()}, {"y", c.center.y()}, {"radius", c.radius}});
  doc["circles"] = std::move(circles);
  return doc.dump(indent);
}

SteinerChain chain_from_json(std::string_view text, Tolerance tol) {
  SteinerChain chain;
  try {
    const json doc = json::parse(text);
    const json& g = doc.at("gauge");
    chain.gauge = {g.at("n").get<int>(), g.at("R").get<double>(), g.at("r").get<double>(),
                   g.at("d").get<double>()};
    chain.phase = doc.at("phase").get<double>();
    for (const json& c : doc.at("circles")) {
      chain.circles.push_back(OrientedCircle::chain(
          PlanePoint(c.at("x").get<double>(), c.at("y").get<double>()), c.at("radius").get<double>()));
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("chain document: ") + e.what());
  }

  const GaugeReport report = validate_gauge(chain.gauge, tol);
  if (!report.valid) throw ChainValidationError("chain document: " + report.message);
  if (!satisfies_chain_invariants(chain, tol.scaled(chain.gauge.R)))
    throw ChainValidationError("chain document: circles do not form a Steiner chain of the gauge");
  return chain;
}

SteinerChain read_chain_file(const std::string& path, Tolerance tol) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return chain_from_json(ss.str(), tol);
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
}

std::string sweep_csv_header(int n) {
  std::string header = "phase";
  for (int k = 1; k <= n; ++k) header += ",I" + std::to_string(k);
  for (const auto& [k, m] : invariant_moment_indices(n)) {
    const std::string tag = std::to_string(k) + "_" + std::to_string(m);
    header += ",ReJ" + tag + ",ImJ" + tag;
  }
  return header;
}

void write_sweep_csv(std::ostream& os, int n, const std::vector<SweepSample>& rows) {
  os << sweep_csv_header(n) << '\n';
  for (const auto& row : rows) {
    os << format_number(row.phase);
    for (double v : row.bending) os << ',' << format_number(v);
    for (const auto& z : row.complex) os << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    os << '\n';
  }
}

std::string render_svg(const SteinerChain& chain) {
  const Gauge& g = chain.gauge;
  const double pad = 0.05 * 2.0 * g.R;
  const double stroke = g.R / 200.0;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << format_number(g.d - g.R - pad) << ' ' << format_number(-g.R - pad) << ' '
     << format_number(2.0 * g.R + 2.0 * pad) << ' ' << format_number(2.0 * g.R + 2.0 * pad) << "\">\n";

  auto circle = [&](const char* cls, const char* color, const OrientedCircle& c) {
    os << "  <circle class=\"" << cls << "\" cx=\"" << format_number(c.center.x()) << "\" cy=\""
       << format_number(c.center.y()) << "\" r=\"" << format_number(c.radius)
       << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << format_number(stroke)
       << "\"/>\n";
  };
  circle("outer-parent", "black", g.outer_parent());
  circle("inner-parent", "black", g.inner_parent());
  for (const auto& c : chain.circles) circle("chain", "steelblue", c);
  os << "</svg>\n";
  return os.str();
}

}  // namespace steiner
