#include "nuq/qcir/text_format.hpp"

#include <iomanip>
#include <istream>
#include <sstream>

#include "nuq/errors.hpp"

namespace nuq::qcir {

void write_text(std::ostream& os, const Circuit& c) {
  os << "DIMS";
  for (int d : c.dims()) os << ' ' << d;
  os << '\n';
  if (!c.label().empty()) os << "LABEL " << c.label() << '\n';
  if (!c.identity_layout()) {
    os << "LAYOUT";
    for (int l : c.layout()) os << ' ' << l;
    os << '\n';
  }
  const auto old = os.precision(17);
  for (const Gate& g : c.gates()) {
    os << name(g.kind);
    for (int w : g.wires) os << ' ' << w;
    for (double p : g.params) os << ' ' << p;
    os << '\n';
  }
  os.precision(old);
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  write_text(os, c);
  return os.str();
}

Circuit read_text(std::istream& is) {
  std::string line;
  int lineno = 0;
  Circuit c;
  bool have_dims = false;
  auto fail = [&lineno](const std::string& what) {
    throw DomainError("circuit text line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "DIMS") {
      Dims dims;
      int d;
      while (ls >> d) dims.push_back(d);
      c = Circuit(dims);
      have_dims = true;
      continue;
    }
    if (!have_dims) fail("DIMS must come first");
    if (head == "LABEL") {
      std::string rest;
      std::getline(ls >> std::ws, rest);
      c.set_label(rest);
    } else if (head == "LAYOUT") {
      std::vector<int> layout;
      int l;
      while (ls >> l) layout.push_back(l);
      try {
        c.set_layout(layout);
      } catch (const ConstructionError& e) {
        fail(e.what());
      }
    } else {
      GateKind k;
      try {
        k = kind_from_name(head);
      } catch (const DomainError& e) {
        fail(e.what());
      }
      const auto& gi = info(k);
      Gate g{k, std::vector<int>(gi.arity), std::vector<double>(gi.num_params)};
      for (int& w : g.wires)
        if (!(ls >> w)) fail("missing wire");
      for (double& p : g.params)
        if (!(ls >> p)) fail("missing parameter");
      std::string extra;
      if (ls >> extra) fail("trailing token '" + extra + "'");
      try {
        c.add(std::move(g));
      } catch (const ConstructionError& e) {
        fail(e.what());
      }
    }
  }
  if (!have_dims) throw DomainError("circuit text: no DIMS line");
  return c;
}

Circuit from_text(const std::string& s) {
  std::istringstream is(s);
  return read_text(is);
}

}  // namespace nuq::qcir
