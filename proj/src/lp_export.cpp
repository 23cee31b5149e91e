#include "hospfin/lp_export.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hospfin {

namespace {

std::string number(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", to_double(value));
  return buffer;
}

std::string y_name(std::size_t q, std::size_t r) { return "y_" + std::to_string(q + 1) + "_" + std::to_string(r + 1); }
std::string x_name(std::size_t c, std::size_t q) { return "x_" + std::to_string(c + 1) + "_" + std::to_string(q + 1); }
std::string o_name(std::size_t c) { return "o_" + std::to_string(c + 1); }

}  // namespace

std::string export_ilp(const ScenarioInstance& inst, const std::optional<ExcellenceSet>& fixed) {
  const std::size_t nq = inst.hospital_count();
  const std::size_t nr = inst.ward_count();
  if (fixed && (fixed->hospital_count() != nq || fixed->ward_count() != nr)) {
    throw std::invalid_argument("fixed excellence set dimensions differ from the instance");
  }

  std::vector<std::size_t> active;
  for (std::size_t c = 0; c < inst.cells().size(); ++c) {
    if (inst.cells()[c].count > 0) active.push_back(c);
  }

  std::ostringstream lp;
  lp << "\\ central financing plan: " << nq << " hospitals, " << nr << " wards, " << active.size()
     << " demand cells\n";
  lp << "Minimize\n obj:";
  bool first = true;
  auto term = [&](const Rational& coef, const std::string& var) {
    lp << (first ? " " : "\n   + ") << number(coef) << " " << var;
    first = false;
  };
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nr; ++r) term(inst.excel_cost(q, r), y_name(q, r));
  }
  for (auto c : active) {
    const auto& cell = inst.cells()[c];
    const Rational count(static_cast<long>(cell.count));
    for (std::size_t q = 0; q < nq; ++q) term(count * inst.internal_cost(cell.district, q, cell.ward), x_name(c, q));
    term(count * inst.out_cost(cell.district, cell.ward), o_name(c));
  }

  lp << "\nSubject To\n";
  for (auto c : active) {
    lp << " assign_" << c + 1 << ":";
    for (std::size_t q = 0; q < nq; ++q) lp << (q == 0 ? " " : " + ") << x_name(c, q);
    lp << " + " << o_name(c) << " = 1\n";
  }
  for (auto c : active) {
    const auto ward = inst.cells()[c].ward;
    for (std::size_t q = 0; q < nq; ++q) {
      lp << " link_" << c + 1 << "_" << q + 1 << ": " << x_name(c, q) << " - " << y_name(q, ward) << " <= 0\n";
    }
  }
  lp << " budget:";
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nr; ++r) {
      lp << (q == 0 && r == 0 ? " " : "\n   + ") << number(inst.excel_cost(q, r)) << " " << y_name(q, r);
    }
  }
  lp << " <= " << number(inst.budget()) << "\n";

  if (fixed) {
    lp << "Bounds\n";
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t r = 0; r < nr; ++r) {
        lp << " " << y_name(q, r) << " = " << (fixed->contains({q, r}) ? 1 : 0) << "\n";
      }
    }
  }

  lp << "Binary\n";
  for (std::size_t q = 0; q < nq; ++q) {
    for (std::size_t r = 0; r < nr; ++r) lp << " " << y_name(q, r) << "\n";
  }
  for (auto c : active) {
    for (std::size_t q = 0; q < nq; ++q) lp << " " << x_name(c, q) << "\n";
    lp << " " << o_name(c) << "\n";
  }
  lp << "End\n";
  return lp.str();
}

}  // namespace hospfin
