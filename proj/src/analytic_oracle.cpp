#include "csm/analytic_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <variant>

#include "csm/observables.hpp"
#include "csm/phase.hpp"
#include "csm/protocol.hpp"

namespace csm {

namespace {

constexpr Complex kI{0.0, 1.0};

const char* axis_ket(Axis a) {
  switch (a) {
    case Axis::PlusX:
      return "+x";
    case Axis::MinusX:
      return "-x";
    case Axis::PlusY:
      return "+y";
    case Axis::MinusY:
      return "-y";
    case Axis::PlusZ:
      return "+z";
    case Axis::MinusZ:
      return "-z";
  }
  return "?";
}

std::string weight_text(Complex w) {
  if (w == Complex{1.0, 0.0}) return "+";
  if (w == Complex{-1.0, 0.0}) return "-";
  if (w == kI) return "+i";
  if (w == -kI) return "-i";
  return "?";
}

// |s1..s1>|c1> + w |s2..s2>|c2>, normalized.
struct Branches {
  Axis sat1, cen1;
  Complex w;
  Axis sat2, cen2;
  bool bell_cat = false;
};

struct Product {
  Axis sat, cen;
};

using Form = std::variant<Branches, Product>;

std::string describe(const Form& f) {
  if (const auto* p = std::get_if<Product>(&f)) {
    return std::string("|") + axis_ket(p->sat) + "..>|" + axis_ket(p->cen) + ">";
  }
  const auto& b = std::get<Branches>(f);
  return std::string("|") + axis_ket(b.sat1) + "..>|" + axis_ket(b.cen1) + "> " +
         weight_text(b.w) + " |" + axis_ket(b.sat2) + "..>|" + axis_ket(b.cen2) + ">";
}

SpinState build(const Form& f, int n_sat, Backend backend) {
  if (const auto* p = std::get_if<Product>(&f)) {
    return new_product_state(n_sat, p->sat, p->cen, backend);
  }
  const auto& b = std::get<Branches>(f);
  return superpose({1.0, 0.0}, new_product_state(n_sat, b.sat1, b.cen1, backend), b.w,
                   new_product_state(n_sat, b.sat2, b.cen2, backend));
}

Complex ipow(Complex base, int e) {
  Complex r{1.0, 0.0};
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

using A = Axis;

Form tabulated_form(int n_sat, int half) {
  const int cls = n_sat % 4;
  const bool odd = n_sat % 2 == 1;
  switch (half) {
    case 2:
      return Branches{A::PlusZ, A::PlusX, odd ? -1.0 : 1.0, A::MinusZ, A::MinusX};
    case 3:
      return Branches{A::PlusZ, A::PlusY, ipow(-kI, n_sat % 4), A::MinusZ, A::MinusY};
    case 4:
      switch (cls) {
        case 1:
          return Branches{A::PlusY, A::PlusZ, kI, A::MinusY, A::MinusZ};
        case 2:
          return Branches{A::PlusY, A::PlusY, kI, A::MinusY, A::MinusY};
        case 3:
          return Branches{A::PlusY, A::MinusZ, kI, A::MinusY, A::PlusZ};
        default:
          return Branches{A::PlusY, A::MinusY, -kI, A::MinusY, A::PlusY};
      }
    case 6:
      switch (cls) {
        case 0:
          return Branches{A::PlusX, A::PlusX, kI, A::MinusX, A::MinusX, true};
        case 2:
          return Branches{A::PlusX, A::MinusX, kI, A::MinusX, A::PlusX, true};
        case 1:
          return Branches{A::PlusX, A::PlusY, -kI, A::MinusX, A::PlusY};
        default:
          return Branches{A::PlusX, A::PlusY, kI, A::MinusX, A::PlusY};
      }
    case 7:
      return Branches{A::PlusY, A::MinusX, cls == 1 ? -kI : kI, A::MinusY, A::MinusX};
    case 8:
      return Branches{A::PlusZ, A::MinusX, -1.0, A::MinusZ, A::MinusX};
    case 12:
      if (odd) return Branches{A::PlusX, A::PlusX, -kI, A::MinusX, A::MinusX, true};
      return Product{A::MinusX, A::MinusX};
    case 24:
      return odd ? Product{A::MinusX, A::MinusX} : Product{A::PlusX, A::PlusX};
    case 48:
      return Product{A::PlusX, A::PlusX};
  }
  throw std::logic_error("no tabulated form");
}

Form derived_form(int n_sat, int half) {
  const int cls = n_sat % 4;
  const bool odd = n_sat % 2 == 1;
  switch (half) {
    case 2:
      return Branches{A::PlusZ, A::MinusX, ipow(kI, (n_sat + 1) % 4), A::MinusZ, A::PlusX};
    case 3:
      return Branches{A::PlusZ, A::MinusY, odd ? -kI : kI, A::MinusZ, A::PlusY};
    case 4:
      switch (cls) {
        case 0:
          return Branches{A::PlusY, A::MinusY, kI, A::MinusY, A::PlusY};
        case 1:
          return Branches{A::PlusY, A::MinusZ, kI, A::MinusY, A::PlusZ};
        case 2:
          return Branches{A::PlusY, A::PlusY, kI, A::MinusY, A::MinusY};
        default:
          return Branches{A::PlusY, A::PlusZ, -kI, A::MinusY, A::MinusZ};
      }
    case 6:
      if (cls == 0) return Branches{A::PlusX, A::MinusX, -kI, A::MinusX, A::PlusX, true};
      if (cls == 2) return Branches{A::PlusX, A::PlusX, -kI, A::MinusX, A::MinusX, true};
      break;
  }
  return tabulated_form(n_sat, half);
}

}  // namespace

SpinState EchoPrediction::apply(SpinState state) const {
  if (kind == Kind::Identity) return state;
  const Complex up = unit_phase(-0.5 * angle);
  const Complex down = unit_phase(0.5 * angle);
  auto amps = state.amplitudes();
  const std::size_t half = amps.size() / 2;  // central spin is the slowest index in both layouts
  for (std::size_t i = 0; i < half; ++i) {
    amps[i] *= up;
    amps[i + half] *= down;
  }
  return state;
}

std::string EchoPrediction::describe() const {
  if (kind == Kind::Identity) return "identity";
  return "central_phase(" + std::to_string(angle) + ")";
}

EchoPrediction echo_prediction(int n_sat, double g_c) {
  if (n_sat % 2 == 1) return {EchoPrediction::Kind::Identity, 0.0};
  return {EchoPrediction::Kind::CentralPhase, 2.0 * g_c};
}

const char* oracle_table_name(OracleTable table) noexcept {
  return table == OracleTable::Derived ? "derived" : "tabulated";
}

std::vector<int> tabulated_half_periods(int n_sat) {
  if (n_sat % 2 == 1) return {2, 3, 4, 6, 7, 8, 12, 24, 48};
  return {2, 3, 4, 6, 12, 24, 48};
}

OraclePrediction hodtc_state_at(int n_sat, int half_periods, OracleTable table, Backend backend) {
  if (n_sat < 1) throw std::invalid_argument("n_sat must be at least 1");
  const auto times = tabulated_half_periods(n_sat);
  if (std::find(times.begin(), times.end(), half_periods) == times.end()) {
    throw std::invalid_argument("no closed form at t = " + format_half_periods(half_periods) +
                                " for n_sat = " + std::to_string(n_sat));
  }
  const Form form = table == OracleTable::Derived ? derived_form(n_sat, half_periods)
                                                  : tabulated_form(n_sat, half_periods);
  const auto* br = std::get_if<Branches>(&form);
  return OraclePrediction{n_sat,
                          n_sat % 4,
                          half_periods,
                          table,
                          describe(form),
                          br != nullptr && br->bell_cat,
                          build(form, n_sat, backend)};
}

PredictedPeriods predicted_periods(int n_sat) noexcept {
  if (n_sat % 2 == 1) return {24, 8, 4};
  return {12, 12, 6};
}

std::string format_half_periods(int half_periods) {
  if (half_periods % 2 == 0) return std::to_string(half_periods / 2) + "T";
  return std::to_string(half_periods) + "T/2";
}

std::vector<OracleCheckRow> oracle_check(std::span<const int> n_sats, double tol,
                                         BackendChoice backend_choice) {
  const DriveParams p = DriveParams::uniform(kPi, kPi / 2.0);
  std::vector<OracleCheckRow> rows;
  for (const int n_sat : n_sats) {
    const Backend backend = resolve_backend(backend_choice, p, n_sat);
    const auto times = tabulated_half_periods(n_sat);
    std::map<int, OracleCheckRow> found;
    run_steps(p, polarized_initial_state(n_sat, backend), times.back() / 2,
              [&](const SpinState& s, int n, HalfStep where) {
                const int half = where == HalfStep::AfterKick ? 2 * n + 1 : 2 * n;
                if (std::find(times.begin(), times.end(), half) == times.end()) return;
                const OraclePrediction derived =
                    hodtc_state_at(n_sat, half, OracleTable::Derived, backend);
                const OraclePrediction tabulated =
                    hodtc_state_at(n_sat, half, OracleTable::Tabulated, backend);
                OracleCheckRow row;
                row.n_sat = n_sat;
                row.n_class = n_sat % 4;
                row.half_periods = half;
                row.formula = derived.formula;
                row.fidelity = fidelity(s, derived.state);
                row.tabulated_fidelity = fidelity(s, tabulated.state);
                row.entropy = entanglement_entropy_central(s);
                row.bell_cat = derived.bell_cat;
                row.pass = std::abs(1.0 - row.fidelity) <= tol &&
                           (!row.bell_cat || std::abs(row.entropy - std::log(2.0)) <= 1e-8);
                found[half] = row;
              });
    for (const int t : times) rows.push_back(found.at(t));
  }
  return rows;
}

}  // namespace csm
