#pragma once

// JSON forms of parameters, equilibria, reports, nullclines and sweep
// events. Exact values are written as fraction strings.

#include "lvcomp/bifurcation.hpp"
#include "lvcomp/classifier.hpp"
#include "lvcomp/dynamics.hpp"
#include "lvcomp/nullclines.hpp"
#include "lvcomp/oracle.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace lvcomp {

using Json = nlohmann::ordered_json;

/// {"b": ["3", "4"], "a": [["1", "1"], ["1", "2"]]}. Entries may be integer,
/// fraction or decimal strings, or JSON numbers (read through their decimal
/// text, so 0.1 is exactly 1/10). Throws ParseError or InvalidParams.
[[nodiscard]] SystemParams params_from_json(const Json& j);
[[nodiscard]] Json to_json(const SystemParams& params);

[[nodiscard]] Json to_json(const SurdValue& v);
[[nodiscard]] Json to_json(const RationalPoint& x);
[[nodiscard]] Json to_json(const Equilibrium& eq);
[[nodiscard]] Json to_json(const EquilibriumSet& set);
[[nodiscard]] Json to_json(const StabilityClass& cls);
[[nodiscard]] Json to_json(const DeterminantTriple& d);
[[nodiscard]] Json to_json(const ClassificationReport& report);
[[nodiscard]] Json to_json(const Nullcline& curve);
[[nodiscard]] Json to_json(const NullclineSet& set);
[[nodiscard]] Json to_json(const RootEnclosure& r);
[[nodiscard]] Json to_json(const SideSummary& side);
[[nodiscard]] Json to_json(const BifurcationEvent& ev);
[[nodiscard]] Json to_json(const ScanResult& scan);
[[nodiscard]] Json to_json(const OracleComparison& cmp);

/// Header "t,x1,x2" then one row per sample with 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& traj);

/// printf-style %.{digits}g.
[[nodiscard]] std::string format_double(double value, int digits);

}  // namespace lvcomp
