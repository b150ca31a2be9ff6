#include "walshkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "walshkit/anf.hpp"

namespace walshkit {

AnalysisReport analyze(const TruthTable& t, bool include_spectrum) {
  AnalysisReport r;
  r.n = t.num_vars();
  r.weight = weight(t);
  r.balanced = r.n >= 1 && r.weight == t.size() / 2;

  const WalshSpectrum spectrum = walsh_transform(t);
  const SpectrumPeak peak = spectrum_peak(spectrum);
  r.max_abs_walsh = peak.max_abs;
  r.max_abs_walsh_index = peak.index;
  if (r.n >= 1) r.nonlinearity = nonlinearity(spectrum);

  const AnfTable anf = to_anf(t);
  r.degree = degree(anf);
  r.constant = is_constant(t);
  r.anf = render(anf);
  r.low_weight = check_weight_equals_nonlinearity(t);
  if (include_spectrum) {
    r.spectrum.emplace(spectrum.values().begin(), spectrum.values().end());
  }
  return r;
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{
      {"n", r.n},
      {"weight", r.weight},
      {"balanced", r.balanced},
      {"nonlinearity", r.nonlinearity ? nlohmann::json(*r.nonlinearity) : nlohmann::json()},
      {"degree", r.degree},
      {"constant", r.constant},
      {"max_abs_walsh", r.max_abs_walsh},
      {"max_abs_walsh_index", r.max_abs_walsh_index},
      {"anf", r.anf},
      {"low_weight", std::string(to_string(r.low_weight))},
  };
  if (r.spectrum) j["walsh"] = *r.spectrum;
}

void to_json(nlohmann::json& j, const MajorityReport& r) {
  auto identities = nlohmann::json::array();
  for (const auto& c : r.identities) identities.push_back({{"name", c.name}, {"pass", c.pass}});
  auto informational = nlohmann::json::array();
  for (const auto& c : r.informational) {
    informational.push_back({{"name", c.name}, {"holds", c.pass}});
  }
  j = nlohmann::json{
      {"k", r.k},
      {"weight", r.measured_weight},
      {"nonlinearity", r.measured_nonlinearity},
      {"predicted", r.predicted_nonlinearity ? nlohmann::json(*r.predicted_nonlinearity)
                                             : nlohmann::json()},
      {"identities", std::move(identities)},
      {"informational", std::move(informational)},
      {"oracle", std::string(to_string(r.oracle))},
      {"pass", r.all_pass()},
  };
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "variables:      " << r.n << '\n'
      << "weight:         " << r.weight << (r.balanced ? " (balanced)" : "") << '\n'
      << "nonlinearity:   "
      << (r.nonlinearity ? std::to_string(*r.nonlinearity) : std::string("undefined")) << '\n'
      << "degree:         " << r.degree << (r.constant ? " (constant)" : "") << '\n'
      << "max |W|:        " << r.max_abs_walsh << " at w=" << r.max_abs_walsh_index << '\n'
      << "anf:            " << r.anf << '\n'
      << "wt<=2^(n-2) =>  N=wt: " << to_string(r.low_weight) << '\n';
  if (r.spectrum) {
    out << "walsh:         ";
    for (auto v : *r.spectrum) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string to_text(const MajorityReport& r) {
  const auto passed = std::count_if(r.identities.begin(), r.identities.end(),
                                    [](const IdentityCheck& c) { return c.pass; });
  std::ostringstream out;
  out << "k=" << r.k << " weight=" << r.measured_weight << " N=" << r.measured_nonlinearity
      << " predicted="
      << (r.predicted_nonlinearity ? std::to_string(*r.predicted_nonlinearity) : std::string("-"))
      << " oracle=" << to_string(r.oracle) << ' ' << (r.all_pass() ? "PASS" : "FAIL") << " ("
      << passed << '/' << r.identities.size() << ')';
  for (const auto& c : r.identities) {
    if (!c.pass) out << "\n  failed: " << c.name;
  }
  return out.str();
}

}  // namespace walshkit
