#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkinv/cycle.hpp"
#include "linkinv/graph.hpp"
#include "linkinv/lattice.hpp"
#include "linkinv/legendrian.hpp"
#include "linkinv/openbook.hpp"

namespace linkinv {

// Everything the tool can say about one input, assembled front to back; fields
// after `fillable` stay empty when the graph is not negative definite.
struct Report {
    std::string file;  // basename only, keeps output machine-independent
    ParsedInput input;
    Int determinant_value;
    bool fillable = false;  // negative definite
    std::optional<RationalityCertificate> rationality;
    std::optional<HomologyStructure> h1;
    std::optional<MilnorOpenBook> minimal_openbook;
    std::optional<SupportClass> support;
    std::optional<LegendrianDiagram> diagram;
    std::optional<AdjunctionReport> adjunction;
    std::vector<std::string> warnings;
};

Report build_report(const std::string& file, const ParsedInput& input,
                    long coeff_cap = kDefaultCoeffCap);

// Integers become JSON numbers when |x| < 2^53, decimal strings otherwise;
// keys are emitted sorted.
nlohmann::json json_int(const Int& v);
nlohmann::json json_vector(const std::vector<Int>& v);

nlohmann::json report_to_json(const Report& r);
std::string report_to_table(const Report& r);

nlohmann::json openbook_to_json(const MilnorOpenBook& ob, const SupportClass& sc);
nlohmann::json diagram_to_json(const LegendrianDiagram& d, const AdjunctionReport& adj);

}  // namespace linkinv
